#pragma once

#include <string>
#include <tuple>

#include "knotkit/fraction.hpp"
#include "knotkit/tangle.hpp"

namespace knotkit::knots {

using tangle::Fraction;

enum class Parity { Knot, TwoComponentLink };

// Numerator closure of a rational tangle: the closed link together with
// its component count. Odd numerator gives a knot, even a 2-component
// link; 1/0 closes to the unknot and 0/1 to the 2-component unlink.
struct RationalClosure {
  Fraction fraction;
  Parity parity = Parity::Knot;
};

Parity closure_parity(const Fraction& f);
RationalClosure numerator(const tangle::RationalTangle& t);
RationalClosure numerator(const Fraction& f);

// Canonical form of a two-bridge knot: the unknot, or a pair (p, q)
// with p odd >= 3, 0 < q < p, gcd(p, q) = 1. A negative input fraction
// is folded to its mirror representative q -> p - q before the usual
// q ~ q^-1 (mod p) reduction, so mirror pairs stay distinct unless the
// congruence identifies them.
class RationalKnotClass {
 public:
  static RationalKnotClass unknot() { return RationalKnotClass(); }
  static RationalKnotClass from_fraction(const Fraction& f);

  bool is_unknot() const { return p_ == 1; }
  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  Fraction fraction() const;  // canonical representative p/q
  std::string str() const;    // "unknot" or "p/q"

  friend bool operator==(const RationalKnotClass&, const RationalKnotClass&) = default;
  friend bool operator<(const RationalKnotClass& a, const RationalKnotClass& b) {
    return std::tie(a.p_, a.q_) < std::tie(b.p_, b.q_);
  }

 private:
  RationalKnotClass() = default;
  Int p_{1};
  Int q_{0};
};

// Ambient isotopy of numerator closures, decided by the congruence
// q = m or q*m = 1 (mod p) on mirror-normalized fractions. Rejects
// even-numerator (link) inputs.
bool knots_equivalent(const Fraction& a, const Fraction& b);

// The two tangle closures used to seed unit spheres of rational moves:
// C1(p/q) = (p+q)/q and C2(p/q) = (p+2q)/(p+q), with the mirrored
// formulas -(p'+q')/q' and -(p'+2q')/(p'+q') for negative fractions.
// Both reject 0/1.
Fraction closure_c1(const Fraction& f);
Fraction closure_c2(const Fraction& f);

// A knot adjacent to the unknot under the r(p/q)-move, chosen by the
// parity of p and q: C2 when both are odd, C1 otherwise, and the
// trefoil for 1/0. The result always has odd |numerator| >= 3.
RationalClosure sphere1_witness(const Fraction& f);

}  // namespace knotkit::knots
