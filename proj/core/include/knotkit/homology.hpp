#pragma once

#include <string>
#include <vector>

#include "knotkit/fraction.hpp"

namespace knotkit::homology {

using tangle::Fraction;

// Finite abelian group stored in invariant-factor form: cyclic orders
// d1 | d2 | ... | dk, each >= 2. The empty list is the trivial group.
// Canonicalization from an arbitrary multiset of cyclic orders uses
// iterated gcd/lcm pairing and needs no factorization.
class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group

  static FinAbGroup trivial() { return FinAbGroup(); }
  static FinAbGroup cyclic(Int order);  // order >= 1; Z_1 is trivial
  static FinAbGroup from_orders(std::vector<Int> orders);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  Int order() const;
  std::string str() const;  // "0" or "Z2+Z6"

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<Int> factors_;
};

// H1 of the double branched cover of a numerator closure: Z_|p| for a
// knot-parity fraction p/q (trivial when |p| = 1). Rejects even
// numerators; links are out of scope here.
FinAbGroup lens_h1(const Fraction& f);

// Double cover is the only computed case; other sheet counts are
// declared but rejected.
FinAbGroup branched_cover_h1(const Fraction& f, int sheets);

FinAbGroup direct_sum(const FinAbGroup& g, const FinAbGroup& h);

// Number of invariant factors; equivalently the largest l-rank over
// primes l.
int min_generators(const FinAbGroup& g);

// Independent oracle: enumerates generator tuples of increasing size
// over the explicit product group until one generates. Requires
// |G| <= 10000.
int brute_force_min_generators(const FinAbGroup& g);

// |G|; equals |Delta(-1)| of the knot whose double-cover homology is G.
Int determinant(const FinAbGroup& g);

}  // namespace knotkit::homology
