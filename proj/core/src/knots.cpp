#include "knotkit/knots.hpp"

#include <utility>

#include "knotkit/errors.hpp"

namespace knotkit::knots {

namespace {

Int mod_inverse(Int a, const Int& m) {
  // m >= 2 and gcd(a, m) = 1.
  Int r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int div = r0 / r1;
    Int r2 = r0 - div * r1;
    Int s2 = s0 - div * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Int inv = s0 % m;
  if (inv < 0) inv += m;
  return inv;
}

// Mirror-normalized residue: for p/q with odd |p| >= 3, the residue of
// q modulo |p| with negative fractions folded to p - q.
Int folded_residue(const Fraction& f) {
  Int p = abs_int(f.num());
  Int q = f.den() % p;
  if (f.is_negative()) q = p - q;
  return q;
}

}  // namespace

Parity closure_parity(const Fraction& f) {
  return abs_int(f.num()) % 2 == 1 ? Parity::Knot : Parity::TwoComponentLink;
}

RationalClosure numerator(const tangle::RationalTangle& t) {
  return numerator(t.fraction());
}

RationalClosure numerator(const Fraction& f) {
  return RationalClosure{f, closure_parity(f)};
}

RationalKnotClass RationalKnotClass::from_fraction(const Fraction& f) {
  if (closure_parity(f) != Parity::Knot)
    throw DomainError("fraction " + f.str() +
                      " closes to a two-component link, not a knot");
  RationalKnotClass cls;
  Int p = abs_int(f.num());
  if (p == 1) return cls;  // every 1/q and 1/0 closure is the unknot
  Int q = folded_residue(f);
  Int qi = mod_inverse(q, p);
  cls.p_ = std::move(p);
  cls.q_ = q < qi ? std::move(q) : std::move(qi);
  return cls;
}

Fraction RationalKnotClass::fraction() const { return Fraction(p_, q_); }

std::string RationalKnotClass::str() const {
  if (is_unknot()) return "unknot";
  return p_.str() + "/" + q_.str();
}

bool knots_equivalent(const Fraction& a, const Fraction& b) {
  if (closure_parity(a) != Parity::Knot || closure_parity(b) != Parity::Knot)
    throw DomainError("knot equivalence is defined for odd-numerator closures");
  Int pa = abs_int(a.num());
  Int pb = abs_int(b.num());
  if (pa != pb) return false;
  if (pa == 1) return true;  // all unknots
  Int qa = folded_residue(a);
  Int qb = folded_residue(b);
  return qa == qb || (qa * qb) % pa == 1;
}

namespace {

Fraction closure(const Fraction& f, bool double_twist) {
  if (f.is_zero())
    throw DomainError("closures are undefined for the trivial pattern 0/1");
  Int p = abs_int(f.num());
  Int q = f.den();
  Int num = double_twist ? Int(p + 2 * q) : Int(p + q);
  Int den = double_twist ? Int(p + q) : q;
  if (f.is_negative()) num = -num;
  return Fraction(std::move(num), std::move(den));
}

}  // namespace

Fraction closure_c1(const Fraction& f) { return closure(f, false); }

Fraction closure_c2(const Fraction& f) { return closure(f, true); }

RationalClosure sphere1_witness(const Fraction& f) {
  if (f.is_zero())
    throw DomainError("no witness for the trivial pattern 0/1");
  if (f.is_infinity()) return numerator(Fraction(3, 1));  // the trefoil
  bool both_odd = abs_int(f.num()) % 2 == 1 && f.den() % 2 == 1;
  return numerator(both_odd ? closure_c2(f) : closure_c1(f));
}

}  // namespace knotkit::knots
