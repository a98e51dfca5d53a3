#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotkit/bigint.hpp"

namespace knotkit::poly {

// Dense integer polynomial, coefficients ascending in the variable z,
// trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;

  std::string str() const;  // "1 - z^4 - z^6"

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

struct GaussInt {
  Int re;
  Int im;

  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool is_real() const { return im == 0; }
  std::string str() const;

  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

// Exact Horner evaluation over the Gaussian integers.
GaussInt eval_gauss(const IntPoly& p, const GaussInt& z);

// Conway polynomial of the n-th member of the twisted knot family:
// base -z^6 - z^4 + 1, recursion 1 + z^2 - z^2 * previous.
IntPoly conway_kn(int n);

// Alexander value at -1 obtained as the Conway evaluation at 2i, which
// is real for knot polynomials; |result| is the knot determinant.
// Rejects polynomials whose evaluation has a nonzero imaginary part.
Int alexander_at_minus1(const IntPoly& conway);

// Exact check of plus - minus == z * zero.
bool skein_verify(const IntPoly& plus, const IntPoly& minus, const IntPoly& zero);

// Stored classical values used for cross-checks.
struct KnownPolynomial {
  std::string_view name;
  IntPoly conway;
  bool knot;  // false for the Hopf link
};
const std::vector<KnownPolynomial>& known_polynomial_table();

struct SkeinTriple {
  std::string_view name;
  IntPoly plus, minus, zero;
};
const std::vector<SkeinTriple>& known_skein_triples();

}  // namespace knotkit::poly
