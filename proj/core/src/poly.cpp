#include "knotkit/poly.hpp"

#include <algorithm>
#include <utility>

#include "knotkit/errors.hpp"

namespace knotkit::poly {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(Int c, int degree) {
  std::vector<Int> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return IntPoly(std::move(coeffs));
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> out = coeffs_;
  for (Int& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Int a = coeffs_[i];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    Int mag = abs_int(a);
    if (i == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return out;
}

std::string GaussInt::str() const {
  if (im == 0) return re.str();
  std::string out = re == 0 ? "" : re.str();
  out += im < 0 ? "-" : (out.empty() ? "" : "+");
  Int mag = abs_int(im);
  if (mag != 1) out += mag.str();
  return out + "i";
}

GaussInt eval_gauss(const IntPoly& p, const GaussInt& z) {
  GaussInt acc{0, 0};
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * z + GaussInt{p.coeff(i), 0};
  return acc;
}

IntPoly conway_kn(int n) {
  if (n < 1) throw DomainError("family index must be >= 1");
  IntPoly value({Int(1), Int(0), Int(0), Int(0), Int(-1), Int(0), Int(-1)});
  const IntPoly one = IntPoly::constant(1);
  const IntPoly z2 = IntPoly::monomial(1, 2);
  for (int i = 2; i <= n; ++i) value = one + z2 - z2 * value;
  return value;
}

Int alexander_at_minus1(const IntPoly& conway) {
  GaussInt v = eval_gauss(conway, GaussInt{0, 2});
  if (!v.is_real())
    throw DomainError("evaluation at 2i is not real: not a knot polynomial");
  return v.re;
}

bool skein_verify(const IntPoly& plus, const IntPoly& minus, const IntPoly& zero) {
  return plus - minus == IntPoly::monomial(1, 1) * zero;
}

const std::vector<KnownPolynomial>& known_polynomial_table() {
  static const std::vector<KnownPolynomial> table = {
      {"unknot", IntPoly::constant(1), true},
      {"trefoil", IntPoly({Int(1), Int(0), Int(1)}), true},
      {"figure-eight", IntPoly({Int(1), Int(0), Int(-1)}), true},
      {"hopf", IntPoly::monomial(1, 1), false},
  };
  return table;
}

const std::vector<SkeinTriple>& known_skein_triples() {
  const auto poly = [](std::string_view name) {
    for (const KnownPolynomial& k : known_polynomial_table())
      if (k.name == name) return k.conway;
    throw std::logic_error("unknown table entry");
  };
  static const std::vector<SkeinTriple> table = {
      // Crossing change on the unknot with a split resolution.
      {"unknot/unknot/split", poly("unknot"), poly("unknot"), IntPoly()},
      // Trefoil crossing switched to the unknot through the Hopf link.
      {"trefoil/unknot/hopf", poly("trefoil"), poly("unknot"), poly("hopf")},
      // Figure-eight sits on the other side of the same resolution.
      {"unknot/figure-eight/hopf", poly("unknot"), poly("figure-eight"),
       poly("hopf")},
  };
  return table;
}

}  // namespace knotkit::poly
