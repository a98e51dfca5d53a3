#include "knotkit/fraction.hpp"

#include <ostream>

#include "knotkit/errors.hpp"

namespace knotkit::tangle {

Fraction::Fraction(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw DomainError("0/0 is not a fraction");
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  Int g = gcd(abs_int(p_), q_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
  }
  // A single formal infinity: -1/0 and 1/0 coincide.
  if (q_ == 0) p_ = 1;
}

Fraction Fraction::plus_integer(const Int& n) const {
  return Fraction(p_ + n * q_, q_);
}

Fraction Fraction::star(const Int& n) const {
  return Fraction(p_, n * p_ + q_);
}

Fraction Fraction::mirrored() const { return Fraction(-p_, q_); }

Fraction Fraction::inverted() const { return Fraction(q_, p_); }

Fraction Fraction::rotated() const { return Fraction(-q_, p_); }

std::string Fraction::str() const { return p_.str() + "/" + q_.str(); }

Fraction Fraction::parse(std::string_view text) {
  const auto bad = [&] {
    return ParseError("malformed fraction '" + std::string(text) +
                      "' (expected p or p/q)");
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  std::string_view ns = text.substr(0, slash);
  std::string_view ds =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  const auto to_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return Int(std::string(s));
  };
  Int p = to_int(ns);
  Int q = to_int(ds);
  if (p == 0 && q == 0) throw bad();
  return Fraction(std::move(p), std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.str();
}

}  // namespace knotkit::tangle
