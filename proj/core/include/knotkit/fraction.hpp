#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <tuple>

#include "knotkit/bigint.hpp"

namespace knotkit::tangle {

// Reduced rational p/q with q >= 0, extended by the formal value 1/0.
// Zero is stored as 0/1; 1/0 is the only value with a zero denominator,
// and -1/0 normalizes to 1/0. Every rational has exactly one valid
// representation, so equality is field-wise.
class Fraction {
 public:
  Fraction() : p_(0), q_(1) {}
  Fraction(Int p, Int q);

  static Fraction infinity() { return Fraction(1, 0); }
  static Fraction integer(Int n) { return Fraction(std::move(n), 1); }
  static Fraction parse(std::string_view text);

  const Int& num() const { return p_; }
  const Int& den() const { return q_; }

  bool is_infinity() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0; }
  bool is_negative() const { return p_ < 0; }

  // F + n; 1/0 is absorbing.
  Fraction plus_integer(const Int& n) const;
  // 1/(n + 1/F), the vertical-twist update.
  Fraction star(const Int& n) const;
  Fraction mirrored() const;  // -F
  Fraction inverted() const;  // 1/F
  Fraction rotated() const;   // -1/F

  std::string str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  // Structural order (for containers), not numeric order.
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return std::tie(a.p_, a.q_) < std::tie(b.p_, b.q_);
  }

 private:
  Int p_;
  Int q_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace knotkit::tangle
