#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotkit/fraction.hpp"

namespace knotkit::tangle {

// Construction word of a rational tangle: a base tangle ([0] or [inf])
// followed by twist operations. Words are never simplified; isotopy is
// decided through fractions only.
enum class BaseTangle { Zero, Infinity };

struct AddInteger {
  Int k;
};
struct StarVertical {
  Int k;
};
struct Mirror {};
struct Rotate {};
struct Invert {};

using TwistStep = std::variant<AddInteger, StarVertical, Mirror, Rotate, Invert>;

struct TwistWord {
  BaseTangle base = BaseTangle::Zero;
  std::vector<TwistStep> steps;
};

// Exact fraction of the tangle described by `word`. Total: the formal
// rules 1/inf = 0 and inf + n = inf cover every step.
Fraction fraction_of(const TwistWord& word);

// Odd length, interior entries nonzero, all entries >= 0 or all <= 0
// (the leading entry may be zero).
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<Int> entries);

  const std::vector<Int>& entries() const { return entries_; }
  Fraction evaluate() const;
  std::string str() const;  // "[a1,a2,...,an]"

  static ContinuedFraction parse(std::string_view text);

 private:
  std::vector<Int> entries_;
};

// Deterministic expansion: Euclidean steps on |f|, entries negated for
// f < 0, with an odd-length fix-up on the last entry. Rejects 1/0.
ContinuedFraction canonical_continued_fraction(const Fraction& f);

class RationalTangle {
 public:
  static RationalTangle from_word(TwistWord word);
  static RationalTangle from_continued_fraction(const ContinuedFraction& cf);
  static RationalTangle zero();      // [0]
  static RationalTangle infinity();  // [inf]

  const Fraction& fraction() const { return fraction_; }
  const TwistWord& word() const { return word_; }

  RationalTangle plus_integer(Int n) const;
  RationalTangle star(Int n) const;
  RationalTangle mirrored() const;
  RationalTangle rotated() const;
  RationalTangle inverted() const;

 private:
  RationalTangle(Fraction f, TwistWord w)
      : fraction_(std::move(f)), word_(std::move(w)) {}

  Fraction fraction_;  // always equals fraction_of(word_)
  TwistWord word_;
};

// Rational tangles are isotopic exactly when their fractions agree.
bool tangles_isotopic(const RationalTangle& a, const RationalTangle& b);

}  // namespace knotkit::tangle
