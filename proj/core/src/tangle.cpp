#include "knotkit/tangle.hpp"

#include <utility>

#include "knotkit/errors.hpp"

namespace knotkit::tangle {

Fraction fraction_of(const TwistWord& word) {
  Fraction f = word.base == BaseTangle::Zero ? Fraction() : Fraction::infinity();
  for (const TwistStep& step : word.steps) {
    f = std::visit(
        [&](const auto& s) -> Fraction {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, AddInteger>) return f.plus_integer(s.k);
          if constexpr (std::is_same_v<S, StarVertical>) return f.star(s.k);
          if constexpr (std::is_same_v<S, Mirror>) return f.mirrored();
          if constexpr (std::is_same_v<S, Rotate>) return f.rotated();
          if constexpr (std::is_same_v<S, Invert>) return f.inverted();
        },
        step);
  }
  return f;
}

ContinuedFraction::ContinuedFraction(std::vector<Int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() % 2 == 0)
    throw DomainError("continued fraction must have odd length");
  bool has_pos = false;
  bool has_neg = false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0 && entries_[i] == 0)
      throw DomainError("interior continued fraction entry is zero");
    has_pos |= entries_[i] > 0;
    has_neg |= entries_[i] < 0;
  }
  if (has_pos && has_neg)
    throw DomainError("continued fraction entries must share a sign");
}

Fraction ContinuedFraction::evaluate() const {
  // Back-to-front fold a_i + 1/x; interior entries are nonzero, so the
  // running value never needs the formal infinity.
  Fraction x = Fraction::integer(entries_.back());
  for (std::size_t i = entries_.size() - 1; i-- > 0;)
    x = x.inverted().plus_integer(entries_[i]);
  return x;
}

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out + "]";
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  const auto bad = [&] {
    return ParseError("malformed continued fraction '" + std::string(text) +
                      "' (expected [a1,a2,...,an])");
  };
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') throw bad();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Int> entries;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok =
        body.substr(pos, comma == std::string_view::npos ? body.size() - pos
                                                         : comma - pos);
    if (tok.empty()) throw bad();
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) throw bad();
    for (std::size_t i = start; i < tok.size(); ++i)
      if (tok[i] < '0' || tok[i] > '9') throw bad();
    entries.emplace_back(std::string(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ContinuedFraction(std::move(entries));
}

ContinuedFraction canonical_continued_fraction(const Fraction& f) {
  if (f.is_infinity())
    throw DomainError("1/0 has no continued fraction expansion");
  if (f.is_zero()) return ContinuedFraction({Int(0)});

  bool negate = f.is_negative();
  Int p = abs_int(f.num());
  Int q = f.den();

  // Euclidean expansion of p/q > 0: nonnegative entries, only the first
  // may be zero, the last is >= 2 unless the expansion is a single entry.
  std::vector<Int> entries;
  while (true) {
    Int a = p / q;
    entries.push_back(a);
    Int r = p - a * q;
    if (r == 0) break;
    p = q;
    q = r;
  }

  if (entries.size() % 2 == 0) {
    Int last = entries.back();
    if (last > 1) {
      entries.back() = last - 1;
      entries.emplace_back(1);
    } else {
      entries.pop_back();
      entries.back() += 1;
    }
  }

  if (negate)
    for (Int& a : entries) a = -a;
  return ContinuedFraction(std::move(entries));
}

RationalTangle RationalTangle::from_word(TwistWord word) {
  Fraction f = fraction_of(word);
  return RationalTangle(std::move(f), std::move(word));
}

RationalTangle RationalTangle::from_continued_fraction(const ContinuedFraction& cf) {
  // [a1,...,an] unfolds as ((([an] * 1/[a(n-1)]) + [a(n-2)]) * ...) + [a1].
  const std::vector<Int>& a = cf.entries();
  TwistWord word;
  word.base = BaseTangle::Zero;
  word.steps.emplace_back(AddInteger{a.back()});
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    if ((a.size() - 1 - i) % 2 == 1)
      word.steps.emplace_back(StarVertical{a[i]});
    else
      word.steps.emplace_back(AddInteger{a[i]});
  }
  return from_word(std::move(word));
}

RationalTangle RationalTangle::zero() {
  return RationalTangle(Fraction(), TwistWord{BaseTangle::Zero, {}});
}

RationalTangle RationalTangle::infinity() {
  return RationalTangle(Fraction::infinity(), TwistWord{BaseTangle::Infinity, {}});
}

RationalTangle RationalTangle::plus_integer(Int n) const {
  TwistWord w = word_;
  w.steps.emplace_back(AddInteger{n});
  return RationalTangle(fraction_.plus_integer(n), std::move(w));
}

RationalTangle RationalTangle::star(Int n) const {
  TwistWord w = word_;
  w.steps.emplace_back(StarVertical{n});
  return RationalTangle(fraction_.star(n), std::move(w));
}

RationalTangle RationalTangle::mirrored() const {
  TwistWord w = word_;
  w.steps.emplace_back(Mirror{});
  return RationalTangle(fraction_.mirrored(), std::move(w));
}

RationalTangle RationalTangle::rotated() const {
  TwistWord w = word_;
  w.steps.emplace_back(Rotate{});
  return RationalTangle(fraction_.rotated(), std::move(w));
}

RationalTangle RationalTangle::inverted() const {
  TwistWord w = word_;
  w.steps.emplace_back(Invert{});
  return RationalTangle(fraction_.inverted(), std::move(w));
}

bool tangles_isotopic(const RationalTangle& a, const RationalTangle& b) {
  return a.fraction() == b.fraction();
}

}  // namespace knotkit::tangle
