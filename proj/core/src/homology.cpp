#include "knotkit/homology.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "knotkit/errors.hpp"
#include "knotkit/knots.hpp"

namespace knotkit::homology {

FinAbGroup FinAbGroup::cyclic(Int order) {
  if (order < 1) throw DomainError("cyclic order must be positive");
  FinAbGroup g;
  if (order > 1) g.factors_.push_back(std::move(order));
  return g;
}

FinAbGroup FinAbGroup::from_orders(std::vector<Int> orders) {
  FinAbGroup g;
  for (Int& d : orders) {
    if (d < 1) throw DomainError("cyclic order must be positive");
    if (d > 1) g.factors_.push_back(std::move(d));
  }
  // Pairwise gcd/lcm replacement until every adjacent pair divides;
  // the multiset of orders and the product are preserved throughout.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(g.factors_.begin(), g.factors_.end());
    for (std::size_t i = 0; i + 1 < g.factors_.size(); ++i) {
      for (std::size_t j = i + 1; j < g.factors_.size(); ++j) {
        if (g.factors_[j] % g.factors_[i] == 0) continue;
        Int a = gcd(g.factors_[i], g.factors_[j]);
        Int b = g.factors_[i] / a * g.factors_[j];
        g.factors_[i] = std::move(a);
        g.factors_[j] = std::move(b);
        changed = true;
      }
    }
  }
  std::erase(g.factors_, Int(1));
  std::sort(g.factors_.begin(), g.factors_.end());
  return g;
}

Int FinAbGroup::order() const {
  Int n = 1;
  for (const Int& d : factors_) n *= d;
  return n;
}

std::string FinAbGroup::str() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "+";
    out += "Z" + factors_[i].str();
  }
  return out;
}

FinAbGroup lens_h1(const Fraction& f) {
  if (knots::closure_parity(f) != knots::Parity::Knot)
    throw DomainError("double-cover homology of the link closure " + f.str() +
                      " is out of scope");
  return FinAbGroup::cyclic(abs_int(f.num()));
}

FinAbGroup branched_cover_h1(const Fraction& f, int sheets) {
  if (sheets == 2) return lens_h1(f);
  throw DomainError("only the 2-fold branched cover is computed (requested " +
                    std::to_string(sheets) + ")");
}

FinAbGroup direct_sum(const FinAbGroup& g, const FinAbGroup& h) {
  std::vector<Int> orders = g.invariant_factors();
  orders.insert(orders.end(), h.invariant_factors().begin(),
                h.invariant_factors().end());
  return FinAbGroup::from_orders(std::move(orders));
}

int min_generators(const FinAbGroup& g) {
  return static_cast<int>(g.invariant_factors().size());
}

int brute_force_min_generators(const FinAbGroup& g) {
  constexpr long long kOrderCap = 10000;
  Int big_order = g.order();
  if (big_order > kOrderCap)
    throw DomainError("brute-force search capped at group order 10000");
  const long long order = big_order.convert_to<long long>();
  if (order == 1) return 0;

  std::vector<long long> radix;
  for (const Int& d : g.invariant_factors())
    radix.push_back(d.convert_to<long long>());
  const int parts = static_cast<int>(radix.size());

  // Element index <-> mixed-radix coordinates; addition tables would be
  // order^2, so add on the fly.
  std::vector<long long> stride(parts, 1);
  for (int i = 1; i < parts; ++i) stride[i] = stride[i - 1] * radix[i - 1];
  const auto add = [&](long long x, long long y) {
    long long out = 0;
    for (int i = 0; i < parts; ++i) {
      long long c = ((x / stride[i]) % radix[i] + (y / stride[i]) % radix[i]) %
                    radix[i];
      out += c * stride[i];
    }
    return out;
  };

  const auto closure_size = [&](const std::vector<long long>& gens,
                                std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<long long> frontier{0};
    seen[0] = 1;
    long long count = 1;
    while (!frontier.empty()) {
      long long v = frontier.back();
      frontier.pop_back();
      for (long long gen : gens) {
        long long w = add(v, gen);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          frontier.push_back(w);
        }
      }
    }
    return count;
  };

  std::vector<char> seen(order);
  std::vector<long long> gens;
  // Ascending tuples; a minimal generating set, sorted, always has each
  // member outside the closure of the earlier ones, so pruning on that
  // keeps the search complete.
  const std::function<bool(int, long long, long long)> search =
      [&](int remaining, long long from, long long reached) {
        if (remaining == 0) return reached == order;
        for (long long e = from; e < order; ++e) {
          gens.push_back(e);
          long long size = closure_size(gens, seen);
          if (size > reached && search(remaining - 1, e + 1, size)) return true;
          gens.pop_back();
        }
        return false;
      };

  for (int k = 1; k <= parts; ++k) {
    gens.clear();
    if (search(k, 1, 1)) return k;
  }
  throw std::logic_error("invariant factors always generate");
}

Int determinant(const FinAbGroup& g) { return g.order(); }

}  // namespace knotkit::homology
