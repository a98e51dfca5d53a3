// Acceptance suite: every release criterion as an executable check, one
// pass/fail line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "knotkit/ends.hpp"
#include "knotkit/errors.hpp"
#include "knotkit/gordian.hpp"
#include "knotkit/homology.hpp"
#include "knotkit/knots.hpp"
#include "knotkit/poly.hpp"
#include "knotkit/tangle.hpp"

using knotkit::Int;
using knotkit::abs_int;
using knotkit::tangle::Fraction;
namespace tangle = knotkit::tangle;
namespace knots = knotkit::knots;
namespace homology = knotkit::homology;
namespace poly = knotkit::poly;
namespace gordian = knotkit::gordian;
namespace ends = knotkit::ends;

namespace {

struct Check {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double run_ms(const std::function<void(Check&)>& body, Check& check) {
  auto start = std::chrono::steady_clock::now();
  body(check);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

// ---------------------------------------------------------------------------

void criterion1_family_values(Check& c) {
  const poly::GaussInt two_i{0, 2};
  Int prev = poly::eval_gauss(poly::conway_kn(1), two_i).re;
  c.require(prev == 49, "eval of the base polynomial at 2i must be 49");
  for (int n = 2; n <= 30; ++n) {
    Int value = poly::alexander_at_minus1(poly::conway_kn(n));
    c.require(value == -3 + 4 * prev,
              "value recursion fails at n = " + std::to_string(n));
    c.require(abs_int(value) > 1,
              "|value| must exceed 1 at n = " + std::to_string(n));
    prev = value;
  }
}

void criterion2_recursion_identity(Check& c) {
  const poly::IntPoly one = poly::IntPoly::constant(1);
  const poly::IntPoly z2 = poly::IntPoly::monomial(1, 2);
  poly::IntPoly prev = poly::conway_kn(1);
  for (int n = 2; n <= 30; ++n) {
    poly::IntPoly cur = poly::conway_kn(n);
    c.require(cur == one + z2 - z2 * prev,
              "polynomial recursion fails at n = " + std::to_string(n));
    prev = std::move(cur);
  }
}

std::vector<Fraction> odd_fraction_sweep(int max_p) {
  std::vector<Fraction> out;
  for (int p = 1; p <= max_p; p += 2)
    for (int q = 0; q <= p; ++q) {
      if (q == 0 && p != 1) continue;
      if (gcd(Int(p), Int(q)) > 1) continue;
      out.emplace_back(p, q);
      if (q != 0) out.emplace_back(-p, q);
    }
  return out;
}

void criterion3_classification(Check& c) {
  c.require(knots::knots_equivalent(Fraction(5, 2), Fraction(5, 3)),
            "5/2 and 5/3 must close to the same knot");
  c.require(!knots::knots_equivalent(Fraction(3, 1), Fraction(3, 2)),
            "3/1 and 3/2 must stay distinct");

  const std::vector<Fraction> sweep = odd_fraction_sweep(49);
  const std::size_t n = sweep.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rel(n * words, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (knots::knots_equivalent(sweep[i], sweep[j]))
        rel[i * words + j / 64] |= std::uint64_t(1) << (j % 64);

  const auto get = [&](std::size_t i, std::size_t j) {
    return (rel[i * words + j / 64] >> (j % 64)) & 1;
  };
  bool reflexive = true, symmetric = true, transitive = true;
  for (std::size_t i = 0; i < n; ++i) {
    reflexive &= get(i, i) != 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (get(i, j) != get(j, i)) symmetric = false;
      if (!get(i, j)) continue;
      // row_j must be a subset of row_i, covering every triple through j
      for (std::size_t w = 0; w < words; ++w)
        if (rel[j * words + w] & ~rel[i * words + w]) transitive = false;
    }
  }
  c.require(reflexive, "equivalence must be reflexive on the sweep");
  c.require(symmetric, "equivalence must be symmetric on the sweep");
  c.require(transitive, "equivalence must be transitive on the sweep");
}

void criterion4_closures(Check& c) {
  for (int p = -50; p <= 50; ++p) {
    for (int q = 0; q <= 50; ++q) {
      if (p == 0 || (q == 0 && p != 1)) continue;
      if (gcd(Int(std::abs(p)), Int(q)) > 1) continue;
      const Fraction f(p, q);
      const Int pp = std::abs(p), qq = q;
      const int sign = p < 0 ? -1 : 1;
      const Fraction c1 = knots::closure_c1(f);
      const Fraction c2 = knots::closure_c2(f);
      c.require(c1.num() == sign * (pp + qq) && c1.den() == qq,
                "single-twist closure wrong at " + f.str());
      c.require(c2.num() == sign * (pp + 2 * qq) && c2.den() == pp + qq,
                "double-twist closure wrong at " + f.str());

      knots::RationalClosure w = knots::sphere1_witness(f);
      c.require(w.parity == knots::Parity::Knot,
                "witness parity wrong at " + f.str());
      c.require(abs_int(w.fraction.num()) % 2 == 1 &&
                    abs_int(w.fraction.num()) >= 3,
                "witness numerator wrong at " + f.str());
      c.require(homology::min_generators(homology::lens_h1(w.fraction)) == 1,
                "witness e2 wrong at " + f.str());
    }
  }
}

void partitions(int n, int max, std::vector<std::vector<int>>& out,
                std::vector<int>& cur) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, out, cur);
    cur.pop_back();
  }
}

std::vector<homology::FinAbGroup> groups_of_order(long long n) {
  std::vector<std::vector<Int>> shapes{{}};
  for (long long p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    int exp = 0;
    while (n % p == 0) {
      n /= p;
      ++exp;
    }
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(exp, exp, parts, cur);
    std::vector<std::vector<Int>> next;
    for (const std::vector<Int>& shape : shapes)
      for (const std::vector<int>& part : parts) {
        std::vector<Int> grown = shape;
        for (int e : part) {
          Int pe = 1;
          for (int i = 0; i < e; ++i) pe *= p;
          grown.push_back(pe);
        }
        next.push_back(std::move(grown));
      }
    shapes = std::move(next);
  }
  std::vector<homology::FinAbGroup> out;
  for (std::vector<Int>& shape : shapes)
    out.push_back(homology::FinAbGroup::from_orders(std::move(shape)));
  return out;
}

void criterion5_homology(Check& c) {
  for (long long order = 1; order <= 36; ++order)
    for (const homology::FinAbGroup& g : groups_of_order(order))
      c.require(homology::min_generators(g) ==
                    homology::brute_force_min_generators(g),
                "generator counts disagree on a group of order " +
                    std::to_string(order));

  for (int p = 1; p <= 99; p += 2)
    for (int q = 1; q < std::max(p, 2); ++q) {
      if (gcd(Int(p), Int(q)) > 1) continue;
      c.require(homology::determinant(homology::lens_h1(Fraction(p, q))) == p,
                "lens determinant wrong at " + std::to_string(p));
    }

  const Int via_lens = homology::determinant(homology::lens_h1(Fraction(3, 1)));
  const Int via_poly =
      abs_int(poly::alexander_at_minus1(poly::IntPoly({Int(1), Int(0), Int(1)})));
  c.require(via_lens == 3 && via_poly == 3,
            "trefoil determinant must be 3 on both routes");
}

void criterion6_lower_estimates(Check& c) {
  gordian::SymbolicKnot sum;
  const gordian::SymbolicKnot trefoil =
      gordian::SymbolicKnot::rational(Fraction(3, 1));
  for (int k = 0; k <= 10; ++k) {
    c.require(gordian::distance_lower_bound(sum, gordian::SymbolicKnot::unknot(),
                                            gordian::MovePattern::x()) ==
                  gordian::BoundRat(k),
              "crossing-change bound wrong at k = " + std::to_string(k));
    c.require(gordian::distance_lower_bound(sum, gordian::SymbolicKnot::unknot(),
                                            gordian::MovePattern::delta()) ==
                  gordian::BoundRat(k, 2),
              "delta bound wrong at k = " + std::to_string(k));
    sum = gordian::connected_sum(sum, trefoil);
  }
}

std::vector<gordian::MovePattern> certificate_moves() {
  return {gordian::MovePattern::x(), gordian::MovePattern::delta(),
          gordian::MovePattern::h(2), gordian::MovePattern::h(3),
          gordian::MovePattern::rational(Fraction(3, 1))};
}

void criterion7_certificates(Check& c) {
  for (const gordian::MovePattern& move : certificate_moves()) {
    gordian::CertifiedPath zeta(std::vector<gordian::CertifiedEdge>{
        gordian::witness_edge(move).reversed()});
    for (int r = 1; r <= 6; ++r) {
      auto start = std::chrono::steady_clock::now();
      auto [path, report] = gordian::ball_avoidance_certificate(move, zeta, r);
      auto stop = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      c.require(report.pass, "certificate fails for " + move.key() + " at r = " +
                                 std::to_string(r));
      for (const gordian::VertexBound& v : report.vertices)
        c.require(v.certified >= gordian::BoundRat(r),
                  "vertex bound below r for " + move.key() + " at " + v.vertex);
      c.require(ms < 1000.0, "certificate for " + move.key() + " at r = " +
                                 std::to_string(r) + " took " +
                                 std::to_string(ms) + " ms");
    }
  }
}

void criterion8_avoidance(Check& c) {
  const std::vector<gordian::MovePattern> moves = {
      gordian::MovePattern::x(), gordian::MovePattern::h(2),
      gordian::MovePattern::rational(Fraction(3, 1)), gordian::MovePattern::c(2)};
  for (const gordian::MovePattern& move : moves) {
    gordian::CertifiedPath gamma = gordian::q_chain(move, 2);
    for (int size : {0, 5, 12, 20}) {
      std::vector<gordian::SymbolicKnot> forbidden;
      for (int i = 0; i < size; ++i)
        forbidden.push_back(gordian::sphere1_witness_at(move, i));
      gordian::CertifiedPath detour =
          gordian::avoid_finite_set(gamma, forbidden, move);
      c.require(detour.start() == gamma.start() && detour.end() == gamma.end(),
                "detour endpoints drifted for " + move.key());
      for (const gordian::SymbolicKnot& v : detour.vertices())
        for (const gordian::SymbolicKnot& x : forbidden)
          c.require(!(v == x), "detour for " + move.key() +
                                   " hits forbidden vertex " + x.str());
    }
  }
}

void criterion9_ends(Check& c) {
  auto family_a = ends::make_clique_chain();
  ends::EndCounts exact = ends::exact_ends(*family_a);
  c.require(exact.fu == ends::EndCount::of(1) &&
                exact.fi == ends::EndCount::of(2) &&
                exact.bu == ends::EndCount::of(2) && exact.bi.infinite,
            "stored counts for the clique chain are wrong");

  // alternating-clique schedule reaches every finite target m <= 8
  for (int m = 1; m <= 8; ++m) {
    bool reached = false;
    for (long long k = 1; k <= 4; ++k) {
      ends::ComponentCounts counts = ends::components_after_removal(
          *family_a, ends::RemovalDescriptor::family_specific("oddcliques", k),
          12, 6);
      if (counts.infinite >= m) reached = true;
    }
    c.require(reached, "schedule never reaches bi >= " + std::to_string(m));
  }
  ends::ComponentCounts glue = ends::components_after_removal(
      *family_a, ends::RemovalDescriptor::finite_set({"X0:0"}), 8, 6);
  c.require(glue.unbounded == 1 && glue.infinite == 2,
            "glue removal must show (fu, fi) = (1, 2)");
  ends::ComponentCounts ball = ends::components_after_removal(
      *family_a, ends::RemovalDescriptor::ball(1, false), 8, 6);
  c.require(ball.unbounded == 2, "ball removal must split the chain");

  auto z1 = ends::make_grid(1);
  c.require(ends::best_known_counts(*z1, 3).bu == ends::EndCount::of(2),
            "line estimate must reach 2 ends");
  c.require(ends::exact_ends(*z1).bu == ends::EndCount::of(2),
            "line must have 2 ends");
  auto z2 = ends::make_grid(2);
  c.require(ends::exact_ends(*z2).bu == ends::EndCount::of(1) &&
                ends::best_known_counts(*z2, 3).bu == ends::EndCount::of(1),
            "plane must have 1 end");
  auto tree = ends::make_regular_tree(3);
  ends::ComponentCounts tree_ball = ends::components_after_removal(
      *tree, ends::RemovalDescriptor::ball(3, true), 8, 4);
  c.require(tree_ball.unbounded >= 12, "tree must branch to >= 12 at ball(3)");

  std::vector<std::unique_ptr<ends::GraphFamily>> builtins;
  builtins.push_back(ends::make_grid(1));
  builtins.push_back(ends::make_grid(2));
  builtins.push_back(ends::make_grid(3));
  builtins.push_back(ends::make_regular_tree(3));
  builtins.push_back(ends::make_regular_tree(4));
  builtins.push_back(ends::make_half_line());
  builtins.push_back(ends::make_finite_random(40, 11));
  builtins.push_back(ends::make_clique_chain());
  for (const auto& family : builtins)
    c.require(ends::inequality_chain_holds(ends::exact_ends(*family)),
              "inequality chain fails for " + family->id());
}

void criterion10_property_suites(Check& c) {
  // tangle round-trips across the full criterion sweep
  for (int p = -200; p <= 200; ++p)
    for (int q = 1; q <= 200; ++q) {
      if (gcd(Int(std::abs(p)), Int(q)) > 1) continue;
      Fraction f(p, q);
      tangle::ContinuedFraction cf = tangle::canonical_continued_fraction(f);
      if (tangle::RationalTangle::from_continued_fraction(cf).fraction() != f) {
        c.require(false, "round-trip fails at " + f.str());
        return;
      }
    }

  for (const poly::SkeinTriple& triple : poly::known_skein_triples())
    c.require(poly::skein_verify(triple.plus, triple.minus, triple.zero),
              std::string("stored skein triple fails: ") +
                  std::string(triple.name));

  // shift-path exactness over chains of length <= 6, shifts of <= 3 summands
  const gordian::SymbolicKnot trefoil =
      gordian::SymbolicKnot::rational(Fraction(3, 1));
  const gordian::SymbolicKnot fig8 =
      gordian::SymbolicKnot::rational(Fraction(5, 2));
  std::vector<gordian::SymbolicKnot> shifts = {
      gordian::SymbolicKnot::unknot(), trefoil,
      gordian::connected_sum(trefoil, fig8),
      gordian::connected_sum(gordian::connected_sum(trefoil, trefoil), fig8)};
  for (const gordian::MovePattern& move :
       {gordian::MovePattern::x(), gordian::MovePattern::h(2)}) {
    for (int len = 1; len <= 6; ++len) {
      gordian::CertifiedPath path = gordian::q_chain(move, len);
      for (const gordian::SymbolicKnot& w : shifts) {
        gordian::CertifiedPath moved = gordian::shift_path(path, w);
        c.require(moved.length() == path.length(), "shift changed path length");
        std::vector<gordian::SymbolicKnot> before = path.vertices();
        std::vector<gordian::SymbolicKnot> after = moved.vertices();
        for (std::size_t i = 0; i < before.size(); ++i)
          c.require(after[i] == gordian::connected_sum(before[i], w),
                    "shifted vertex mismatch");
      }
    }
  }

  // certificate soundness sweep
  for (const gordian::MovePattern& move : certificate_moves()) {
    gordian::CertifiedPath zeta(std::vector<gordian::CertifiedEdge>{
        gordian::witness_edge(move).reversed()});
    for (int r = 1; r <= 6; ++r) {
      auto [path, report] = gordian::ball_avoidance_certificate(move, zeta, r);
      c.require(report.pass, "certificate soundness sweep fails");
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(Check&)> body;
  double limit_ms;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "twisted-family values and value recursion", criterion1_family_values,
       100.0},
      {2, "polynomial recursion identity to n = 30", criterion2_recursion_identity,
       0.0},
      {3, "two-bridge classification is an equivalence", criterion3_classification,
       10000.0},
      {4, "closure formulas and unit-sphere witnesses", criterion4_closures, 0.0},
      {5, "generator counts vs brute force; determinants", criterion5_homology,
       30000.0},
      {6, "lower-estimate bounds at 2 and 3 strings", criterion6_lower_estimates,
       0.0},
      {7, "ball-avoidance certificates for five moves", criterion7_certificates,
       0.0},
      {8, "detours around forbidden sets (20 knots)", criterion8_avoidance, 0.0},
      {9, "end counts: clique chain, grids, trees", criterion9_ends, 10000.0},
      {10, "headless property suites", criterion10_property_suites, 0.0},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    double ms = 0.0;
    try {
      ms = run_ms(criterion.body, check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    if (criterion.limit_ms > 0.0 && ms >= criterion.limit_ms)
      check.failures.push_back("runtime " + std::to_string(ms) + " ms over budget " +
                               std::to_string(criterion.limit_ms) + " ms");
    std::ostringstream line;
    line << (check.failures.empty() ? "[PASS]" : "[FAIL]") << " criterion "
         << criterion.id << ": " << criterion.name << " (" << ms << " ms)";
    std::cout << line.str() << "\n";
    for (const std::string& f : check.failures) std::cout << "       " << f << "\n";
    if (!check.failures.empty()) ++failed;
  }
  if (failed) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
