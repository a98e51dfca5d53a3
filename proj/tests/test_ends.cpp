#include <doctest.h>

#include "knotkit/errors.hpp"
#include "knotkit/ends.hpp"

using knotkit::DomainError;
using namespace knotkit::ends;

TEST_CASE("line: one removed vertex splits two rays") {
  auto z1 = make_grid(1);
  ComponentCounts c = components_after_removal(
      *z1, RemovalDescriptor::ball(2, true), 10, 4);
  CHECK(c.unbounded == 2);
  CHECK(c.infinite == 2);

  ComponentCounts origin = components_after_removal(
      *z1, RemovalDescriptor::finite_set({"(0)"}), 10, 4);
  CHECK(origin.unbounded == 2);

  EndCounts exact = exact_ends(*z1);
  CHECK(exact.bu == EndCount::of(2));
  CHECK(exact.fi == EndCount::of(2));
}

TEST_CASE("plane: ball complements stay connected") {
  auto z2 = make_grid(2);
  ComponentCounts c = components_after_removal(
      *z2, RemovalDescriptor::ball(3, true), 12, 4);
  CHECK(c.unbounded == 1);
  CHECK(c.infinite == 1);
  CHECK(exact_ends(*z2).bu == EndCount::of(1));
}

TEST_CASE("trees branch exponentially") {
  auto tree = make_regular_tree(3);
  // removing the closed 3-ball leaves one subtree per depth-4 vertex
  ComponentCounts c = components_after_removal(
      *tree, RemovalDescriptor::ball(3, true), 8, 4);
  CHECK(c.unbounded == 24);  // 3 * 2^3
  CHECK(exact_ends(*tree).bu == EndCount::inf());
}

TEST_CASE("half-line has a single end") {
  auto half = make_half_line();
  ComponentCounts c = components_after_removal(
      *half, RemovalDescriptor::finite_set({"3"}), 12, 4);
  CHECK(c.unbounded == 1);
  CHECK(c.infinite == 1);
  CHECK(c.components == 2);  // the finite stub does not count
  EndCounts exact = exact_ends(*half);
  CHECK(exact.bi == EndCount::of(1));
}

TEST_CASE("catalog scans reach the known lower bounds") {
  EndCounts line = best_known_counts(*make_grid(1), 3);
  CHECK(line.bu == EndCount::of(2));
  CHECK(line.bi == EndCount::of(2));
  CHECK(line.fu == EndCount::of(2));
  CHECK(line.fi == EndCount::of(2));

  EndCounts tree = best_known_counts(*make_regular_tree(3), 3);
  CHECK(tree.bu.value >= 12);
  CHECK(tree.fu.value >= 12);  // balls are finite sets here
}

TEST_CASE("finite graphs have no ends at all") {
  for (unsigned seed : {1u, 2u, 3u, 4u}) {
    auto finite = make_finite_random(40, seed);
    EndCounts best = best_known_counts(*finite, 3);
    CHECK(best.bu == EndCount::of(0));
    CHECK(best.bi == EndCount::of(0));
    CHECK(best.fu == EndCount::of(0));
    CHECK(best.fi == EndCount::of(0));
    EndCounts exact = exact_ends(*finite);
    CHECK(exact.bi == EndCount::of(0));
  }
}

TEST_CASE("clique chain: glue vertex separates the bounded clique") {
  auto a = make_clique_chain();
  ComponentCounts c = components_after_removal(
      *a, RemovalDescriptor::finite_set({"X0:0"}), 6, 8);
  CHECK(c.unbounded == 1);
  CHECK(c.infinite == 2);
}

TEST_CASE("clique chain: balls split the chain") {
  auto a = make_clique_chain();
  ComponentCounts c = components_after_removal(
      *a, RemovalDescriptor::ball(1, false), 8, 6);
  CHECK(c.unbounded == 2);
  CHECK(c.infinite == 2);
}

TEST_CASE("clique chain: alternating removals isolate interior cliques") {
  auto a = make_clique_chain();
  ComponentCounts c = components_after_removal(
      *a, RemovalDescriptor::family_specific("oddcliques", 3), 10, 6);
  // isolated X0, X+-2, X+-4 plus two unbounded tails
  CHECK(c.infinite == 7);
  CHECK(c.unbounded == 2);

  for (long long k = 1; k <= 4; ++k) {
    ComponentCounts ck = components_after_removal(
        *a, RemovalDescriptor::family_specific("oddcliques", k), 12, 6);
    CHECK(ck.infinite == 2 * k + 1);
  }
}

TEST_CASE("clique chain: stored counts match the construction") {
  auto a = make_clique_chain();
  EndCounts exact = exact_ends(*a);
  CHECK(exact.fu == EndCount::of(1));
  CHECK(exact.fi == EndCount::of(2));
  CHECK(exact.bu == EndCount::of(2));
  CHECK(exact.bi == EndCount::inf());

  EndCounts best = best_known_counts(*a, 4);
  CHECK(best.fu == EndCount::of(1));
  CHECK(best.fi == EndCount::of(2));
  CHECK(best.bu.value >= 2);
  CHECK(best.bi.value >= 8);
}

TEST_CASE("estimator soundness and inequality chain on all built-ins") {
  std::vector<std::unique_ptr<GraphFamily>> families;
  families.push_back(make_grid(1));
  families.push_back(make_grid(2));
  families.push_back(make_grid(3));
  families.push_back(make_regular_tree(3));
  families.push_back(make_regular_tree(4));
  families.push_back(make_half_line());
  families.push_back(make_finite_random(30, 5));
  families.push_back(make_clique_chain());
  for (const auto& family : families) {
    EndCounts exact = exact_ends(*family);
    CHECK(inequality_chain_holds(exact));
    EndCounts best = best_known_counts(*family, 3);
    CHECK(inequality_chain_holds(best));
    CHECK(best.bu <= exact.bu);
    CHECK(best.bi <= exact.bi);
    CHECK(best.fu <= exact.fu);
    CHECK(best.fi <= exact.fi);

    // per-removal candidate counts stay below the stored values across
    // the whole catalog and window sizes up to 12
    for (const RemovalDescriptor& removal : family->removal_catalog(3)) {
      for (int cap = 6; cap <= 12; cap += 3) {
        ComponentCounts c = components_after_removal(*family, removal, cap, cap);
        CHECK(EndCount::of(c.unbounded) <= exact.bu);
        CHECK(EndCount::of(c.infinite) <= exact.bi);
        if (removal.finite) {
          CHECK(EndCount::of(c.unbounded) <= exact.fu);
          CHECK(EndCount::of(c.infinite) <= exact.fi);
        }
      }
    }
  }
}

TEST_CASE("strictness is realized on the clique chain") {
  EndCounts a = exact_ends(*make_clique_chain());
  CHECK(a.fu.value < a.fi.value);
  CHECK(a.fi <= a.bi);
  CHECK_FALSE(a.bi <= a.fi);
  CHECK(a.fu.value < a.bu.value);
}

TEST_CASE("candidate counts are monotone in the truncation caps") {
  auto a = make_clique_chain();
  auto z2 = make_grid(2);
  auto tree = make_regular_tree(3);
  const auto run = [](const GraphFamily& f, const RemovalDescriptor& r, int R,
                      int M) { return components_after_removal(f, r, R, M); };
  for (int R = 4; R <= 12; R += 2) {
    for (int M = 4; M <= 12; M += 4) {
      ComponentCounts now = run(*a, RemovalDescriptor::family_specific("oddcliques", 2), R, M);
      ComponentCounts bigger =
          run(*a, RemovalDescriptor::family_specific("oddcliques", 2), R + 1, M + 1);
      CHECK(now.unbounded <= bigger.unbounded);
      CHECK(now.infinite <= bigger.infinite);
    }
    ComponentCounts g0 = run(*z2, RemovalDescriptor::ball(2, true), R, 4);
    ComponentCounts g1 = run(*z2, RemovalDescriptor::ball(2, true), R + 1, 4);
    CHECK(g0.unbounded <= g1.unbounded);
    ComponentCounts t0 = run(*tree, RemovalDescriptor::ball(2, true), R, 4);
    ComponentCounts t1 = run(*tree, RemovalDescriptor::ball(2, true), R + 1, 4);
    CHECK(t0.unbounded <= t1.unbounded);
  }

  // every catalog removal of every built-in, windows stepped together
  std::vector<std::unique_ptr<GraphFamily>> families;
  families.push_back(make_grid(1));
  families.push_back(make_grid(2));
  families.push_back(make_regular_tree(3));
  families.push_back(make_half_line());
  families.push_back(make_clique_chain());
  for (const auto& family : families)
    for (const RemovalDescriptor& removal : family->removal_catalog(3))
      for (int cap = 6; cap <= 10; cap += 2) {
        ComponentCounts now = run(*family, removal, cap, cap);
        ComponentCounts bigger = run(*family, removal, cap + 2, cap + 2);
        CHECK(now.unbounded <= bigger.unbounded);
        CHECK(now.infinite <= bigger.infinite);
      }
}

TEST_CASE("descriptor validation") {
  auto z1 = make_grid(1);
  CHECK_THROWS_AS(components_after_removal(
                      *z1, RemovalDescriptor::finite_set({"(99)"}), 5, 4),
                  DomainError);
  CHECK_THROWS_AS(components_after_removal(
                      *z1, RemovalDescriptor::family_specific("oddcliques", 1),
                      5, 4),
                  DomainError);
  CHECK_THROWS_AS(make_grid(4), DomainError);
  CHECK_THROWS_AS(make_regular_tree(5), DomainError);
}
