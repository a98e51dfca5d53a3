#include "knotkit/ends.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <random>

#include "knotkit/errors.hpp"

namespace knotkit::ends {

bool inequality_chain_holds(const EndCounts& c) {
  return c.fu <= c.bu && c.bu <= c.bi && c.fu <= c.fi && c.fi <= c.bi;
}

int Truncation::add_vertex(std::string label, unsigned char flag) {
  int id = static_cast<int>(labels.size());
  index.emplace(label, id);
  labels.push_back(std::move(label));
  adjacency.emplace_back();
  flags.push_back(flag);
  return id;
}

void Truncation::add_edge(int a, int b) {
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

int Truncation::require(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end())
    throw DomainError("vertex '" + label + "' is outside the truncation");
  return it->second;
}

RemovalDescriptor RemovalDescriptor::finite_set(std::vector<std::string> vertices) {
  RemovalDescriptor d;
  d.kind = Kind::FiniteSet;
  d.vertices = std::move(vertices);
  d.finite = true;
  return d;
}

RemovalDescriptor RemovalDescriptor::ball(int radius, bool finite_in_family) {
  RemovalDescriptor d;
  d.kind = Kind::Ball;
  d.radius = radius;
  d.finite = finite_in_family;
  return d;
}

RemovalDescriptor RemovalDescriptor::family_specific(std::string op,
                                                     long long param) {
  RemovalDescriptor d;
  d.kind = Kind::FamilySpecific;
  d.family_op = std::move(op);
  d.param = param;
  d.finite = false;
  return d;
}

std::string RemovalDescriptor::str() const {
  switch (kind) {
    case Kind::Ball:
      return "ball:" + std::to_string(radius);
    case Kind::FamilySpecific:
      return family_op + ":" + std::to_string(param);
    case Kind::FiniteSet: {
      std::string out = "finite:";
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += "+";
        out += vertices[i];
      }
      return out;
    }
  }
  return "";
}

std::vector<int> GraphFamily::resolve_removal(const RemovalDescriptor& removal,
                                              const Truncation& t) const {
  if (removal.kind == RemovalDescriptor::Kind::FiniteSet) {
    std::vector<int> out;
    out.reserve(removal.vertices.size());
    for (const std::string& label : removal.vertices)
      out.push_back(t.require(label));
    return out;
  }
  if (removal.kind == RemovalDescriptor::Kind::Ball) {
    if (removal.radius < 0) throw DomainError("ball radius must be >= 0");
    std::vector<int> dist(t.labels.size(), -1);
    std::deque<int> queue{t.base};
    dist[t.base] = 0;
    std::vector<int> out{t.base};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (dist[v] == removal.radius) continue;
      for (int w : t.adjacency[v]) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        out.push_back(w);
        queue.push_back(w);
      }
    }
    return out;
  }
  throw DomainError("family '" + id() + "' does not define removal '" +
                    removal.str() + "'");
}

// ---------------------------------------------------------------------------
// Families

namespace {

class GridFamily final : public GraphFamily {
 public:
  explicit GridFamily(int dim) : dim_(dim) {
    if (dim < 1 || dim > 3) throw DomainError("grid dimension must be 1..3");
  }

  std::string id() const override { return "z" + std::to_string(dim_); }

  Truncation truncate(int radius_cap, int width_cap) const override {
    (void)width_cap;  // locally finite
    if (radius_cap < 1) throw DomainError("radius cap must be >= 1");
    Truncation t;
    std::array<int, 3> x{0, 0, 0};
    std::map<std::array<int, 3>, int> ids;
    const std::function<void(int)> fill = [&](int axis) {
      if (axis == dim_) {
        int norm = std::abs(x[0]) + std::abs(x[1]) + std::abs(x[2]);
        if (norm > radius_cap) return;
        unsigned char flag = norm == radius_cap ? kRadiusFrontier : 0;
        ids.emplace(x, t.add_vertex(label(x), flag));
        return;
      }
      for (int v = -radius_cap; v <= radius_cap; ++v) {
        x[axis] = v;
        fill(axis + 1);
      }
      x[axis] = 0;
    };
    fill(0);
    for (const auto& [coord, id] : ids) {
      for (int axis = 0; axis < dim_; ++axis) {
        std::array<int, 3> next = coord;
        ++next[axis];
        auto it = ids.find(next);
        if (it != ids.end()) t.add_edge(id, it->second);
      }
    }
    t.base = t.require(label({0, 0, 0}));
    return t;
  }

  std::vector<RemovalDescriptor> removal_catalog(int budget) const override {
    std::vector<RemovalDescriptor> out;
    out.push_back(RemovalDescriptor::finite_set({label({0, 0, 0})}));
    for (int r = 1; r <= budget; ++r)
      out.push_back(RemovalDescriptor::ball(r, /*finite_in_family=*/true));
    return out;
  }

  std::optional<EndCounts> analytic_ends() const override {
    EndCount ends = EndCount::of(dim_ == 1 ? 2 : 1);
    return EndCounts{ends, ends, ends, ends};
  }

 private:
  std::string label(const std::array<int, 3>& x) const {
    std::string out = "(" + std::to_string(x[0]);
    for (int axis = 1; axis < dim_; ++axis) out += "," + std::to_string(x[axis]);
    return out + ")";
  }

  int dim_;
};

class RegularTreeFamily final : public GraphFamily {
 public:
  explicit RegularTreeFamily(int k) : k_(k) {
    if (k < 3 || k > 4) throw DomainError("tree degree must be 3 or 4");
  }

  std::string id() const override { return "tree" + std::to_string(k_); }

  Truncation truncate(int radius_cap, int width_cap) const override {
    (void)width_cap;
    if (radius_cap < 1) throw DomainError("radius cap must be >= 1");
    Truncation t;
    int root = t.add_vertex("r");
    struct Item {
      int id;
      int depth;
      std::string label;
    };
    std::deque<Item> queue{{root, 0, "r"}};
    while (!queue.empty()) {
      Item item = queue.front();
      queue.pop_front();
      if (item.depth == radius_cap) {
        t.flags[item.id] |= kRadiusFrontier;
        continue;
      }
      int children = item.depth == 0 ? k_ : k_ - 1;
      for (int c = 0; c < children; ++c) {
        std::string label = item.label + "." + std::to_string(c);
        int id = t.add_vertex(label);
        t.add_edge(item.id, id);
        queue.push_back({id, item.depth + 1, std::move(label)});
      }
    }
    t.base = root;
    return t;
  }

  std::vector<RemovalDescriptor> removal_catalog(int budget) const override {
    std::vector<RemovalDescriptor> out;
    out.push_back(RemovalDescriptor::finite_set({"r"}));
    for (int r = 1; r <= budget; ++r)
      out.push_back(RemovalDescriptor::ball(r, /*finite_in_family=*/true));
    return out;
  }

  std::optional<EndCounts> analytic_ends() const override {
    EndCount ends = EndCount::inf();
    return EndCounts{ends, ends, ends, ends};
  }

 private:
  int k_;
};

class HalfLineFamily final : public GraphFamily {
 public:
  std::string id() const override { return "halfline"; }

  Truncation truncate(int radius_cap, int width_cap) const override {
    (void)width_cap;
    if (radius_cap < 1) throw DomainError("radius cap must be >= 1");
    Truncation t;
    for (int i = 0; i <= radius_cap; ++i)
      t.add_vertex(std::to_string(i), i == radius_cap ? kRadiusFrontier : 0);
    for (int i = 0; i < radius_cap; ++i) t.add_edge(i, i + 1);
    t.base = 0;
    return t;
  }

  std::vector<RemovalDescriptor> removal_catalog(int budget) const override {
    std::vector<RemovalDescriptor> out;
    out.push_back(RemovalDescriptor::finite_set({"0"}));
    for (int r = 1; r <= budget; ++r)
      out.push_back(RemovalDescriptor::ball(r, /*finite_in_family=*/true));
    return out;
  }

  std::optional<EndCounts> analytic_ends() const override {
    EndCount one = EndCount::of(1);
    return EndCounts{one, one, one, one};
  }
};

class FiniteRandomFamily final : public GraphFamily {
 public:
  FiniteRandomFamily(int n, unsigned seed) : n_(n), seed_(seed) {
    if (n < 1 || n > 10000) throw DomainError("finite graph size must be 1..10000");
  }

  std::string id() const override {
    return "finite" + std::to_string(n_) + "s" + std::to_string(seed_);
  }

  Truncation truncate(int radius_cap, int width_cap) const override {
    // The whole graph fits in every window; no frontier anywhere.
    (void)radius_cap;
    (void)width_cap;
    Truncation t;
    for (int i = 0; i < n_; ++i) t.add_vertex(std::to_string(i));
    std::mt19937 rng(seed_);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double p = std::min(1.0, 2.0 / n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (coin(rng) < p) t.add_edge(i, j);
    t.base = 0;
    return t;
  }

  std::vector<RemovalDescriptor> removal_catalog(int budget) const override {
    std::vector<RemovalDescriptor> out;
    out.push_back(RemovalDescriptor::finite_set({"0"}));
    for (int r = 1; r <= budget; ++r)
      out.push_back(RemovalDescriptor::ball(r, /*finite_in_family=*/true));
    return out;
  }

  std::optional<EndCounts> analytic_ends() const override {
    EndCount zero = EndCount::of(0);
    return EndCounts{zero, zero, zero, zero};
  }

 private:
  int n_;
  unsigned seed_;
};

// Cliques X_i (i in Z), vertex j of X_i joined to vertex j of X_{i-1}
// and X_{i+1}, plus one clique Y glued at the base vertex of X_0. Every
// vertex lies in an infinite clique, so the whole window is
// width-frontier; the chain ends at |i| = R are radius-frontier.
class CliqueChainFamily final : public GraphFamily {
 public:
  std::string id() const override { return "A"; }

  Truncation truncate(int radius_cap, int width_cap) const override {
    if (radius_cap < 1 || width_cap < 1)
      throw DomainError("truncation caps must be >= 1");
    Truncation t;
    const int R = radius_cap;
    const int M = width_cap;
    for (int i = -R; i <= R; ++i) {
      unsigned char flag = kWidthFrontier;
      if (std::abs(i) == R) flag |= kRadiusFrontier;
      for (int j = 0; j <= M; ++j)
        t.add_vertex(chain_label(i, j), flag);
    }
    for (int j = 1; j <= M; ++j) t.add_vertex("Y:" + std::to_string(j), kWidthFrontier);
    // clique edges within each X_i
    for (int i = -R; i <= R; ++i)
      for (int j = 0; j <= M; ++j)
        for (int l = j + 1; l <= M; ++l)
          t.add_edge(t.require(chain_label(i, j)), t.require(chain_label(i, l)));
    // copy edges between adjacent cliques
    for (int i = -R; i < R; ++i)
      for (int j = 0; j <= M; ++j)
        t.add_edge(t.require(chain_label(i, j)), t.require(chain_label(i + 1, j)));
    // glued clique on {base} + Y
    int base = t.require(chain_label(0, 0));
    for (int j = 1; j <= M; ++j) {
      int yj = t.require("Y:" + std::to_string(j));
      t.add_edge(base, yj);
      for (int l = j + 1; l <= M; ++l)
        t.add_edge(yj, t.require("Y:" + std::to_string(l)));
    }
    t.base = base;
    return t;
  }

  std::vector<int> resolve_removal(const RemovalDescriptor& removal,
                                   const Truncation& t) const override {
    if (removal.kind == RemovalDescriptor::Kind::FamilySpecific) {
      if (removal.family_op != "oddcliques")
        throw DomainError("family 'A' does not define removal '" +
                          removal.str() + "'");
      if (removal.param < 1) throw DomainError("oddcliques parameter must be >= 1");
      // Deletes the cliques X_i for odd |i| <= 2k - 1; a finite union of
      // bounded sets, so bounded but not finite.
      std::vector<int> out;
      for (const auto& [label, id] : t.index) {
        if (label.front() != 'X') continue;
        int i = std::stoi(label.substr(1, label.find(':') - 1));
        if (std::abs(i) % 2 == 1 && std::abs(i) <= 2 * removal.param - 1)
          out.push_back(id);
      }
      return out;
    }
    return GraphFamily::resolve_removal(removal, t);
  }

  std::vector<RemovalDescriptor> removal_catalog(int budget) const override {
    std::vector<RemovalDescriptor> out;
    out.push_back(RemovalDescriptor::finite_set({chain_label(0, 0)}));
    for (int r = 1; r <= budget; ++r)
      out.push_back(RemovalDescriptor::ball(r, /*finite_in_family=*/false));
    for (int k = 1; k <= budget; ++k)
      out.push_back(RemovalDescriptor::family_specific("oddcliques", k));
    return out;
  }

  std::optional<EndCounts> analytic_ends() const override {
    return EndCounts{EndCount::of(2), EndCount::inf(), EndCount::of(1),
                     EndCount::of(2)};
  }

 private:
  static std::string chain_label(int i, int j) {
    return "X" + std::to_string(i) + ":" + std::to_string(j);
  }
};

}  // namespace

std::unique_ptr<GraphFamily> make_grid(int dim) {
  return std::make_unique<GridFamily>(dim);
}

std::unique_ptr<GraphFamily> make_regular_tree(int k) {
  return std::make_unique<RegularTreeFamily>(k);
}

std::unique_ptr<GraphFamily> make_half_line() {
  return std::make_unique<HalfLineFamily>();
}

std::unique_ptr<GraphFamily> make_finite_random(int n, unsigned seed) {
  return std::make_unique<FiniteRandomFamily>(n, seed);
}

std::unique_ptr<GraphFamily> make_clique_chain() {
  return std::make_unique<CliqueChainFamily>();
}

// ---------------------------------------------------------------------------
// Component counting

ComponentCounts components_after_removal(const GraphFamily& family,
                                         const RemovalDescriptor& removal,
                                         int radius_cap, int width_cap) {
  Truncation t = family.truncate(radius_cap, width_cap);
  std::vector<char> removed(t.labels.size(), 0);
  for (int v : family.resolve_removal(removal, t)) removed[v] = 1;

  ComponentCounts counts;
  counts.vertices = static_cast<long long>(t.labels.size());
  for (std::size_t v = 0; v < t.labels.size(); ++v) {
    counts.removed += removed[v];
    if (!removed[v] && (t.flags[v] & kRadiusFrontier)) ++counts.radius_frontier;
    if (!removed[v] && (t.flags[v] & kWidthFrontier)) ++counts.width_frontier;
  }

  std::vector<char> seen(t.labels.size(), 0);
  for (std::size_t s = 0; s < t.labels.size(); ++s) {
    if (removed[s] || seen[s]) continue;
    bool touches_radius = false;
    bool touches_width = false;
    std::deque<int> queue{static_cast<int>(s)};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      touches_radius |= (t.flags[v] & kRadiusFrontier) != 0;
      touches_width |= (t.flags[v] & kWidthFrontier) != 0;
      for (int w : t.adjacency[v]) {
        if (removed[w] || seen[w]) continue;
        seen[w] = 1;
        queue.push_back(w);
      }
    }
    ++counts.components;
    if (touches_radius) ++counts.unbounded;
    if (touches_radius || touches_width) ++counts.infinite;
  }
  return counts;
}

EndCounts best_known_counts(const GraphFamily& family, int budget) {
  if (budget < 1) throw DomainError("budget must be >= 1");
  const int radius_cap = 2 * budget + 4;
  const int width_cap = budget + 2;
  EndCounts best{EndCount::of(0), EndCount::of(0), EndCount::of(0),
                 EndCount::of(0)};
  for (const RemovalDescriptor& removal : family.removal_catalog(budget)) {
    ComponentCounts c =
        components_after_removal(family, removal, radius_cap, width_cap);
    if (c.unbounded > best.bu.value) best.bu = EndCount::of(c.unbounded);
    if (c.infinite > best.bi.value) best.bi = EndCount::of(c.infinite);
    if (removal.finite) {
      if (c.unbounded > best.fu.value) best.fu = EndCount::of(c.unbounded);
      if (c.infinite > best.fi.value) best.fi = EndCount::of(c.infinite);
    }
  }
  return best;
}

EndCounts exact_ends(const GraphFamily& family) {
  std::optional<EndCounts> stored = family.analytic_ends();
  if (!stored)
    throw DomainError("family '" + family.id() + "' has no stored end counts");
  return *stored;
}

}  // namespace knotkit::ends
