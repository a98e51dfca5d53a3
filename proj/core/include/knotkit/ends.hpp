#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace knotkit::ends {

// Value of an end invariant: a count or infinity.
struct EndCount {
  bool infinite = false;
  long long value = 0;

  static EndCount of(long long v) { return {false, v}; }
  static EndCount inf() { return {true, 0}; }

  std::string str() const { return infinite ? "inf" : std::to_string(value); }

  friend bool operator==(const EndCount&, const EndCount&) = default;
  friend bool operator<=(const EndCount& a, const EndCount& b) {
    if (b.infinite) return true;
    if (a.infinite) return false;
    return a.value <= b.value;
  }
};

// The four end invariants: unbounded/infinite component counts under
// bounded removals (bu, bi) and finite removals (fu, fi). They satisfy
// fu <= bu <= bi and fu <= fi <= bi.
struct EndCounts {
  EndCount bu, bi, fu, fi;
};

bool inequality_chain_holds(const EndCounts& c);

// Finite window onto an infinite graph. Frontier flags mark how the
// window lies in the full graph: a radius-frontier vertex has omitted
// neighbors farther from the base; a width-frontier vertex stands for
// infinitely many omitted siblings at bounded distance.
inline constexpr unsigned char kRadiusFrontier = 1;
inline constexpr unsigned char kWidthFrontier = 2;

struct Truncation {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adjacency;
  std::vector<unsigned char> flags;
  int base = 0;
  std::unordered_map<std::string, int> index;

  int add_vertex(std::string label, unsigned char flag = 0);
  void add_edge(int a, int b);
  int require(const std::string& label) const;  // DomainError when absent
};

// Vertex set to delete: an explicit finite list, a metric ball around
// the base, or a family-interpreted bounded set. `finite` marks
// descriptors usable for the finite-removal invariants fu/fi.
struct RemovalDescriptor {
  enum class Kind { FiniteSet, Ball, FamilySpecific };

  Kind kind = Kind::FiniteSet;
  std::vector<std::string> vertices;
  int radius = 0;
  std::string family_op;
  long long param = 0;
  bool finite = true;

  static RemovalDescriptor finite_set(std::vector<std::string> vertices);
  static RemovalDescriptor ball(int radius, bool finite_in_family);
  static RemovalDescriptor family_specific(std::string op, long long param);

  std::string str() const;
};

class GraphFamily {
 public:
  virtual ~GraphFamily() = default;

  virtual std::string id() const = 0;
  // Truncations are nested: the (R, M) window is an induced subgraph of
  // the (R+1, M+1) window.
  virtual Truncation truncate(int radius_cap, int width_cap) const = 0;
  virtual std::vector<RemovalDescriptor> removal_catalog(int budget) const = 0;
  virtual std::optional<EndCounts> analytic_ends() const { return std::nullopt; }

  // Vertex indices deleted by the descriptor. The default handles
  // FiniteSet (by label) and Ball (breadth-first from the base);
  // families override to add their specific bounded removals.
  virtual std::vector<int> resolve_removal(const RemovalDescriptor& removal,
                                           const Truncation& t) const;
};

std::unique_ptr<GraphFamily> make_grid(int dim);          // Z^d, 1 <= d <= 3
std::unique_ptr<GraphFamily> make_regular_tree(int k);    // 3 <= k <= 4
std::unique_ptr<GraphFamily> make_half_line();
std::unique_ptr<GraphFamily> make_finite_random(int n, unsigned seed);
// Bi-infinite chain of infinite cliques with one extra infinite clique
// glued at the base vertex.
std::unique_ptr<GraphFamily> make_clique_chain();

struct ComponentCounts {
  long long unbounded = 0;  // components touching a radius-frontier vertex
  long long infinite = 0;   // components touching either frontier kind
  long long components = 0;
  long long vertices = 0;
  long long removed = 0;
  long long radius_frontier = 0;
  long long width_frontier = 0;
};

// Deletes the resolved vertex set from the (R, M) truncation and counts
// surviving components. The counts are lower bounds for the true
// unbounded/infinite component counts, monotone in R and M for the
// built-in families.
ComponentCounts components_after_removal(const GraphFamily& family,
                                         const RemovalDescriptor& removal,
                                         int radius_cap, int width_cap);

// Best lower bounds over the family's removal catalog: finite removals
// feed all four invariants, bounded-only removals feed bu/bi.
EndCounts best_known_counts(const GraphFamily& family, int budget);

// Stored closed-form values; DomainError for families without them.
EndCounts exact_ends(const GraphFamily& family);

}  // namespace knotkit::ends
