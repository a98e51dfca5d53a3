#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "knotkit/fraction.hpp"
#include "knotkit/homology.hpp"
#include "knotkit/knots.hpp"

namespace knotkit::gordian {

using tangle::Fraction;
using BoundRat = boost::rational<long long>;

enum class MoveKind { Rational, C, H, NMove, Delta, X, ClaspPass };

// A cataloged local move: a rational pattern r(p/q), a member of the
// C(n) or H(n) families, an n-move, or one of the named moves X, Delta,
// Clasp-pass. String counts: rational, X and n-moves operate on 2
// strings, H(n) on n, C(n) on n+1 (X = C(1), Delta = C(2), Clasp-pass
// = C(3)).
class MovePattern {
 public:
  static MovePattern rational(Fraction f);  // f != 0/1
  static MovePattern c(int n);
  static MovePattern h(int n);
  static MovePattern n_move(int n);
  static MovePattern x() { return MovePattern(MoveKind::X, 0); }
  static MovePattern delta() { return MovePattern(MoveKind::Delta, 0); }
  static MovePattern clasp_pass() { return MovePattern(MoveKind::ClaspPass, 0); }

  // Accepts X, Delta, ClaspPass, C<k>, H<k>, N<k>, r(p/q) (parentheses
  // optional).
  static MovePattern parse(std::string_view text);

  MoveKind kind() const { return kind_; }
  int family_index() const { return index_; }
  const Fraction& pattern_fraction() const;  // Rational kind only

  int string_count() const;
  std::string key() const;
  // Known identifications: X ~ C1 ~ r(2/1) ~ N2, Delta ~ C2,
  // ClaspPass ~ C3, H2 ~ r(1/0) ~ r(1/1), N<k> ~ r(k/1).
  std::vector<std::string> equivalent_keys() const;

  friend bool operator==(const MovePattern& a, const MovePattern& b) {
    return a.key_ == b.key_;
  }

 private:
  MovePattern(MoveKind kind, int index, std::optional<Fraction> f = std::nullopt);

  MoveKind kind_;
  int index_;
  std::optional<Fraction> fraction_;
  std::string key_;
};

// Prime summand with stored invariants but no rational model; the
// twisted family members K_n carry a determinant and nothing else, so
// their generator count is only bounded below.
struct NamedKnot {
  std::string id;
  std::optional<Int> det;
  std::optional<homology::FinAbGroup> h1;

  friend bool operator==(const NamedKnot& a, const NamedKnot& b) {
    return a.id == b.id;
  }
};

// Formal connected sum: a sorted multiset of prime summands, each a
// rational two-bridge class or a named knot. The empty sum is the
// unknot. Double-cover homology is the direct sum over summands.
class SymbolicKnot {
 public:
  SymbolicKnot() = default;  // unknot

  static SymbolicKnot unknot() { return SymbolicKnot(); }
  static SymbolicKnot rational(const Fraction& f);
  static SymbolicKnot rational(const knots::RationalKnotClass& cls);
  static SymbolicKnot named(NamedKnot data);
  static SymbolicKnot parse(std::string_view text);

  bool is_unknot() const;
  std::size_t summand_count() const;
  SymbolicKnot sum_with(const SymbolicKnot& other) const;

  // Exact double-cover homology, when every summand carries it.
  std::optional<homology::FinAbGroup> h1() const;
  std::optional<Int> determinant() const;

  std::string str() const;  // '#'-joined summands, or "unknot"

  friend bool operator==(const SymbolicKnot&, const SymbolicKnot&);
  friend bool operator<(const SymbolicKnot&, const SymbolicKnot&);

  const std::vector<knots::RationalKnotClass>& rational_summands() const {
    return rationals_;
  }
  const std::vector<NamedKnot>& named_summands() const { return named_; }

 private:
  std::vector<knots::RationalKnotClass> rationals_;  // sorted
  std::vector<NamedKnot> named_;                     // sorted by id
};

SymbolicKnot connected_sum(const SymbolicKnot& k, const SymbolicKnot& w);

// Certified generator-count interval for the double-cover homology.
// hi is absent when a summand's group is unknown and unbounded.
struct E2Interval {
  long long lo = 0;
  std::optional<long long> hi;
};

// Exact e2; rejects knots with a summand of unknown homology.
long long e2(const SymbolicKnot& k);
E2Interval e2_interval(const SymbolicKnot& k);
// Generator count of the p-fold cover; only p = 2 is computed.
long long e_p(const SymbolicKnot& k, int p);

// |e2(K) - e2(Q)| / (string_count - 1) as an exact rational, using the
// certified interval minimum when a summand's homology is unknown.
BoundRat distance_lower_bound(const SymbolicKnot& k, const SymbolicKnot& q,
                              const MovePattern& move);

// An edge of a Gordian graph with provenance: either a registered
// witness edge at the unknot, or a shift of another certified edge by
// a connected summand.
class CertifiedEdge {
 public:
  struct Witness {};
  struct ShiftOf {
    std::shared_ptr<const CertifiedEdge> parent;
    SymbolicKnot by;
  };
  using Provenance = std::variant<Witness, ShiftOf>;

  CertifiedEdge(SymbolicKnot a, SymbolicKnot b, MovePattern move, Provenance p);

  const SymbolicKnot& a() const { return a_; }
  const SymbolicKnot& b() const { return b_; }
  const MovePattern& move() const { return move_; }
  const Provenance& provenance() const { return prov_; }

  CertifiedEdge reversed() const;

 private:
  SymbolicKnot a_, b_;
  MovePattern move_;
  Provenance prov_;
};

// Edge sequence with matching endpoints; vertex i is edge i's source
// and the last edge's target closes the list.
class CertifiedPath {
 public:
  explicit CertifiedPath(std::vector<CertifiedEdge> edges);

  const std::vector<CertifiedEdge>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  std::vector<SymbolicKnot> vertices() const;
  const SymbolicKnot& start() const { return edges_.front().a(); }
  const SymbolicKnot& end() const { return edges_.back().b(); }

  CertifiedPath reversed() const;

 private:
  std::vector<CertifiedEdge> edges_;
};

// Registered unit-sphere edge at the unknot for a cataloged move:
// a rational witness for rational-type moves, the trefoil for H(n),
// the twisted family member K_n for C(n).
CertifiedEdge witness_edge(const MovePattern& move);
SymbolicKnot witness_knot(const MovePattern& move);

CertifiedEdge shift_edge(const CertifiedEdge& e, const SymbolicKnot& by);
CertifiedPath shift_path(const CertifiedPath& path, const SymbolicKnot& by);

// Path U - Q - Q^2 - ... - Q^m built by iterated consistent shifting
// of the witness edge.
CertifiedPath q_chain(const MovePattern& move, int m);

struct VertexBound {
  std::string vertex;
  long long e2_lower = 0;
  BoundRat homology_bound{0};  // |e2(v) - e2(E)| / (n - 1), certified
  // n*r + e - i for position i in the chain prefix; valid under the
  // hypothesis dt(K, E) >= n*r + e on the far endpoint.
  std::optional<long long> chain_bound;
  BoundRat certified{0};
  bool pass = false;
};

struct CertificateReport {
  int string_count = 0;
  long long base_e2 = 0;
  long long chain_length = 0;
  int radius = 0;
  std::vector<VertexBound> vertices;
  bool pass = false;
};

// Replays the ball-avoidance construction: a Q-chain of length
// (n-1)r + e2(E) shifted by zeta's start, concatenated with zeta
// shifted by Q^((n-1)r+e). The report certifies, per vertex, distance
// >= r from E via the homology bound, falling back on the triangle
// bound for the chain prefix.
std::pair<CertifiedPath, CertificateReport> ball_avoidance_certificate(
    const MovePattern& move, const CertifiedPath& zeta, int radius);

// Unit-sphere registry: known-infinite flag and, when available, a
// deterministic enumeration of distinct members.
bool sphere1_known_infinite(const MovePattern& move);
bool sphere1_enumerable(const MovePattern& move);
SymbolicKnot sphere1_witness_at(const MovePattern& move, int index);

// Reroutes gamma through a freshly chosen unit-sphere knot Q so that no
// vertex of the detour e(start) + gamma(Q) + e(end) meets the forbidden
// set. Endpoints of gamma must avoid the set already.
CertifiedPath avoid_finite_set(const CertifiedPath& gamma,
                               const std::vector<SymbolicKnot>& forbidden,
                               const MovePattern& move);

}  // namespace knotkit::gordian
