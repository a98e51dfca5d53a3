#include "knotkit/gordian.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "knotkit/errors.hpp"
#include "knotkit/poly.hpp"

namespace knotkit::gordian {

// ---------------------------------------------------------------------------
// MovePattern

MovePattern::MovePattern(MoveKind kind, int index, std::optional<Fraction> f)
    : kind_(kind), index_(index), fraction_(std::move(f)) {
  switch (kind_) {
    case MoveKind::X:
      key_ = "X";
      break;
    case MoveKind::Delta:
      key_ = "Delta";
      break;
    case MoveKind::ClaspPass:
      key_ = "ClaspPass";
      break;
    case MoveKind::C:
      key_ = "C" + std::to_string(index_);
      break;
    case MoveKind::H:
      key_ = "H" + std::to_string(index_);
      break;
    case MoveKind::NMove:
      key_ = "N" + std::to_string(index_);
      break;
    case MoveKind::Rational:
      key_ = "r(" + fraction_->str() + ")";
      break;
  }
}

MovePattern MovePattern::rational(Fraction f) {
  if (f.is_zero())
    throw DomainError("a rational move pattern must differ from [0]");
  return MovePattern(MoveKind::Rational, 0, std::move(f));
}

MovePattern MovePattern::c(int n) {
  if (n < 1) throw DomainError("C-family index must be >= 1");
  return MovePattern(MoveKind::C, n);
}

MovePattern MovePattern::h(int n) {
  if (n < 1) throw DomainError("H-family index must be >= 1");
  return MovePattern(MoveKind::H, n);
}

MovePattern MovePattern::n_move(int n) {
  if (n < 1) throw DomainError("n-move index must be >= 1");
  return MovePattern(MoveKind::NMove, n);
}

const Fraction& MovePattern::pattern_fraction() const {
  if (!fraction_) throw DomainError("move " + key_ + " has no pattern fraction");
  return *fraction_;
}

int MovePattern::string_count() const {
  switch (kind_) {
    case MoveKind::X:
    case MoveKind::NMove:
    case MoveKind::Rational:
      return 2;
    case MoveKind::Delta:
      return 3;
    case MoveKind::ClaspPass:
      return 4;
    case MoveKind::C:
      return index_ + 1;
    case MoveKind::H:
      return index_;
  }
  return 2;
}

std::string MovePattern::key() const { return key_; }

std::vector<std::string> MovePattern::equivalent_keys() const {
  switch (kind_) {
    case MoveKind::X:
      return {"C1", "r(2/1)", "N2"};
    case MoveKind::Delta:
      return {"C2"};
    case MoveKind::ClaspPass:
      return {"C3"};
    case MoveKind::C:
      if (index_ == 1) return {"X", "r(2/1)", "N2"};
      if (index_ == 2) return {"Delta"};
      if (index_ == 3) return {"ClaspPass"};
      return {};
    case MoveKind::H:
      if (index_ == 2) return {"r(1/0)", "r(1/1)"};
      return {};
    case MoveKind::NMove:
      if (index_ == 2) return {"X", "C1", "r(2/1)"};
      return {"r(" + std::to_string(index_) + "/1)"};
    case MoveKind::Rational: {
      const Fraction& f = *fraction_;
      if (f == Fraction(2, 1)) return {"X", "C1", "N2"};
      if (f == Fraction::infinity()) return {"H2", "r(1/1)"};
      if (f == Fraction(1, 1)) return {"H2", "r(1/0)"};
      if (f.den() == 1 && f.num() > 0) return {"N" + f.num().str()};
      return {};
    }
  }
  return {};
}

MovePattern MovePattern::parse(std::string_view text) {
  const auto bad = [&] {
    return ParseError("unknown move '" + std::string(text) +
                      "' (expected X, Delta, ClaspPass, C<k>, H<k>, N<k>, or r(p/q))");
  };
  if (text.empty()) throw bad();
  const auto index_of = [&](std::string_view s) {
    if (!s.empty() && s.front() == '(' && s.back() == ')')
      s = s.substr(1, s.size() - 2);
    if (s.empty()) throw bad();
    int v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw bad();
      v = v * 10 + (ch - '0');
      if (v > 1000) throw bad();
    }
    return v;
  };
  if (text == "X" || text == "x") return x();
  if (text == "Delta" || text == "delta" || text == "D") return delta();
  if (text == "ClaspPass" || text == "clasppass" || text == "clasp-pass" ||
      text == "Clasp-pass")
    return clasp_pass();
  char head = text.front();
  std::string_view rest = text.substr(1);
  try {
    if (head == 'C' || head == 'c') return c(index_of(rest));
    if (head == 'H' || head == 'h') return h(index_of(rest));
    if (head == 'N' || head == 'n') return n_move(index_of(rest));
    if (head == 'r' || head == 'R') {
      if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
        rest = rest.substr(1, rest.size() - 2);
      if (!rest.empty() && rest.front() == ':') rest = rest.substr(1);
      return rational(Fraction::parse(rest));
    }
  } catch (const DomainError&) {
    throw bad();
  } catch (const ParseError&) {
    throw bad();
  }
  throw bad();
}

// ---------------------------------------------------------------------------
// SymbolicKnot

SymbolicKnot SymbolicKnot::rational(const Fraction& f) {
  return rational(knots::RationalKnotClass::from_fraction(f));
}

SymbolicKnot SymbolicKnot::rational(const knots::RationalKnotClass& cls) {
  SymbolicKnot k;
  if (!cls.is_unknot()) k.rationals_.push_back(cls);
  return k;
}

SymbolicKnot SymbolicKnot::named(NamedKnot data) {
  if (data.id.empty() || data.id.find('#') != std::string::npos ||
      data.id.find('/') != std::string::npos)
    throw DomainError("invalid named knot id '" + data.id + "'");
  if (!data.det && data.h1) data.det = homology::determinant(*data.h1);
  SymbolicKnot k;
  k.named_.push_back(std::move(data));
  return k;
}

bool SymbolicKnot::is_unknot() const {
  return rationals_.empty() && named_.empty();
}

std::size_t SymbolicKnot::summand_count() const {
  return rationals_.size() + named_.size();
}

SymbolicKnot SymbolicKnot::sum_with(const SymbolicKnot& other) const {
  SymbolicKnot out = *this;
  out.rationals_.insert(out.rationals_.end(), other.rationals_.begin(),
                        other.rationals_.end());
  out.named_.insert(out.named_.end(), other.named_.begin(), other.named_.end());
  std::sort(out.rationals_.begin(), out.rationals_.end());
  std::sort(out.named_.begin(), out.named_.end(),
            [](const NamedKnot& a, const NamedKnot& b) { return a.id < b.id; });
  return out;
}

std::optional<homology::FinAbGroup> SymbolicKnot::h1() const {
  homology::FinAbGroup g;
  for (const knots::RationalKnotClass& cls : rationals_)
    g = homology::direct_sum(g, homology::FinAbGroup::cyclic(cls.p()));
  for (const NamedKnot& nk : named_) {
    if (!nk.h1) return std::nullopt;
    g = homology::direct_sum(g, *nk.h1);
  }
  return g;
}

std::optional<Int> SymbolicKnot::determinant() const {
  Int det = 1;
  for (const knots::RationalKnotClass& cls : rationals_) det *= cls.p();
  for (const NamedKnot& nk : named_) {
    if (!nk.det) return std::nullopt;
    det *= *nk.det;
  }
  return det;
}

std::string SymbolicKnot::str() const {
  if (is_unknot()) return "unknot";
  std::string out;
  for (const knots::RationalKnotClass& cls : rationals_) {
    if (!out.empty()) out += "#";
    out += cls.str();
  }
  for (const NamedKnot& nk : named_) {
    if (!out.empty()) out += "#";
    out += nk.id;
  }
  return out;
}

SymbolicKnot SymbolicKnot::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty knot expression");
  SymbolicKnot out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t hash = text.find('#', pos);
    std::string_view tok = text.substr(
        pos, hash == std::string_view::npos ? text.size() - pos : hash - pos);
    if (tok.empty()) throw ParseError("empty summand in '" + std::string(text) + "'");
    if (tok == "unknot" || tok == "U") {
      // identity summand
    } else if (tok.front() == 'K') {
      std::string_view body = tok.substr(1);
      std::size_t dot = body.find(".t");
      const auto to_index = [&](std::string_view s) {
        if (s.empty()) throw ParseError("bad knot token '" + std::string(tok) + "'");
        int v = 0;
        for (char ch : s) {
          if (ch < '0' || ch > '9')
            throw ParseError("bad knot token '" + std::string(tok) + "'");
          v = v * 10 + (ch - '0');
          if (v > 100000) throw ParseError("bad knot token '" + std::string(tok) + "'");
        }
        return v;
      };
      if (dot == std::string_view::npos) {
        int n = to_index(body);
        if (n < 1) throw ParseError("bad knot token '" + std::string(tok) + "'");
        NamedKnot nk;
        nk.id = "K" + std::to_string(n);
        nk.det = abs_int(poly::alexander_at_minus1(poly::conway_kn(n)));
        out = out.sum_with(named(std::move(nk)));
      } else {
        int n = to_index(body.substr(0, dot));
        int t = to_index(body.substr(dot + 2));
        if (n < 1 || t < 1)
          throw ParseError("bad knot token '" + std::string(tok) + "'");
        NamedKnot nk;
        nk.id = "K" + std::to_string(n) + ".t" + std::to_string(t);
        out = out.sum_with(named(std::move(nk)));
      }
    } else {
      out = out.sum_with(rational(Fraction::parse(tok)));
    }
    if (hash == std::string_view::npos) break;
    pos = hash + 1;
  }
  return out;
}

bool operator==(const SymbolicKnot& a, const SymbolicKnot& b) {
  if (a.rationals_ != b.rationals_) return false;
  if (a.named_.size() != b.named_.size()) return false;
  for (std::size_t i = 0; i < a.named_.size(); ++i)
    if (a.named_[i].id != b.named_[i].id) return false;
  return true;
}

bool operator<(const SymbolicKnot& a, const SymbolicKnot& b) {
  if (a.rationals_ != b.rationals_) return a.rationals_ < b.rationals_;
  const auto ids = [](const SymbolicKnot& k) {
    std::vector<std::string_view> v;
    for (const NamedKnot& nk : k.named_) v.push_back(nk.id);
    return v;
  };
  return ids(a) < ids(b);
}

SymbolicKnot connected_sum(const SymbolicKnot& k, const SymbolicKnot& w) {
  return k.sum_with(w);
}

// ---------------------------------------------------------------------------
// Generator counts

namespace {

// Distinct prime factors reachable by trial division; a leftover factor
// above the cap is reported only when it is provably prime (below cap^2).
std::vector<Int> small_prime_factors(Int v, long long cap) {
  std::vector<Int> primes;
  for (long long d = 2; d <= cap; ++d) {
    if (Int(d) * d > v) break;
    if (v % d == 0) {
      primes.emplace_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1 && v < Int(cap) * cap) primes.push_back(v);
  return primes;
}

constexpr long long kFactorCap = 100000;

}  // namespace

long long e2(const SymbolicKnot& k) {
  std::optional<homology::FinAbGroup> g = k.h1();
  if (!g)
    throw DomainError("e2 of " + k.str() +
                      " needs homology data for every summand");
  return homology::min_generators(*g);
}

E2Interval e2_interval(const SymbolicKnot& k) {
  homology::FinAbGroup known;
  std::vector<const NamedKnot*> unknown;
  for (const knots::RationalKnotClass& cls : k.rational_summands())
    known = homology::direct_sum(known, homology::FinAbGroup::cyclic(cls.p()));
  for (const NamedKnot& nk : k.named_summands()) {
    if (nk.h1)
      known = homology::direct_sum(known, *nk.h1);
    else
      unknown.push_back(&nk);
  }

  if (unknown.empty()) {
    long long exact = homology::min_generators(known);
    return {exact, exact};
  }

  long long lo = homology::min_generators(known);

  // Each prime dividing a summand's determinant contributes one to that
  // summand's l-rank, and ranks add across the direct sum.
  std::set<Int> candidates;
  for (const NamedKnot* nk : unknown)
    if (nk->det)
      for (const Int& p : small_prime_factors(*nk->det, kFactorCap))
        candidates.insert(p);
  for (const Int& ell : candidates) {
    long long score = 0;
    for (const Int& d : known.invariant_factors())
      if (d % ell == 0) ++score;
    for (const NamedKnot* nk : unknown)
      if (nk->det && *nk->det % ell == 0) ++score;
    lo = std::max(lo, score);
  }

  // Copies of one knot share a group, so a nontrivial determinant pools
  // one rank per copy even when no prime factor is in reach.
  std::map<std::string_view, long long> pool;
  for (const NamedKnot* nk : unknown)
    if (nk->det && *nk->det > 1) ++pool[nk->id];
  for (const auto& [id, count] : pool) lo = std::max(lo, count);

  std::optional<long long> hi;
  long long up = homology::min_generators(known);
  bool bounded = true;
  for (const NamedKnot* nk : unknown) {
    if (!nk->det || *nk->det < 1) {
      bounded = false;
      break;
    }
    if (*nk->det > 1)
      up += static_cast<long long>(boost::multiprecision::msb(*nk->det));
  }
  if (bounded) hi = up;
  return {lo, hi};
}

long long e_p(const SymbolicKnot& k, int p) {
  if (p == 2) return e2(k);
  throw DomainError("only the p = 2 generator count is computed (requested p = " +
                    std::to_string(p) + ")");
}

BoundRat distance_lower_bound(const SymbolicKnot& k, const SymbolicKnot& q,
                              const MovePattern& move) {
  const int n = move.string_count();
  if (n < 2)
    throw DomainError("distance bounds need a move on at least 2 strings");
  E2Interval a = e2_interval(k);
  E2Interval b = e2_interval(q);
  long long diff = 0;
  if (b.hi) diff = std::max(diff, a.lo - *b.hi);
  if (a.hi) diff = std::max(diff, b.lo - *a.hi);
  return BoundRat(diff, n - 1);
}

// ---------------------------------------------------------------------------
// Certified edges and paths

CertifiedEdge::CertifiedEdge(SymbolicKnot a, SymbolicKnot b, MovePattern move,
                             Provenance p)
    : a_(std::move(a)), b_(std::move(b)), move_(std::move(move)),
      prov_(std::move(p)) {
  if (std::holds_alternative<Witness>(prov_)) {
    if (!(a_.is_unknot() ^ b_.is_unknot()))
      throw DomainError("a witness edge joins the unknot to a nontrivial knot");
  } else {
    const ShiftOf& s = std::get<ShiftOf>(prov_);
    const bool forward = a_ == connected_sum(s.parent->a(), s.by) &&
                         b_ == connected_sum(s.parent->b(), s.by);
    const bool backward = a_ == connected_sum(s.parent->b(), s.by) &&
                          b_ == connected_sum(s.parent->a(), s.by);
    if (!forward && !backward)
      throw DomainError("shifted edge endpoints do not match parent + shift");
  }
}

CertifiedEdge CertifiedEdge::reversed() const {
  CertifiedEdge out = *this;
  std::swap(out.a_, out.b_);
  return out;
}

CertifiedPath::CertifiedPath(std::vector<CertifiedEdge> edges)
    : edges_(std::move(edges)) {
  if (edges_.empty()) throw DomainError("a certified path needs at least one edge");
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
    if (!(edges_[i].b() == edges_[i + 1].a()))
      throw DomainError("consecutive path edges must share an endpoint");
}

std::vector<SymbolicKnot> CertifiedPath::vertices() const {
  std::vector<SymbolicKnot> out;
  out.reserve(edges_.size() + 1);
  out.push_back(edges_.front().a());
  for (const CertifiedEdge& e : edges_) out.push_back(e.b());
  return out;
}

CertifiedPath CertifiedPath::reversed() const {
  std::vector<CertifiedEdge> out;
  out.reserve(edges_.size());
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it)
    out.push_back(it->reversed());
  return CertifiedPath(std::move(out));
}

// ---------------------------------------------------------------------------
// Witness registry

namespace {

// Rational pattern behind a move, when it has one. X, the n-moves and
// H(2) reduce to r(2/1), r(n/1) and r(1/0).
std::optional<Fraction> effective_pattern(const MovePattern& move) {
  switch (move.kind()) {
    case MoveKind::Rational:
      return move.pattern_fraction();
    case MoveKind::X:
      return Fraction(2, 1);
    case MoveKind::NMove:
      return Fraction(move.family_index(), 1);
    case MoveKind::H:
      if (move.family_index() == 2) return Fraction::infinity();
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<int> c_family_index(const MovePattern& move) {
  switch (move.kind()) {
    case MoveKind::C:
      return move.family_index();
    case MoveKind::Delta:
      return 2;
    case MoveKind::ClaspPass:
      return 3;
    default:
      return std::nullopt;
  }
}

SymbolicKnot kn_family_knot(int n) {
  NamedKnot nk;
  nk.id = "K" + std::to_string(n);
  nk.det = abs_int(poly::alexander_at_minus1(poly::conway_kn(n)));
  return SymbolicKnot::named(std::move(nk));
}

}  // namespace

SymbolicKnot witness_knot(const MovePattern& move) {
  if (std::optional<Fraction> f = effective_pattern(move))
    return SymbolicKnot::rational(knots::sphere1_witness(*f).fraction);
  if (std::optional<int> n = c_family_index(move)) return kn_family_knot(*n);
  if (move.kind() == MoveKind::H) return SymbolicKnot::rational(Fraction(3, 1));
  throw DomainError("move " + move.key() + " has no registered witness");
}

CertifiedEdge witness_edge(const MovePattern& move) {
  return CertifiedEdge(SymbolicKnot::unknot(), witness_knot(move), move,
                       CertifiedEdge::Witness{});
}

CertifiedEdge shift_edge(const CertifiedEdge& e, const SymbolicKnot& by) {
  return CertifiedEdge(
      connected_sum(e.a(), by), connected_sum(e.b(), by), e.move(),
      CertifiedEdge::ShiftOf{std::make_shared<CertifiedEdge>(e), by});
}

CertifiedPath shift_path(const CertifiedPath& path, const SymbolicKnot& by) {
  std::vector<CertifiedEdge> out;
  out.reserve(path.length());
  for (const CertifiedEdge& e : path.edges()) out.push_back(shift_edge(e, by));
  return CertifiedPath(std::move(out));
}

CertifiedPath q_chain(const MovePattern& move, int m) {
  if (m < 1) throw DomainError("chain length must be >= 1");
  const SymbolicKnot q = witness_knot(move);
  std::vector<CertifiedEdge> edges;
  edges.reserve(m);
  edges.push_back(witness_edge(move));
  for (int i = 1; i < m; ++i) edges.push_back(shift_edge(edges.back(), q));
  return CertifiedPath(std::move(edges));
}

// ---------------------------------------------------------------------------
// Certificates

std::pair<CertifiedPath, CertificateReport> ball_avoidance_certificate(
    const MovePattern& move, const CertifiedPath& zeta, int radius) {
  if (radius < 1) throw DomainError("certificate radius must be >= 1");
  const int n = move.string_count();
  if (n < 2)
    throw DomainError("the ball-avoidance construction needs >= 2 strings");
  const SymbolicKnot q = witness_knot(move);
  if (e2_interval(q).lo < 1)
    throw DomainError("witness of " + move.key() +
                      " has no certified homology generator");

  const SymbolicKnot& start = zeta.start();
  const SymbolicKnot& base = zeta.end();
  const long long base_e2 = e2(base);
  const long long chain_length = static_cast<long long>(n - 1) * radius + base_e2;

  CertifiedPath chain = q_chain(move, static_cast<int>(chain_length));
  const SymbolicKnot q_power = chain.end();
  CertifiedPath gamma_shifted = shift_path(chain, start);
  CertifiedPath zeta_shifted = shift_path(zeta, q_power);

  std::vector<CertifiedEdge> edges = gamma_shifted.edges();
  for (const CertifiedEdge& e : zeta_shifted.edges()) edges.push_back(e);
  CertifiedPath combined(std::move(edges));

  CertificateReport report;
  report.string_count = n;
  report.base_e2 = base_e2;
  report.chain_length = chain_length;
  report.radius = radius;

  const BoundRat target(radius);
  const std::vector<SymbolicKnot> vertices = combined.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    VertexBound vb;
    vb.vertex = vertices[i].str();
    vb.e2_lower = e2_interval(vertices[i]).lo;
    vb.homology_bound = distance_lower_bound(vertices[i], base, move);
    vb.certified = vb.homology_bound;
    if (static_cast<long long>(i) < chain_length) {
      // Chain prefix: the triangle inequality against the hypothesis
      // dt(start, base) >= n*r + e gives n*r + e - i.
      vb.chain_bound = static_cast<long long>(n) * radius + base_e2 -
                       static_cast<long long>(i);
      vb.certified = std::max(vb.certified, BoundRat(*vb.chain_bound));
    }
    vb.pass = vb.certified >= target;
    report.vertices.push_back(std::move(vb));
  }
  report.pass = std::all_of(report.vertices.begin(), report.vertices.end(),
                            [](const VertexBound& v) { return v.pass; });
  if (!report.pass) {
    for (const VertexBound& v : report.vertices)
      if (!v.pass)
        throw DomainError("certificate bound violated at vertex " + v.vertex);
  }
  return {std::move(combined), std::move(report)};
}

// ---------------------------------------------------------------------------
// Unit-sphere registry

bool sphere1_known_infinite(const MovePattern& move) {
  // Rational-type moves carry an explicit infinite closure orbit; the
  // C(n) and H(n) spheres are recorded as infinite.
  (void)move;
  return true;
}

bool sphere1_enumerable(const MovePattern& move) {
  if (effective_pattern(move)) return true;
  if (c_family_index(move)) return true;
  return false;
}

SymbolicKnot sphere1_witness_at(const MovePattern& move, int index) {
  if (index < 0) throw DomainError("enumeration index must be >= 0");
  if (std::optional<int> n = c_family_index(move)) {
    if (index == 0) return kn_family_knot(*n);
    NamedKnot nk;
    nk.id = "K" + std::to_string(*n) + ".t" + std::to_string(index);
    return SymbolicKnot::named(std::move(nk));
  }
  std::optional<Fraction> pattern = effective_pattern(move);
  if (!pattern)
    throw DomainError("unit sphere of " + move.key() +
                      " is recorded as infinite but has no enumerable registry");

  // Breadth-first closure orbit from the registered witness; links are
  // expanded through but only knot classes are emitted.
  const Fraction seed = knots::sphere1_witness(*pattern).fraction;
  std::deque<Fraction> queue{seed};
  std::set<Fraction> visited{seed};
  std::set<knots::RationalKnotClass> emitted;
  while (true) {
    if (queue.empty())
      throw std::logic_error("closure orbit cannot be exhausted");
    Fraction f = queue.front();
    queue.pop_front();
    for (const Fraction& child : {knots::closure_c1(f), knots::closure_c2(f)}) {
      if (visited.insert(child).second) queue.push_back(child);
    }
    if (knots::closure_parity(f) == knots::Parity::Knot) {
      knots::RationalKnotClass cls = knots::RationalKnotClass::from_fraction(f);
      if (!cls.is_unknot() && emitted.insert(cls).second) {
        if (static_cast<int>(emitted.size()) == index + 1)
          return SymbolicKnot::rational(cls);
      }
    }
  }
}

CertifiedPath avoid_finite_set(const CertifiedPath& gamma,
                               const std::vector<SymbolicKnot>& forbidden,
                               const MovePattern& move) {
  if (!sphere1_enumerable(move))
    throw DomainError("unit sphere of " + move.key() +
                      " has no enumerable registry");
  const auto in_forbidden = [&](const SymbolicKnot& v) {
    return std::find(forbidden.begin(), forbidden.end(), v) != forbidden.end();
  };
  if (in_forbidden(gamma.start()) || in_forbidden(gamma.end()))
    throw DomainError("path endpoints must avoid the forbidden set");

  // Each forbidden knot can block at most one witness per path vertex,
  // so a bounded scan always succeeds.
  const long long cap =
      static_cast<long long>(forbidden.size()) * (gamma.length() + 3) + 1;
  for (long long i = 0; i < cap; ++i) {
    SymbolicKnot q = sphere1_witness_at(move, static_cast<int>(i));
    CertifiedEdge base(SymbolicKnot::unknot(), q, move, CertifiedEdge::Witness{});
    CertifiedPath shifted = shift_path(gamma, q);
    std::vector<CertifiedEdge> edges;
    edges.push_back(shift_edge(base, gamma.start()));
    for (const CertifiedEdge& e : shifted.edges()) edges.push_back(e);
    edges.push_back(shift_edge(base, gamma.end()).reversed());
    CertifiedPath detour(std::move(edges));
    const std::vector<SymbolicKnot> verts = detour.vertices();
    if (std::none_of(verts.begin(), verts.end(), in_forbidden))
      return detour;
  }
  throw std::logic_error("no admissible unit-sphere witness found");
}

}  // namespace knotkit::gordian
