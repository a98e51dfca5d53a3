#include "knotkit/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotkit/ends.hpp"
#include "knotkit/errors.hpp"
#include "knotkit/gordian.hpp"
#include "knotkit/homology.hpp"
#include "knotkit/knots.hpp"
#include "knotkit/poly.hpp"
#include "knotkit/tangle.hpp"

namespace knotkit::cli {

using nlohmann::ordered_json;
using tangle::Fraction;

namespace {

// Exact integers: plain JSON numbers inside the 53-bit window, decimal
// strings beyond it.
ordered_json json_int(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (abs_int(v) < kSafe) return v.convert_to<long long>();
  return v.str();
}

ordered_json json_end_count(const ends::EndCount& c) {
  if (c.infinite) return "inf";
  return c.value;
}

ordered_json json_end_counts(const ends::EndCounts& c) {
  ordered_json j;
  j["bu"] = json_end_count(c.bu);
  j["bi"] = json_end_count(c.bi);
  j["fu"] = json_end_count(c.fu);
  j["fi"] = json_end_count(c.fi);
  return j;
}

std::string rat_str(const gordian::BoundRat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

long long rat_ceil(const gordian::BoundRat& r) {
  return (r.numerator() + r.denominator() - 1) / r.denominator();
}

void flatten(const ordered_json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  std::string rendered =
      j.is_string() ? j.get<std::string>() : j.dump();
  out += prefix + ": " + rendered + "\n";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(
        pos, next == std::string::npos ? text.size() - pos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// knot subcommands

ordered_json cmd_knot_classify(const std::string& input) {
  Fraction f = Fraction::parse(input);
  ordered_json j;
  j["input"] = f.str();
  const bool knot = knots::closure_parity(f) == knots::Parity::Knot;
  if (knot) {
    knots::RationalKnotClass cls = knots::RationalKnotClass::from_fraction(f);
    j["canonical_class"] = cls.str();
    j["parity"] = "knot";
  } else {
    j["canonical_class"] = nullptr;
    j["parity"] = "two-component link";
  }
  if (f.is_zero())
    j["witness_fraction"] = nullptr;
  else
    j["witness_fraction"] = knots::sphere1_witness(f).fraction.str();
  if (knot)
    j["determinant"] = json_int(homology::determinant(homology::lens_h1(f)));
  else
    j["determinant"] = nullptr;
  return j;
}

ordered_json cmd_knot_equiv(const std::string& a, const std::string& b) {
  Fraction fa = Fraction::parse(a);
  Fraction fb = Fraction::parse(b);
  ordered_json j;
  j["inputs"] = {fa.str(), fb.str()};
  j["classes"] = {knots::RationalKnotClass::from_fraction(fa).str(),
                  knots::RationalKnotClass::from_fraction(fb).str()};
  j["equivalent"] = knots::knots_equivalent(fa, fb);
  return j;
}

ordered_json cmd_knot_witness(const std::string& input) {
  Fraction f = Fraction::parse(input);
  knots::RationalClosure w = knots::sphere1_witness(f);
  ordered_json j;
  j["input"] = f.str();
  j["canonical_class"] =
      knots::RationalKnotClass::from_fraction(w.fraction).str();
  j["parity"] = w.parity == knots::Parity::Knot ? "knot" : "two-component link";
  j["witness_fraction"] = w.fraction.str();
  j["determinant"] = json_int(homology::determinant(homology::lens_h1(w.fraction)));
  return j;
}

ordered_json cmd_knot_invariants(const std::string& input) {
  Fraction f = Fraction::parse(input);
  homology::FinAbGroup g = homology::lens_h1(f);
  ordered_json j;
  j["class"] = knots::RationalKnotClass::from_fraction(f).str();
  j["parity"] = "knot";
  ordered_json factors = ordered_json::array();
  for (const Int& d : g.invariant_factors()) factors.push_back(json_int(d));
  j["h1"] = std::move(factors);
  j["e2"] = homology::min_generators(g);
  j["determinant"] = json_int(homology::determinant(g));
  return j;
}

// ---------------------------------------------------------------------------
// gordian subcommands

ordered_json path_json(const gordian::CertifiedPath& path) {
  ordered_json vertices = ordered_json::array();
  ordered_json e2_values = ordered_json::array();
  for (const gordian::SymbolicKnot& v : path.vertices()) {
    vertices.push_back(v.str());
    e2_values.push_back(gordian::e2_interval(v).lo);
  }
  ordered_json j;
  j["vertices"] = std::move(vertices);
  j["e2_values"] = std::move(e2_values);
  return j;
}

ordered_json cmd_gordian_bound(const std::string& move_text,
                               const std::string& knot_text,
                               const std::string& to_text) {
  gordian::MovePattern move = gordian::MovePattern::parse(move_text);
  gordian::SymbolicKnot k = gordian::SymbolicKnot::parse(knot_text);
  gordian::SymbolicKnot q = gordian::SymbolicKnot::parse(to_text);
  gordian::BoundRat bound = gordian::distance_lower_bound(k, q, move);
  ordered_json j;
  j["move"] = move.key();
  j["from"] = k.str();
  j["to"] = q.str();
  j["e2_from"] = gordian::e2_interval(k).lo;
  j["e2_to"] = gordian::e2_interval(q).lo;
  j["bound"] = rat_str(bound);
  j["bound_ceil"] = rat_ceil(bound);
  return j;
}

ordered_json cmd_gordian_chain(const std::string& move_text, int m) {
  gordian::MovePattern move = gordian::MovePattern::parse(move_text);
  gordian::CertifiedPath path = gordian::q_chain(move, m);
  ordered_json j;
  j["move"] = move.key();
  j["m"] = m;
  ordered_json body = path_json(path);
  j["vertices"] = body["vertices"];
  j["e2_values"] = body["e2_values"];
  return j;
}

ordered_json cmd_gordian_certify(const std::string& move_text, int radius) {
  gordian::MovePattern move = gordian::MovePattern::parse(move_text);
  gordian::CertifiedPath zeta(
      std::vector<gordian::CertifiedEdge>{gordian::witness_edge(move).reversed()});
  auto [path, report] = gordian::ball_avoidance_certificate(move, zeta, radius);
  ordered_json j;
  j["move"] = move.key();
  j["radius"] = report.radius;
  j["string_count"] = report.string_count;
  j["base_e2"] = report.base_e2;
  j["chain_length"] = report.chain_length;
  ordered_json vertices = ordered_json::array();
  ordered_json e2_values = ordered_json::array();
  ordered_json bounds = ordered_json::array();
  for (const gordian::VertexBound& v : report.vertices) {
    vertices.push_back(v.vertex);
    e2_values.push_back(v.e2_lower);
    bounds.push_back(rat_str(v.certified));
  }
  j["vertices"] = std::move(vertices);
  j["e2_values"] = std::move(e2_values);
  j["bounds"] = std::move(bounds);
  j["pass"] = report.pass;
  return j;
}

ordered_json cmd_gordian_avoid(const std::string& move_text, int prefix,
                               const std::string& forbid_csv) {
  gordian::MovePattern move = gordian::MovePattern::parse(move_text);
  std::vector<gordian::SymbolicKnot> forbidden;
  for (int i = 0; i < prefix; ++i)
    forbidden.push_back(gordian::sphere1_witness_at(move, i));
  if (!forbid_csv.empty())
    for (const std::string& tok : split(forbid_csv, ','))
      forbidden.push_back(gordian::SymbolicKnot::parse(tok));
  gordian::CertifiedPath gamma = gordian::q_chain(move, 2);
  gordian::CertifiedPath detour =
      gordian::avoid_finite_set(gamma, forbidden, move);

  ordered_json j;
  j["move"] = move.key();
  ordered_json fj = ordered_json::array();
  for (const gordian::SymbolicKnot& k : forbidden) fj.push_back(k.str());
  j["forbidden"] = std::move(fj);
  // The chosen unit-sphere knot is the second vertex of the detour.
  j["witness"] = detour.vertices()[1].str();
  ordered_json body = path_json(detour);
  j["vertices"] = body["vertices"];
  const std::vector<gordian::SymbolicKnot> verts = detour.vertices();
  j["pass"] = std::none_of(verts.begin(), verts.end(),
                           [&](const gordian::SymbolicKnot& v) {
                             return std::find(forbidden.begin(), forbidden.end(),
                                              v) != forbidden.end();
                           });
  return j;
}

// ---------------------------------------------------------------------------
// ends subcommands

struct EndsOptions {
  std::string family = "zd";
  int d = 1;
  int k = 3;
  int n = 64;
  unsigned seed = 7;
  std::string removal;
  int radius_cap = 10;
  int width_cap = 8;
  int budget = 4;
};

std::unique_ptr<ends::GraphFamily> build_family(const EndsOptions& opt) {
  std::string f = opt.family;
  std::transform(f.begin(), f.end(), f.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (f == "a" || f == "cliquechain") return ends::make_clique_chain();
  if (f == "zd") return ends::make_grid(opt.d);
  if (f == "z1" || f == "z2" || f == "z3") return ends::make_grid(f[1] - '0');
  if (f == "tree") return ends::make_regular_tree(opt.k);
  if (f == "halfline") return ends::make_half_line();
  if (f == "finite") return ends::make_finite_random(opt.n, opt.seed);
  throw ParseError("unknown family '" + opt.family +
                   "' (expected zd, tree, halfline, finite, or A)");
}

long long parse_count(const std::string& token, const std::string& context) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad parameter '" + token + "' in removal '" + context + "'");
  return std::stoll(token);
}

ends::RemovalDescriptor parse_removal(const std::string& text,
                                      const ends::GraphFamily& family) {
  if (text == "origin" || text == "glue" || text == "base") {
    ends::Truncation probe = family.truncate(2, 2);
    return ends::RemovalDescriptor::finite_set({probe.labels[probe.base]});
  }
  if (text.rfind("ball:", 0) == 0) {
    long long r = parse_count(text.substr(5), text);
    return ends::RemovalDescriptor::ball(static_cast<int>(r), family.id() != "A");
  }
  if (text.rfind("oddcliques:", 0) == 0)
    return ends::RemovalDescriptor::family_specific(
        "oddcliques", parse_count(text.substr(11), text));
  if (text.rfind("finite:", 0) == 0)
    return ends::RemovalDescriptor::finite_set(split(text.substr(7), '+'));
  throw ParseError("unknown removal '" + text +
                   "' (expected ball:<n>, origin, glue, oddcliques:<k>, "
                   "finite:<v>+<v>...)");
}

ordered_json cmd_ends_estimate(const EndsOptions& opt) {
  std::unique_ptr<ends::GraphFamily> family = build_family(opt);
  ordered_json j;
  j["family"] = family->id();
  if (opt.removal.empty()) {
    ends::EndCounts counts = ends::best_known_counts(*family, opt.budget);
    j["removal"] = "catalog:" + std::to_string(opt.budget);
    j["counts"] = json_end_counts(counts);
    j["frontier_stats"] =
        ordered_json{{"removals_evaluated",
                      family->removal_catalog(opt.budget).size()}};
    return j;
  }
  ends::RemovalDescriptor removal = parse_removal(opt.removal, *family);
  ends::ComponentCounts c = ends::components_after_removal(
      *family, removal, opt.radius_cap, opt.width_cap);
  j["removal"] = removal.str();
  j["counts"] = ordered_json{{"unbounded", c.unbounded}, {"infinite", c.infinite}};
  j["frontier_stats"] = ordered_json{{"vertices", c.vertices},
                                     {"removed", c.removed},
                                     {"components", c.components},
                                     {"radius_frontier", c.radius_frontier},
                                     {"width_frontier", c.width_frontier}};
  return j;
}

ordered_json cmd_ends_exact(const EndsOptions& opt) {
  std::unique_ptr<ends::GraphFamily> family = build_family(opt);
  ordered_json j;
  j["family"] = family->id();
  j["counts"] = json_end_counts(ends::exact_ends(*family));
  return j;
}

}  // namespace

int CommandResult::exit_code() const {
  switch (status) {
    case Status::Ok:
      return 0;
    case Status::DomainFault:
      return 1;
    case Status::UsageFault:
      return 2;
  }
  return 2;
}

CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult result;
  std::string format = "json";
  ordered_json payload;
  bool has_payload = false;

  CLI::App app{"Exact rational-tangle calculus, two-bridge knot invariants, "
               "Gordian distance certificates, and graph-end estimators"};
  app.name("knotkit");
  app.add_option("--format", format, "Output format (json|text)")
      ->check(CLI::IsMember({"json", "text"}));

  const auto set = [&](ordered_json j) {
    payload = std::move(j);
    has_payload = true;
  };

  // tangle
  CLI::App* tangle_cmd = app.add_subcommand("tangle", "Rational tangle algebra");
  tangle_cmd->fallthrough();
  std::string tangle_input;
  CLI::App* tangle_eval = tangle_cmd->add_subcommand(
      "eval", "Evaluate a continued fraction [a1,...,an] to a tangle fraction");
  tangle_eval->fallthrough();
  tangle_eval->add_option("input", tangle_input, "continued fraction")->required();
  tangle_eval->callback([&] {
    tangle::ContinuedFraction cf = tangle::ContinuedFraction::parse(tangle_input);
    tangle::RationalTangle t = tangle::RationalTangle::from_continued_fraction(cf);
    set(ordered_json{{"input", cf.str()}, {"fraction", t.fraction().str()}});
  });
  CLI::App* tangle_canon = tangle_cmd->add_subcommand(
      "canon", "Canonical odd-length continued fraction of p/q");
  tangle_canon->fallthrough();
  tangle_canon->add_option("input", tangle_input, "fraction p/q")->required();
  tangle_canon->callback([&] {
    Fraction f = Fraction::parse(tangle_input);
    tangle::ContinuedFraction cf = tangle::canonical_continued_fraction(f);
    ordered_json entries = ordered_json::array();
    for (const Int& a : cf.entries()) entries.push_back(json_int(a));
    set(ordered_json{{"input", f.str()}, {"cf", std::move(entries)}});
  });

  // knot
  CLI::App* knot_cmd = app.add_subcommand("knot", "Two-bridge knot classification");
  knot_cmd->fallthrough();
  std::string knot_a, knot_b;
  CLI::App* knot_classify =
      knot_cmd->add_subcommand("classify", "Canonical class of a closure");
  knot_classify->fallthrough();
  knot_classify->add_option("fraction", knot_a, "fraction p/q")->required();
  knot_classify->callback([&] { set(cmd_knot_classify(knot_a)); });
  CLI::App* knot_equiv =
      knot_cmd->add_subcommand("equiv", "Decide ambient isotopy of two closures");
  knot_equiv->fallthrough();
  knot_equiv->add_option("a", knot_a, "fraction p/q")->required();
  knot_equiv->add_option("b", knot_b, "fraction l/m")->required();
  knot_equiv->callback([&] { set(cmd_knot_equiv(knot_a, knot_b)); });
  CLI::App* knot_witness = knot_cmd->add_subcommand(
      "witness", "Unit-sphere knot for the r(p/q)-move");
  knot_witness->fallthrough();
  knot_witness->add_option("fraction", knot_a, "fraction p/q")->required();
  knot_witness->callback([&] { set(cmd_knot_witness(knot_a)); });
  CLI::App* knot_invariants = knot_cmd->add_subcommand(
      "invariants", "Double-cover homology, e2 and determinant");
  knot_invariants->fallthrough();
  knot_invariants->add_option("fraction", knot_a, "fraction p/q")->required();
  knot_invariants->callback([&] { set(cmd_knot_invariants(knot_a)); });

  // family
  CLI::App* family_cmd =
      app.add_subcommand("family", "Stored knot families and their invariants");
  family_cmd->fallthrough();
  int family_n = 1;
  CLI::App* family_kn = family_cmd->add_subcommand(
      "kn", "Twisted family member: Conway coefficients and determinant");
  family_kn->fallthrough();
  family_kn->add_option("--n", family_n, "family index, n >= 1")->required();
  family_kn->callback([&] {
    poly::IntPoly conway = poly::conway_kn(family_n);
    ordered_json coeffs = ordered_json::array();
    for (int i = 0; i <= conway.degree(); ++i)
      coeffs.push_back(json_int(conway.coeff(i)));
    set(ordered_json{
        {"n", family_n},
        {"conway_coefficients", std::move(coeffs)},
        {"det_value", json_int(abs_int(poly::alexander_at_minus1(conway)))}});
  });

  // gordian
  CLI::App* gordian_cmd =
      app.add_subcommand("gordian", "Distance bounds and path certificates");
  gordian_cmd->fallthrough();
  std::string move_text = "X", knot_text = "unknot", to_text = "unknot";
  std::string forbid_csv;
  int chain_m = 1, radius = 1, forbid_prefix = 0;
  CLI::App* g_bound = gordian_cmd->add_subcommand(
      "bound", "Homology lower bound for the Gordian distance");
  g_bound->fallthrough();
  g_bound->add_option("--move", move_text, "move key")->required();
  g_bound->add_option("--knot", knot_text, "'#'-joined knot")->required();
  g_bound->add_option("--to", to_text, "'#'-joined knot")->required();
  g_bound->callback([&] { set(cmd_gordian_bound(move_text, knot_text, to_text)); });
  CLI::App* g_chain = gordian_cmd->add_subcommand(
      "chain", "Iterated-shift chain U - Q - ... - Q^m");
  g_chain->fallthrough();
  g_chain->add_option("--move", move_text, "move key")->required();
  g_chain->add_option("--m", chain_m, "chain length")->required();
  g_chain->callback([&] { set(cmd_gordian_chain(move_text, chain_m)); });
  CLI::App* g_certify = gordian_cmd->add_subcommand(
      "certify-end", "Ball-avoiding path certificate at the given radius");
  g_certify->fallthrough();
  g_certify->add_option("--move", move_text, "move key")->required();
  g_certify->add_option("--radius", radius, "ball radius to avoid")->required();
  g_certify->callback([&] { set(cmd_gordian_certify(move_text, radius)); });
  CLI::App* g_avoid = gordian_cmd->add_subcommand(
      "avoid", "Reroute a path around a forbidden vertex set");
  g_avoid->fallthrough();
  g_avoid->add_option("--move", move_text, "move key")->required();
  g_avoid->add_option("--forbid-prefix", forbid_prefix,
                      "forbid the first N enumerated unit-sphere knots");
  g_avoid->add_option("--forbid", forbid_csv, "comma-separated knots to forbid");
  g_avoid->callback(
      [&] { set(cmd_gordian_avoid(move_text, forbid_prefix, forbid_csv)); });

  // ends
  CLI::App* ends_cmd =
      app.add_subcommand("ends", "End invariants of infinite graph families");
  ends_cmd->fallthrough();
  EndsOptions opt;
  CLI::App* ends_estimate = ends_cmd->add_subcommand(
      "estimate", "Truncation-based lower bounds for end counts");
  ends_estimate->fallthrough();
  ends_estimate->add_option("--family", opt.family, "zd|tree|halfline|finite|A")
      ->required();
  ends_estimate->add_option("--d", opt.d, "grid dimension (family zd)");
  ends_estimate->add_option("--k", opt.k, "tree degree (family tree)");
  ends_estimate->add_option("--n", opt.n, "vertex count (family finite)");
  ends_estimate->add_option("--seed", opt.seed, "seed (family finite)");
  ends_estimate->add_option("--removal", opt.removal,
                            "ball:<n> | origin | glue | oddcliques:<k> | "
                            "finite:<v>+<v>... (omit to scan the catalog)");
  ends_estimate->add_option("--R", opt.radius_cap, "truncation radius cap");
  ends_estimate->add_option("--M", opt.width_cap, "truncation width cap");
  ends_estimate->add_option("--budget", opt.budget, "catalog budget");
  ends_estimate->callback([&] { set(cmd_ends_estimate(opt)); });
  CLI::App* ends_exact =
      ends_cmd->add_subcommand("exact", "Stored closed-form end counts");
  ends_exact->fallthrough();
  ends_exact->add_option("--family", opt.family, "zd|tree|halfline|finite|A")
      ->required();
  ends_exact->add_option("--d", opt.d, "grid dimension (family zd)");
  ends_exact->add_option("--k", opt.k, "tree degree (family tree)");
  ends_exact->add_option("--n", opt.n, "vertex count (family finite)");
  ends_exact->add_option("--seed", opt.seed, "seed (family finite)");
  ends_exact->callback([&] { set(cmd_ends_exact(opt)); });

  app.require_subcommand(1);
  for (CLI::App* sub : {tangle_cmd, knot_cmd, family_cmd, gordian_cmd, ends_cmd})
    sub->require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.payload_text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::UsageFault;
    result.diagnostics.push_back(e.what());
    result.diagnostics.push_back("run 'knotkit --help' for usage");
    return result;
  } catch (const DomainError& e) {
    result.status = Status::DomainFault;
    result.diagnostics.push_back(e.what());
    return result;
  } catch (const std::invalid_argument& e) {  // ParseError and friends
    result.status = Status::UsageFault;
    result.diagnostics.push_back(e.what());
    return result;
  } catch (const std::exception& e) {
    result.status = Status::DomainFault;
    result.diagnostics.push_back(e.what());
    return result;
  }

  if (!has_payload) {
    result.status = Status::UsageFault;
    result.diagnostics.push_back("no command selected");
    return result;
  }
  result.payload_json = payload.dump();
  if (format == "text") {
    std::string text;
    flatten(payload, "", text);
    result.payload_text = std::move(text);
  }
  return result;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CommandResult result = dispatch(args);
  if (!result.payload_text.empty())
    std::cout << result.payload_text
              << (result.payload_text.back() == '\n' ? "" : "\n");
  else if (!result.payload_json.empty())
    std::cout << result.payload_json << "\n";
  for (const std::string& d : result.diagnostics) std::cerr << d << "\n";
  return result.exit_code();
}

}  // namespace knotkit::cli
