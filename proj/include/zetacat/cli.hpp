#pragma once

// Command dispatch for the zetacat tool. run() never calls exit() and writes
// only to the given streams, so it can be driven in-process.
//
// Exit codes: 0 success, 1 negative verdict, 2 input or usage error,
// 3 internal consistency failure.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetacat/coverings.hpp"
#include "zetacat/gset.hpp"
#include "zetacat/homs.hpp"
#include "zetacat/isomorphism.hpp"
#include "zetacat/json_io.hpp"
#include "zetacat/lab.hpp"
#include "zetacat/zeta.hpp"

namespace zetacat::cli {

using json_io::Json;

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

namespace detail {

struct Output {
  bool json = false;
  std::ostream& out;

  // Emits `j` in JSON mode, otherwise the text lines.
  void emit(const Json& j, const std::string& text) const {
    if (json)
      out << j.dump(2) << '\n';
    else
      out << text;
  }
};

inline std::string series_text(const RationalPowerSeries& s) {
  std::string out;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (!out.empty()) out += ", ";
    out += to_string(s[k]);
  }
  return "[" + out + "]";
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline DirectedGraph load_directed(const std::string& path) {
  auto g = json_io::directed_from_json(json_io::load_file(path));
  json_io::require_valid(g, path);
  return g;
}

inline UndirectedGraph load_undirected(const std::string& path) {
  auto g = json_io::undirected_from_json(json_io::load_file(path));
  json_io::require_valid(g, path);
  return g;
}

inline AnyGraph load_graph(const std::string& path) {
  AnyGraph g = json_io::graph_from_json(json_io::load_file(path));
  std::visit([&](const auto& x) { json_io::require_valid(x, path); }, g);
  return g;
}

inline std::string coverage_text(const CountingVerdict& v) {
  std::string s = "bounded check up to p = " + std::to_string(v.bound) + ": " + bool_text(v.bijective);
  if (v.first_failure) s += " (first failure at p = " + std::to_string(*v.first_failure) + ")";
  return s + "\n";
}

// --- verbs ------------------------------------------------------------------

inline int cmd_validate(const Output& o, const std::string& path) {
  const AnyGraph g = json_io::graph_from_json(json_io::load_file(path));
  const Diagnostics d = std::visit([](const auto& x) { return validate(x); }, g);
  const char* flavor = std::holds_alternative<DirectedGraph>(g) ? "directed" : "undirected";
  std::string text = "valid: " + bool_text(d.empty()) + "\n";
  for (const auto& e : d) text += "  " + e.kind + ": " + e.id + "\n";
  o.emit(Json{{"valid", d.empty()}, {"flavor", flavor}, {"diagnostics", json_io::to_json(d)}}, text);
  return d.empty() ? kOk : kNegative;
}

inline int cmd_zeta(const Output& o, const std::string& path, std::size_t terms) {
  const DirectedGraph g = load_directed(path);
  const auto series = zeta_series(g, terms);
  const auto reciprocal = zeta_reciprocal(g);
  if (!((series * RationalPowerSeries::from_polynomial(reciprocal, terms)) == RationalPowerSeries::one(terms)))
    throw InternalError("zeta series and det(I - tA) are not reciprocal");
  o.emit(Json{{"series", json_io::to_json(series)}, {"reciprocal", json_io::to_json(reciprocal)}},
         "series: " + series_text(series) + "\nreciprocal: " + reciprocal.to_string() + "\n");
  return kOk;
}

inline int cmd_ihara(const Output& o, const std::string& path, std::size_t terms) {
  const UndirectedGraph g = load_undirected(path);
  const auto series = ihara_series(g, terms);
  Json j{{"series", json_io::to_json(series)}};
  std::string text = "series: " + series_text(series) + "\n";
  if (has_loops(g)) {
    j["reciprocal"] = nullptr;
    j["bass"] = nullptr;
    j["note"] = "graph has loops; determinant forms are not computed";
    text += "reciprocal: not computed (graph has loops)\n";
  } else {
    const BassCheck bass = bass_check(g);
    j["reciprocal"] = json_io::to_json(bass.hashimoto_side);
    j["bass"] = Json{{"holds", bass.holds},
                     {"exponent", bass.exponent},
                     {"node_side", json_io::to_json(bass.node_side)}};
    text += "reciprocal: " + bass.hashimoto_side.to_string() + "\n";
    text += "bass identity: " + bool_text(bass.holds) + " (|E|-|V| = " + std::to_string(bass.exponent) +
            ", node side " + bass.node_side.to_string() + ")\n";
    if (!bass.holds) throw InternalError("Bass identity fails");
  }
  o.emit(j, text);
  return kOk;
}

inline int cmd_homcount(const Output& o, const std::string& path, std::size_t p) {
  const AnyGraph g = load_graph(path);
  Json j{{"cycle", p}};
  std::string text;
  if (const auto* d = std::get_if<DirectedGraph>(&g)) {
    const BigInt homs = count_homs(graphs::directed_cycle(static_cast<long long>(p)), *d);
    const BigInt trace = closed_walk_count(*d, static_cast<long long>(p));
    if (homs != trace) throw InternalError("hom count differs from tr(A^p)");
    j["homs"] = json_io::integer_json(homs);
    j["trace"] = json_io::integer_json(trace);
    text = "|Hom(c_" + std::to_string(p) + ", X)| = " + to_string(homs) + "\n";
  } else {
    const auto& u = std::get<UndirectedGraph>(g);
    const BigInt homs = count_homs(graphs::undirected_cycle(static_cast<long long>(p)), u);
    const BigInt nb = count_nb_cycles(u, p);
    j["homs"] = json_io::integer_json(homs);
    j["nb_cycles"] = json_io::integer_json(nb);
    text = "|Hom(c^" + std::to_string(p) + "_U, X)| = " + to_string(homs) + "\nnon-backtracking: " + to_string(nb) +
           "\n";
    if (!has_loops(u)) {
      const BigInt trace = hashimoto_count(u, p);
      if (trace != nb) throw InternalError("non-backtracking count differs from tr(B^p)");
      j["trace"] = json_io::integer_json(trace);
    } else {
      j["trace"] = nullptr;
    }
  }
  o.emit(j, text);
  return kOk;
}

inline int cmd_weq(const Output& o, const std::string& a, const std::string& b) {
  const AnyGraph x = load_graph(a), y = load_graph(b);
  if (x.index() != y.index()) throw InputError("weq: graphs have different flavors");
  IntPolynomial rx, ry;
  if (const auto* dx = std::get_if<DirectedGraph>(&x)) {
    rx = zeta_reciprocal(*dx);
    ry = zeta_reciprocal(std::get<DirectedGraph>(y));
  } else {
    rx = ihara_reciprocal(std::get<UndirectedGraph>(x));
    ry = ihara_reciprocal(std::get<UndirectedGraph>(y));
  }
  const bool weq = rx == ry;
  o.emit(Json{{"weakly_equivalent", weq}, {"reciprocals", Json::array({json_io::to_json(rx), json_io::to_json(ry)})}},
         "weakly equivalent: " + bool_text(weq) + "\n  " + rx.to_string() + "\n  " + ry.to_string() + "\n");
  return weq ? kOk : kNegative;
}

inline int cmd_cofib(const Output& o, const std::string& path, const std::optional<std::string>& other,
                     std::size_t bound) {
  const Json input = json_io::load_file(path);
  if (input.is_object() && input.contains("kind")) {
    const GSetAction x = json_io::gset_from_json(input);
    const CofibrancyVerdict v = is_cofibrant_fnset(x);
    o.emit(Json{{"cofibrant", v.cofibrant}, {"reason", v.reason}},
           "cofibrant: " + bool_text(v.cofibrant) + "\n  " + v.reason + "\n");
    return v.cofibrant ? kOk : kNegative;
  }
  const DirectedGraph x = json_io::directed_from_json(input);
  json_io::require_valid(x, path);
  const auto m = primitive_multiplicities(x, bound);
  Json counts = Json::array();
  std::string text = "primitive multiplicities m_1..m_" + std::to_string(bound) + ":";
  for (const auto& c : m.counts) {
    counts.push_back(json_io::integer_json(c));
    text += " " + to_string(c);
  }
  text += "\n";
  Json j{{"bound", bound}, {"multiplicities", counts}};
  if (other) {
    const DirectedGraph y = load_directed(*other);
    Json rows = Json::array();
    text += "homotopy hom profile (length, multiplicity, maps):\n";
    for (const auto& row : homotopy_hom_profile(x, y, bound)) {
      rows.push_back(Json{{"length", row.length},
                          {"multiplicity", json_io::integer_json(row.multiplicity)},
                          {"maps", json_io::integer_json(row.maps)}});
      text += "  " + std::to_string(row.length) + " " + to_string(row.multiplicity) + " " + to_string(row.maps) + "\n";
    }
    j["hom_profile"] = std::move(rows);
  }
  o.emit(j, text);
  return kOk;
}

inline int cmd_covering(const Output& o, const std::string& path) {
  const auto f = json_io::morphism_from_json<UndirectedGraph>(json_io::load_file(path));
  if (!validate_morphism(f).empty()) throw InputError(path + ": map is not a graph morphism");
  const CoveringReport report = check_covering(f);
  Json failures = Json::array();
  std::string text = "covering: " + bool_text(report.covering) + "\n";
  for (const auto& s : report.failures) {
    const std::string& id = f.domain.node_id(s.node);
    const std::string& image = f.codomain.node_id(f.map.nodes[s.node]);
    failures.push_back(
        Json{{"node", id}, {"image", image}, {"injective", s.injective}, {"surjective", s.surjective}});
    text += "  star map " + id + " -> " + image + " is" + (s.injective ? "" : " not injective") +
            (!s.injective && !s.surjective ? " and" : "") + (s.surjective ? "" : " not surjective") + "\n";
  }
  Json j{{"covering", report.covering}, {"failures", failures}};
  if (report.covering) {
    const auto degree = covering_degree(f);
    j["degree"] = degree ? Json(*degree) : Json(nullptr);
    if (degree) text += "degree: " + std::to_string(*degree) + "\n";
  }
  o.emit(j, text);
  return report.covering ? kOk : kNegative;
}

inline int cmd_color(const Output& o, const std::string& path, std::size_t n) {
  const UndirectedGraph g = load_undirected(path);
  const auto coloring = find_n_coloring(g, n);
  if (!coloring) {
    o.emit(Json{{"coloring", nullptr}}, std::to_string(n) + "-coloring: none\n");
    return kNegative;
  }
  std::string text = std::to_string(n) + "-coloring:\n";
  for (std::size_t a = 0; a < g.half_arc_count(); ++a)
    if (g.is_orbit_representative(a))
      text += "  " + g.half_arc_id(a) + " -> " + coloring->codomain.half_arc_id(coloring->map.arrows[a]) + "\n";
  o.emit(Json{{"coloring", json_io::to_json(*coloring)}}, text);
  return kOk;
}

inline int cmd_cayley(const Output& o, const std::string& path, bool undirected) {
  const GSetAction x = json_io::gset_from_json(json_io::load_file(path));
  const Json g = undirected ? json_io::to_json(cayley_undirected(x)) : json_io::to_json(cayley_directed(x));
  o.emit(g, g.dump(2) + "\n");
  return kOk;
}

inline int cmd_gset_weq(const Output& o, const std::string& a, const std::string& b) {
  const GSetAction x = json_io::gset_from_json(json_io::load_file(a));
  const GSetAction y = json_io::gset_from_json(json_io::load_file(b));
  const bool weq = weak_equiv_gsets(x, y);
  const IntPolynomial rx = zeta_reciprocal(cayley_directed(x)), ry = zeta_reciprocal(cayley_directed(y));
  o.emit(Json{{"weakly_equivalent", weq}, {"reciprocals", Json::array({json_io::to_json(rx), json_io::to_json(ry)})}},
         "weakly equivalent: " + bool_text(weq) + "\n  " + rx.to_string() + "\n  " + ry.to_string() + "\n");
  return weq ? kOk : kNegative;
}

inline int cmd_dessin(const Output& o, const std::string& what, const std::string& path) {
  const Dessin d(json_io::gset_from_json(json_io::load_file(path)));
  if (what == "passport") {
    const Passport p = dessin_passport(d);
    auto list = [](const std::vector<std::size_t>& v) {
      std::string s;
      for (std::size_t k : v) s += (s.empty() ? "" : " ") + std::to_string(k);
      return "[" + s + "]";
    };
    o.emit(Json{{"s0", p.zero}, {"s1", p.one}, {"infinity", p.infinity}},
           "s0: " + list(p.zero) + "\ns1: " + list(p.one) + "\ninfinity: " + list(p.infinity) + "\n");
    return kOk;
  }
  const BipartiteMap m = dessin_bipartite(d);
  Json white = Json::array();
  for (std::size_t v = 0; v < m.white.size(); ++v)
    if (m.white[v]) white.push_back(m.graph.node_id(v));
  const Json j{{"graph", json_io::to_json(m.graph)}, {"white", white}};
  o.emit(j, j.dump(2) + "\n");
  return kOk;
}

inline int cmd_ramify(const Output& o, const std::string& path, std::size_t bound) {
  const GaloisComplex c = json_io::galois_from_json(json_io::load_file(path));
  const RamificationProfile profile = ramification_profile(c, bound);
  if (!profile.all_even) throw InternalError("odd cycle in the simplex graph of a Galois complex");
  Json entries = Json::array();
  std::string text = "dimension " + std::to_string(profile.dimension) + ", cycles up to length " +
                     std::to_string(2 * bound) + "\n";
  for (const auto& e : profile.entries) {
    Json colors = Json::array(), nodes = Json::array();
    for (std::size_t k : e.colors) colors.push_back(c.simplexes().generators()[k]);
    for (std::size_t v : e.nodes) nodes.push_back(c.simplexes().carrier()[v]);
    Json entry{{"length", e.length}, {"colors", colors}, {"simplexes", nodes}, {"based_count", e.based_count}};
    entry["degree"] = e.degree ? Json(*e.degree) : Json(nullptr);
    entry["vertex_ambiguous"] = e.vertex_ambiguous;
    text += "  length " + std::to_string(e.length) + ", colors " + colors.dump() + ", degree " +
            (e.degree ? std::to_string(*e.degree) : std::string("-")) + (e.vertex_ambiguous ? " (vertex-ambiguous)" : "") +
            "\n";
    entries.push_back(std::move(entry));
  }
  const GSetAction plus = plus_action(c);
  o.emit(Json{{"dimension", profile.dimension},
              {"bound", bound},
              {"entries", std::move(entries)},
              {"plus_action", json_io::to_json(plus)}},
         text);
  return kOk;
}

inline int cmd_demo(const Output& o, const std::string& name, const std::optional<std::string>& morphism) {
  lab::DemoReport report;
  if (name == "theorem-4-9") {
    report = lab::demo_counting_vs_model();
  } else if (name == "prop-4-8") {
    std::optional<UndirectedMorphism> extra;
    if (morphism) {
      extra = json_io::morphism_from_json<UndirectedGraph>(json_io::load_file(*morphism));
      if (!validate_morphism(*extra).empty()) throw InputError(*morphism + ": map is not a graph morphism");
    }
    report = lab::demo_connected_rigidity(extra);
  } else if (name == "dessins-d0-d1") {
    report = lab::demo_dessins_d0_d1();
  } else {
    throw InputError("unknown demo '" + name + "'");
  }
  o.emit(lab::to_json(report), lab::to_text(report));
  return report.all_hold() ? kOk : kNegative;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle-counting homotopy toolkit for finite graphs and G-sets", "zetacat"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the verb
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string a, b;
  std::optional<std::string> opt_path;
  std::size_t terms = 8, cycle = 1, bound = 8, colors = 2;
  bool undirected = false;
  std::string which;

  auto* validate_cmd = app.add_subcommand("validate", "Check a graph file");
  validate_cmd->add_option("graph", a)->required();
  auto* zeta_cmd = app.add_subcommand("zeta", "Zeta series and det(I - tA) of a directed graph");
  zeta_cmd->add_option("graph", a)->required();
  zeta_cmd->add_option("--terms", terms, "Truncation order")->check(CLI::Range(1, 64));
  auto* ihara_cmd = app.add_subcommand("ihara", "Ihara series, det(I - tB) and the Bass identity");
  ihara_cmd->add_option("graph", a)->required();
  ihara_cmd->add_option("--terms", terms, "Truncation order")->check(CLI::Range(1, 32));
  auto* homcount_cmd = app.add_subcommand("homcount", "Count cycle homomorphisms into a graph");
  homcount_cmd->add_option("graph", a)->required();
  homcount_cmd->add_option("--cycle", cycle, "Cycle length")->required()->check(CLI::Range(1, 64));
  auto* weq_cmd = app.add_subcommand("weq", "Decide weak equivalence of two graphs");
  weq_cmd->add_option("first", a)->required();
  weq_cmd->add_option("second", b)->required();
  auto* cofib_cmd = app.add_subcommand("cofib", "Truncated cofibrant replacement, or cofibrancy of a free G-set");
  cofib_cmd->add_option("input", a)->required();
  cofib_cmd->add_option("target", opt_path, "Second graph for the homotopy hom profile");
  cofib_cmd->add_option("--max", bound, "Cycle bound")->check(CLI::Range(1, 64));
  auto* covering_cmd = app.add_subcommand("covering", "Check that a morphism is a covering");
  covering_cmd->add_option("morphism", a)->required();
  auto* color_cmd = app.add_subcommand("color", "Search for an n-coloring (covering onto B_n)");
  color_cmd->add_option("graph", a)->required();
  color_cmd->add_option("--n", colors, "Number of colors")->required()->check(CLI::Range(0, 64));
  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley graph of a G-set");
  cayley_cmd->add_option("gset", a)->required();
  cayley_cmd->add_flag("--undirected", undirected, "Undirected Cayley graph of an involutive action");
  auto* gset_weq_cmd = app.add_subcommand("gset-weq", "Decide weak equivalence of two G-sets");
  gset_weq_cmd->add_option("first", a)->required();
  gset_weq_cmd->add_option("second", b)->required();
  auto* dessin_cmd = app.add_subcommand("dessin", "Passport or bipartite map of a dessin");
  dessin_cmd->add_option("what", which)->required()->check(CLI::IsMember({"passport", "graph"}));
  dessin_cmd->add_option("gset", a)->required();
  auto* ramify_cmd = app.add_subcommand("ramify", "Ramification profile of a Galois complex");
  ramify_cmd->add_option("complex", a)->required();
  ramify_cmd->add_option("--max", bound, "Half the maximal cycle length")->check(CLI::Range(1, 16));
  auto* demo_cmd = app.add_subcommand("demo", "Run a scripted demonstration");
  demo_cmd->add_option("name", which)->required()->check(
      CLI::IsMember({"theorem-4-9", "prop-4-8", "dessins-d0-d1"}));
  demo_cmd->add_option("morphism", opt_path, "Extra connected morphism to test for rigidity");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const detail::Output o{format == "json", out};
  try {
    if (*validate_cmd) return detail::cmd_validate(o, a);
    if (*zeta_cmd) return detail::cmd_zeta(o, a, terms);
    if (*ihara_cmd) return detail::cmd_ihara(o, a, terms);
    if (*homcount_cmd) return detail::cmd_homcount(o, a, cycle);
    if (*weq_cmd) return detail::cmd_weq(o, a, b);
    if (*cofib_cmd) return detail::cmd_cofib(o, a, opt_path, bound);
    if (*covering_cmd) return detail::cmd_covering(o, a);
    if (*color_cmd) return detail::cmd_color(o, a, colors);
    if (*cayley_cmd) return detail::cmd_cayley(o, a, undirected);
    if (*gset_weq_cmd) return detail::cmd_gset_weq(o, a, b);
    if (*dessin_cmd) return detail::cmd_dessin(o, which, a);
    if (*ramify_cmd) return detail::cmd_ramify(o, a, bound);
    if (*demo_cmd) return detail::cmd_demo(o, which, opt_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace zetacat::cli
