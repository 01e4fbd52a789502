#pragma once

// JSON encodings of graphs, morphisms, G-sets, series and polynomials.
// Output uses a fixed key order so equal values serialize byte-identically.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "zetacat/error.hpp"
#include "zetacat/exact.hpp"
#include "zetacat/graph.hpp"
#include "zetacat/gset.hpp"
#include "zetacat/standard_graphs.hpp"

namespace zetacat::json_io {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into InputError with the byte offset.
inline Json parse(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

namespace detail {

inline const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing key '" + key + "'");
  return *it;
}

inline std::string id_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InputError(std::string(what) + ": ids must be strings or integers");
}

inline std::vector<std::string> id_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of ids");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(id_string(e, what));
  return out;
}

// Unknown ids become kDangling so that validate() can report them.
inline std::size_t lookup(const std::vector<std::string>& ids, const std::string& id) {
  return zetacat::detail::find_id(ids, id).value_or(kDangling);
}

inline std::string flavor_of(const Json& j) {
  const Json& f = member(j, "flavor", "graph");
  if (!f.is_string()) throw InputError("graph: 'flavor' must be a string");
  return f.get<std::string>();
}

inline std::size_t require_id(const std::vector<std::string>& ids, const std::string& id, const char* what) {
  const std::size_t k = lookup(ids, id);
  if (k == kDangling) throw InputError(std::string(what) + ": unknown id '" + id + "'");
  return k;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

inline Json to_json(const DirectedGraph& g) {
  Json arcs = Json::array();
  for (std::size_t a = 0; a < g.arc_count(); ++a)
    arcs.push_back(Json{{"id", g.arc_id(a)}, {"src", g.node_id(g.src(a))}, {"tgt", g.node_id(g.tgt(a))}});
  return Json{{"flavor", "directed"}, {"nodes", g.node_ids()}, {"arcs", std::move(arcs)}};
}

inline Json to_json(const UndirectedGraph& g) {
  Json half_arcs = Json::array();
  for (std::size_t a = 0; a < g.half_arc_count(); ++a)
    half_arcs.push_back(Json{{"id", g.half_arc_id(a)},
                             {"src", g.node_id(g.src(a))},
                             {"tgt", g.node_id(g.tgt(a))},
                             {"inv", g.half_arc_id(g.inv(a))}});
  return Json{{"flavor", "undirected"}, {"nodes", g.node_ids()}, {"halfarcs", std::move(half_arcs)}};
}

inline Json to_json(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}

/// Parses without validating: dangling references are kept for validate().
inline DirectedGraph directed_from_json(const Json& j) {
  if (detail::flavor_of(j) != "directed") throw InputError("graph: expected flavor 'directed'");
  std::vector<std::string> nodes = detail::id_list(detail::member(j, "nodes", "graph"), "graph nodes");
  const Json& arcs = detail::member(j, "arcs", "graph");
  if (!arcs.is_array()) throw InputError("graph: 'arcs' must be an array");
  std::vector<std::string> ids;
  std::vector<std::size_t> src, tgt;
  for (const auto& a : arcs) {
    ids.push_back(detail::id_string(detail::member(a, "id", "arc"), "arc"));
    src.push_back(detail::lookup(nodes, detail::id_string(detail::member(a, "src", "arc"), "arc")));
    tgt.push_back(detail::lookup(nodes, detail::id_string(detail::member(a, "tgt", "arc"), "arc")));
  }
  return DirectedGraph(std::move(nodes), std::move(ids), std::move(src), std::move(tgt));
}

inline UndirectedGraph undirected_from_json(const Json& j) {
  if (detail::flavor_of(j) != "undirected") throw InputError("graph: expected flavor 'undirected'");
  std::vector<std::string> nodes = detail::id_list(detail::member(j, "nodes", "graph"), "graph nodes");
  const Json& half_arcs = detail::member(j, "halfarcs", "graph");
  if (!half_arcs.is_array()) throw InputError("graph: 'halfarcs' must be an array");
  std::vector<std::string> ids, inv_ids;
  std::vector<std::size_t> src, tgt, inv;
  for (const auto& a : half_arcs) {
    ids.push_back(detail::id_string(detail::member(a, "id", "half-arc"), "half-arc"));
    src.push_back(detail::lookup(nodes, detail::id_string(detail::member(a, "src", "half-arc"), "half-arc")));
    tgt.push_back(detail::lookup(nodes, detail::id_string(detail::member(a, "tgt", "half-arc"), "half-arc")));
    inv_ids.push_back(detail::id_string(detail::member(a, "inv", "half-arc"), "half-arc"));
  }
  for (const auto& id : inv_ids) inv.push_back(detail::lookup(ids, id));
  return UndirectedGraph(std::move(nodes), std::move(ids), std::move(src), std::move(tgt), std::move(inv));
}

inline AnyGraph graph_from_json(const Json& j) {
  const std::string flavor = detail::flavor_of(j);
  if (flavor == "directed") return directed_from_json(j);
  if (flavor == "undirected") return undirected_from_json(j);
  throw InputError("graph: unknown flavor '" + flavor + "'");
}

template <PresheafGraph G>
void require_valid(const G& g, const std::string& what) {
  const Diagnostics d = validate(g);
  if (!d.empty()) throw InputError(what + ": invalid graph: " + d.front().kind + " at '" + d.front().id + "'");
}

// ---------------------------------------------------------------------------
// Morphisms: {"map":{"nodes":{...},"halfarcs"|"arcs":{...}},"base":G,"total":G}
// ---------------------------------------------------------------------------

template <PresheafGraph G>
Json to_json(const Morphism<G>& f) {
  Json nodes = Json::object(), arrows = Json::object();
  for (std::size_t v = 0; v < f.domain.node_count(); ++v) nodes[f.domain.node_id(v)] = f.codomain.node_id(f.map.nodes[v]);
  for (std::size_t a = 0; a < f.domain.arrow_count(); ++a)
    arrows[f.domain.arrow_id(a)] = f.codomain.arrow_id(f.map.arrows[a]);
  const char* arrow_key = kHasInvolution<G> ? "halfarcs" : "arcs";
  return Json{{"map", Json{{"nodes", std::move(nodes)}, {arrow_key, std::move(arrows)}}},
              {"base", to_json(f.codomain)},
              {"total", to_json(f.domain)}};
}

template <PresheafGraph G>
G graph_of_flavor(const Json& j) {
  if constexpr (kHasInvolution<G>)
    return undirected_from_json(j);
  else
    return directed_from_json(j);
}

/// The morphism total -> base; both graphs must be valid and every element
/// of the total graph must be mapped.
template <PresheafGraph G>
Morphism<G> morphism_from_json(const Json& j) {
  Morphism<G> f;
  f.domain = graph_of_flavor<G>(detail::member(j, "total", "morphism"));
  f.codomain = graph_of_flavor<G>(detail::member(j, "base", "morphism"));
  require_valid(f.domain, "morphism total");
  require_valid(f.codomain, "morphism base");
  const Json& map = detail::member(j, "map", "morphism");
  const Json& nodes = detail::member(map, "nodes", "morphism map");
  const Json& arrows = detail::member(map, kHasInvolution<G> ? "halfarcs" : "arcs", "morphism map");
  if (!nodes.is_object() || !arrows.is_object()) throw InputError("morphism map: tables must be objects");
  const auto domain_nodes = f.domain.node_ids();
  const auto codomain_nodes = f.codomain.node_ids();
  std::vector<std::string> domain_arrows, codomain_arrows;
  for (std::size_t a = 0; a < f.domain.arrow_count(); ++a) domain_arrows.push_back(f.domain.arrow_id(a));
  for (std::size_t a = 0; a < f.codomain.arrow_count(); ++a) codomain_arrows.push_back(f.codomain.arrow_id(a));
  f.map.nodes.assign(f.domain.node_count(), kDangling);
  f.map.arrows.assign(f.domain.arrow_count(), kDangling);
  for (const auto& [key, value] : nodes.items())
    f.map.nodes[detail::require_id(domain_nodes, key, "morphism nodes")] =
        detail::require_id(codomain_nodes, detail::id_string(value, "morphism"), "morphism nodes");
  for (const auto& [key, value] : arrows.items())
    f.map.arrows[detail::require_id(domain_arrows, key, "morphism arrows")] =
        detail::require_id(codomain_arrows, detail::id_string(value, "morphism"), "morphism arrows");
  for (std::size_t v = 0; v < f.map.nodes.size(); ++v)
    if (f.map.nodes[v] == kDangling) throw InputError("morphism: node '" + domain_nodes[v] + "' is not mapped");
  for (std::size_t a = 0; a < f.map.arrows.size(); ++a)
    if (f.map.arrows[a] == kDangling) throw InputError("morphism: '" + domain_arrows[a] + "' is not mapped");
  return f;
}

// ---------------------------------------------------------------------------
// G-sets: {"kind":"free|involutive","carrier":[...],"generators":{"a0":{"x":"y"},...}}
// ---------------------------------------------------------------------------

inline Json to_json(const GSetAction& x) {
  Json gens = Json::object();
  for (std::size_t i = 0; i < x.generator_count(); ++i) {
    Json table = Json::object();
    for (std::size_t v = 0; v < x.size(); ++v) table[x.carrier()[v]] = x.carrier()[x.act(i, v)];
    gens[x.generators()[i]] = std::move(table);
  }
  return Json{{"kind", to_string(x.kind())}, {"carrier", x.carrier()}, {"generators", std::move(gens)}};
}

inline GSetAction gset_from_json(const Json& j) {
  const Json& kind_json = detail::member(j, "kind", "G-set");
  const std::string kind = kind_json.is_string() ? kind_json.get<std::string>() : "";
  GroupKind k;
  if (kind == "free")
    k = GroupKind::kFree;
  else if (kind == "involutive")
    k = GroupKind::kInvolutive;
  else
    throw InputError("G-set: 'kind' must be \"free\" or \"involutive\"");
  std::vector<std::string> carrier = detail::id_list(detail::member(j, "carrier", "G-set"), "G-set carrier");
  const Json& gens = detail::member(j, "generators", "G-set");
  if (!gens.is_object()) throw InputError("G-set: 'generators' must be an object");
  std::vector<std::string> names;
  std::vector<Permutation> actions;
  for (const auto& [name, table] : gens.items()) {
    if (!table.is_object()) throw InputError("G-set: generator '" + name + "' must map carrier elements");
    Permutation p(carrier.size(), kDangling);
    for (const auto& [from, to] : table.items())
      p[detail::require_id(carrier, from, "G-set action")] =
          detail::require_id(carrier, detail::id_string(to, "G-set action"), "G-set action");
    for (std::size_t v = 0; v < p.size(); ++v)
      if (p[v] == kDangling) throw InputError("G-set: generator '" + name + "' is not total at '" + carrier[v] + "'");
    names.push_back(name);
    actions.push_back(std::move(p));
  }
  return GSetAction(k, std::move(carrier), std::move(names), std::move(actions));
}

/// G-set JSON plus "positive": the list of direct simplexes.
inline GaloisComplex galois_from_json(const Json& j) {
  GSetAction omega = gset_from_json(j);
  const auto positive_ids = detail::id_list(detail::member(j, "positive", "Galois complex"), "Galois complex");
  std::vector<bool> positive(omega.size(), false);
  for (const auto& id : positive_ids) positive[detail::require_id(omega.carrier(), id, "Galois complex")] = true;
  return GaloisComplex(std::move(omega), std::move(positive));
}

inline Json to_json(const GaloisComplex& c) {
  Json j = to_json(c.simplexes());
  Json positive = Json::array();
  for (std::size_t x = 0; x < c.simplexes().size(); ++x)
    if (c.positive(x)) positive.push_back(c.simplexes().carrier()[x]);
  j["positive"] = std::move(positive);
  return j;
}

// ---------------------------------------------------------------------------
// Exact numbers
// ---------------------------------------------------------------------------

/// Integers that fit in 64 bits print as JSON numbers, larger ones as strings.
inline Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return to_string(v);
}

inline Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (long k = 0; k <= p.degree(); ++k) out.push_back(integer_json(p.coefficient(static_cast<std::size_t>(k))));
  return out;
}

inline Json to_json(const RationalPowerSeries& s) {
  Json coeffs = Json::array();
  // Integral coefficients print as integers; others as "p/q" strings.
  for (std::size_t k = 0; k <= s.order(); ++k)
    coeffs.push_back(is_integer(s[k]) ? integer_json(BigInt(boost::multiprecision::numerator(s[k]))) : Json(to_string(s[k])));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const Diagnostics& d) {
  Json out = Json::array();
  for (const auto& e : d) out.push_back(Json{{"kind", e.kind}, {"id", e.id}});
  return out;
}

}  // namespace zetacat::json_io
