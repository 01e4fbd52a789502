#pragma once

// Directed graphs (presheaves: nodes, arcs, source/target) and undirected
// graphs (presheaves: nodes, half-arcs, source/target and an involution),
// morphisms between them, validation and node stars.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetacat/error.hpp"

namespace zetacat {

// Index used by structure maps for a reference that does not resolve.
inline constexpr std::size_t kDangling = std::numeric_limits<std::size_t>::max();

namespace detail {

inline std::optional<std::size_t> find_id(const std::vector<std::string>& ids, std::string_view id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace detail

class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Raw constructor: structure maps index into `nodes`; kDangling or any
  // out-of-range index is kept and reported by validate().
  DirectedGraph(std::vector<std::string> nodes, std::vector<std::string> arcs, std::vector<std::size_t> src,
                std::vector<std::size_t> tgt)
      : nodes_(std::move(nodes)), arcs_(std::move(arcs)), src_(std::move(src)), tgt_(std::move(tgt)) {
    if (src_.size() != arcs_.size() || tgt_.size() != arcs_.size())
      throw InputError("directed graph: structure maps must be total on arcs");
  }

  std::size_t add_node(std::string id) {
    nodes_.push_back(std::move(id));
    return nodes_.size() - 1;
  }

  std::size_t add_arc(std::string id, std::size_t src, std::size_t tgt) {
    arcs_.push_back(std::move(id));
    src_.push_back(src);
    tgt_.push_back(tgt);
    return arcs_.size() - 1;
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  std::size_t arrow_count() const { return arcs_.size(); }

  const std::string& node_id(std::size_t x) const { return nodes_.at(x); }
  const std::string& arc_id(std::size_t a) const { return arcs_.at(a); }
  const std::string& arrow_id(std::size_t a) const { return arcs_.at(a); }
  const std::vector<std::string>& node_ids() const { return nodes_; }
  const std::vector<std::string>& arc_ids() const { return arcs_; }

  std::size_t src(std::size_t a) const { return src_.at(a); }
  std::size_t tgt(std::size_t a) const { return tgt_.at(a); }

  std::optional<std::size_t> find_node(std::string_view id) const { return detail::find_id(nodes_, id); }
  std::optional<std::size_t> find_arc(std::string_view id) const { return detail::find_id(arcs_, id); }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::string> arcs_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> tgt_;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  UndirectedGraph(std::vector<std::string> nodes, std::vector<std::string> half_arcs, std::vector<std::size_t> src,
                  std::vector<std::size_t> tgt, std::vector<std::size_t> inv)
      : nodes_(std::move(nodes)),
        half_arcs_(std::move(half_arcs)),
        src_(std::move(src)),
        tgt_(std::move(tgt)),
        inv_(std::move(inv)) {
    if (src_.size() != half_arcs_.size() || tgt_.size() != half_arcs_.size() || inv_.size() != half_arcs_.size())
      throw InputError("undirected graph: structure maps must be total on half-arcs");
  }

  std::size_t add_node(std::string id) {
    nodes_.push_back(std::move(id));
    return nodes_.size() - 1;
  }

  // Adds the half-arc pair (forward: x -> y, backward: y -> x); returns the
  // forward half-arc.
  std::size_t add_arc(std::string forward, std::string backward, std::size_t x, std::size_t y) {
    const std::size_t a = half_arcs_.size();
    half_arcs_.push_back(std::move(forward));
    half_arcs_.push_back(std::move(backward));
    src_.insert(src_.end(), {x, y});
    tgt_.insert(tgt_.end(), {y, x});
    inv_.insert(inv_.end(), {a + 1, a});
    return a;
  }

  // Adds a half-arc fixed by the involution.
  std::size_t add_degenerate_loop(std::string id, std::size_t x) {
    const std::size_t a = half_arcs_.size();
    half_arcs_.push_back(std::move(id));
    src_.push_back(x);
    tgt_.push_back(x);
    inv_.push_back(a);
    return a;
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t half_arc_count() const { return half_arcs_.size(); }
  std::size_t arrow_count() const { return half_arcs_.size(); }

  const std::string& node_id(std::size_t x) const { return nodes_.at(x); }
  const std::string& half_arc_id(std::size_t a) const { return half_arcs_.at(a); }
  const std::string& arrow_id(std::size_t a) const { return half_arcs_.at(a); }
  const std::vector<std::string>& node_ids() const { return nodes_; }
  const std::vector<std::string>& half_arc_ids() const { return half_arcs_; }

  std::size_t src(std::size_t a) const { return src_.at(a); }
  std::size_t tgt(std::size_t a) const { return tgt_.at(a); }
  std::size_t inv(std::size_t a) const { return inv_.at(a); }

  bool is_degenerate(std::size_t a) const { return inv_.at(a) == a; }

  // Arcs are involution orbits; the representative is the smaller index.
  bool is_orbit_representative(std::size_t a) const { return a <= inv_.at(a); }

  std::size_t arc_count() const {
    std::size_t n = 0;
    for (std::size_t a = 0; a < half_arcs_.size(); ++a) n += is_orbit_representative(a) ? 1 : 0;
    return n;
  }

  std::optional<std::size_t> find_node(std::string_view id) const { return detail::find_id(nodes_, id); }
  std::optional<std::size_t> find_half_arc(std::string_view id) const { return detail::find_id(half_arcs_, id); }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::string> half_arcs_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> tgt_;
  std::vector<std::size_t> inv_;
};

// Operations written once for both flavors use this interface; "arrows" are
// the elements of X(1): arcs or half-arcs.
template <class G>
concept PresheafGraph = requires(const G& g, std::size_t i) {
  { g.node_count() } -> std::convertible_to<std::size_t>;
  { g.arrow_count() } -> std::convertible_to<std::size_t>;
  { g.src(i) } -> std::convertible_to<std::size_t>;
  { g.tgt(i) } -> std::convertible_to<std::size_t>;
  { g.node_id(i) } -> std::convertible_to<std::string>;
  { g.arrow_id(i) } -> std::convertible_to<std::string>;
};

template <class G>
inline constexpr bool kHasInvolution = requires(const G& g, std::size_t i) {
  { g.inv(i) } -> std::convertible_to<std::size_t>;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Diagnostic {
  std::string kind;  // e.g. "dangling target"
  std::string id;    // offending node or (half-)arc id
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

namespace detail {

inline void check_unique(const std::vector<std::string>& ids, const char* kind, Diagnostics& out) {
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1] && (i == 1 || sorted[i - 2] != sorted[i])) out.push_back({kind, sorted[i]});
}

}  // namespace detail

inline Diagnostics validate(const DirectedGraph& g) {
  Diagnostics out;
  detail::check_unique(g.node_ids(), "duplicate node id", out);
  detail::check_unique(g.arc_ids(), "duplicate arc id", out);
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    if (g.src(a) >= g.node_count()) out.push_back({"dangling source", g.arc_id(a)});
    if (g.tgt(a) >= g.node_count()) out.push_back({"dangling target", g.arc_id(a)});
  }
  return out;
}

/// Checks that inv is an involution with s(inv a) = t(a). Degenerate loops
/// (inv a = a) are allowed.
inline Diagnostics validate(const UndirectedGraph& g) {
  Diagnostics out;
  detail::check_unique(g.node_ids(), "duplicate node id", out);
  detail::check_unique(g.half_arc_ids(), "duplicate half-arc id", out);
  const std::size_t n = g.half_arc_count();
  for (std::size_t a = 0; a < n; ++a) {
    bool structural = true;
    if (g.src(a) >= g.node_count()) out.push_back({"dangling source", g.half_arc_id(a)}), structural = false;
    if (g.tgt(a) >= g.node_count()) out.push_back({"dangling target", g.half_arc_id(a)}), structural = false;
    if (g.inv(a) >= n) {
      out.push_back({"dangling involution", g.half_arc_id(a)});
      continue;
    }
    if (g.inv(g.inv(a)) != a) out.push_back({"involution is not an involution", g.half_arc_id(a)});
    if (structural && g.src(g.inv(a)) != g.tgt(a)) out.push_back({"involution breaks s∘i=t", g.half_arc_id(a)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

/// Node table f0 and (half-)arc table f1 of a morphism, indexed by the
/// domain's nodes and arrows.
struct ArrowMap {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> arrows;
  friend auto operator<=>(const ArrowMap&, const ArrowMap&) = default;
};

template <PresheafGraph G>
struct Morphism {
  G domain;
  G codomain;
  ArrowMap map;
};

template <PresheafGraph G>
ArrowMap identity_map(const G& g) {
  ArrowMap m;
  m.nodes.resize(g.node_count());
  m.arrows.resize(g.arrow_count());
  for (std::size_t i = 0; i < m.nodes.size(); ++i) m.nodes[i] = i;
  for (std::size_t i = 0; i < m.arrows.size(); ++i) m.arrows[i] = i;
  return m;
}

/// (second ∘ first).
inline ArrowMap compose(const ArrowMap& second, const ArrowMap& first) {
  ArrowMap r;
  r.nodes.reserve(first.nodes.size());
  r.arrows.reserve(first.arrows.size());
  for (std::size_t x : first.nodes) r.nodes.push_back(second.nodes.at(x));
  for (std::size_t a : first.arrows) r.arrows.push_back(second.arrows.at(a));
  return r;
}

template <PresheafGraph G>
Morphism<G> compose(const Morphism<G>& second, const Morphism<G>& first) {
  return {first.domain, second.codomain, compose(second.map, first.map)};
}

/// Naturality squares f0∘s = s∘f1, f0∘t = t∘f1 and, for undirected graphs,
/// f1∘i = i∘f1, checked pointwise.
template <PresheafGraph G>
Diagnostics validate_morphism(const G& domain, const G& codomain, const ArrowMap& f) {
  Diagnostics out;
  if (f.nodes.size() != domain.node_count() || f.arrows.size() != domain.arrow_count()) {
    out.push_back({"morphism tables are not total on the domain", ""});
    return out;
  }
  for (std::size_t x = 0; x < f.nodes.size(); ++x)
    if (f.nodes[x] >= codomain.node_count()) out.push_back({"node image outside codomain", domain.node_id(x)});
  for (std::size_t a = 0; a < f.arrows.size(); ++a) {
    const std::size_t b = f.arrows[a];
    if (b >= codomain.arrow_count()) {
      out.push_back({"arrow image outside codomain", domain.arrow_id(a)});
      continue;
    }
    if (f.nodes.at(domain.src(a)) != codomain.src(b)) out.push_back({"source square fails", domain.arrow_id(a)});
    if (f.nodes.at(domain.tgt(a)) != codomain.tgt(b)) out.push_back({"target square fails", domain.arrow_id(a)});
    if constexpr (kHasInvolution<G>) {
      if (f.arrows.at(domain.inv(a)) != codomain.inv(b))
        out.push_back({"involution square fails", domain.arrow_id(a)});
    }
  }
  return out;
}

template <PresheafGraph G>
Diagnostics validate_morphism(const Morphism<G>& f) {
  return validate_morphism(f.domain, f.codomain, f.map);
}

// ---------------------------------------------------------------------------
// Stars and small structural queries
// ---------------------------------------------------------------------------

/// The arcs (involution orbits) having x as an end. Each orbit appears once,
/// named by its representative half-arc.
struct Star {
  std::size_t node = 0;
  std::vector<std::size_t> arcs;
};

inline Star star(const UndirectedGraph& g, std::size_t x) {
  if (x >= g.node_count()) throw InputError("star: unknown node index " + std::to_string(x));
  Star s{x, {}};
  for (std::size_t a = 0; a < g.half_arc_count(); ++a) {
    if (!g.is_orbit_representative(a)) continue;
    if (g.src(a) == x || g.tgt(a) == x) s.arcs.push_back(a);
  }
  return s;
}

inline Star star(const UndirectedGraph& g, std::string_view id) {
  auto x = g.find_node(id);
  if (!x) throw InputError("star: unknown node '" + std::string(id) + "'");
  return star(g, *x);
}

inline std::size_t orbit_representative(const UndirectedGraph& g, std::size_t a) { return std::min(a, g.inv(a)); }

/// True when some half-arc has equal source and target (degenerate or not).
inline bool has_loops(const UndirectedGraph& g) {
  for (std::size_t a = 0; a < g.half_arc_count(); ++a)
    if (g.src(a) == g.tgt(a)) return true;
  return false;
}

/// Connected components of the underlying undirected structure; returns the
/// component index of every node.
template <PresheafGraph G>
std::vector<std::size_t> component_labels(const G& g, std::size_t* count = nullptr) {
  std::vector<std::size_t> parent(g.node_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < g.arrow_count(); ++a) parent[find(g.src(a))] = find(g.tgt(a));
  std::vector<std::size_t> label(g.node_count(), kDangling);
  std::size_t next = 0;
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    const std::size_t r = find(x);
    if (label[r] == kDangling) label[r] = next++;
    label[x] = label[r];
  }
  if (count) *count = next;
  return label;
}

template <PresheafGraph G>
bool is_connected(const G& g) {
  std::size_t count = 0;
  component_labels(g, &count);
  return count == 1;
}

}  // namespace zetacat
