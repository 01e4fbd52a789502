#pragma once

// Binary (co)limits in the presheaf categories of directed and undirected
// graphs, computed pointwise.

#include <numeric>
#include <string>
#include <vector>

#include "zetacat/error.hpp"
#include "zetacat/graph.hpp"

namespace zetacat {

/// A constructed graph with its two legs (injections, projections or
/// quotient maps, depending on the construction).
template <PresheafGraph G>
struct WithLegs {
  G graph;
  ArrowMap first;
  ArrowMap second;
};

namespace detail {

template <PresheafGraph G>
G assemble(std::vector<std::string> nodes, std::vector<std::string> arrows, std::vector<std::size_t> src,
           std::vector<std::size_t> tgt, std::vector<std::size_t> inv) {
  if constexpr (kHasInvolution<G>)
    return G(std::move(nodes), std::move(arrows), std::move(src), std::move(tgt), std::move(inv));
  else
    return G(std::move(nodes), std::move(arrows), std::move(src), std::move(tgt));
}

template <PresheafGraph G>
std::size_t inverse_of(const G& g, std::size_t a) {
  if constexpr (kHasInvolution<G>)
    return g.inv(a);
  else
    return a;
}

template <PresheafGraph G>
void require_valid(const G& domain, const G& codomain, const ArrowMap& f, const char* what) {
  if (!validate_morphism(domain, codomain, f).empty()) throw InputError(std::string(what) + ": invalid morphism");
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller index as root so class representatives are stable.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Disjoint union X + Y; ids are prefixed "0/" and "1/".
template <PresheafGraph G>
WithLegs<G> sum(const G& x, const G& y) {
  std::vector<std::string> nodes, arrows;
  std::vector<std::size_t> src, tgt, inv;
  ArrowMap ix, iy;
  auto add = [&](const G& g, const std::string& prefix, ArrowMap& leg) {
    const std::size_t node_base = nodes.size(), arrow_base = arrows.size();
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      leg.nodes.push_back(nodes.size());
      nodes.push_back(prefix + g.node_id(v));
    }
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      leg.arrows.push_back(arrows.size());
      arrows.push_back(prefix + g.arrow_id(a));
      src.push_back(node_base + g.src(a));
      tgt.push_back(node_base + g.tgt(a));
      inv.push_back(arrow_base + detail::inverse_of(g, a));
    }
  };
  add(x, "0/", ix);
  add(y, "1/", iy);
  return {detail::assemble<G>(std::move(nodes), std::move(arrows), std::move(src), std::move(tgt), std::move(inv)),
          std::move(ix), std::move(iy)};
}

/// X × Y: nodes and arrows are pairs; structure maps act componentwise.
template <PresheafGraph G>
WithLegs<G> product(const G& x, const G& y) {
  std::vector<std::string> nodes, arrows;
  std::vector<std::size_t> src, tgt, inv;
  ArrowMap px, py;
  const std::size_t ny = y.node_count(), ay = y.arrow_count();
  for (std::size_t u = 0; u < x.node_count(); ++u)
    for (std::size_t v = 0; v < ny; ++v) {
      nodes.push_back("(" + x.node_id(u) + "," + y.node_id(v) + ")");
      px.nodes.push_back(u);
      py.nodes.push_back(v);
    }
  for (std::size_t a = 0; a < x.arrow_count(); ++a)
    for (std::size_t b = 0; b < ay; ++b) {
      arrows.push_back("(" + x.arrow_id(a) + "," + y.arrow_id(b) + ")");
      src.push_back(x.src(a) * ny + y.src(b));
      tgt.push_back(x.tgt(a) * ny + y.tgt(b));
      inv.push_back(detail::inverse_of(x, a) * ay + detail::inverse_of(y, b));
      px.arrows.push_back(a);
      py.arrows.push_back(b);
    }
  return {detail::assemble<G>(std::move(nodes), std::move(arrows), std::move(src), std::move(tgt), std::move(inv)),
          std::move(px), std::move(py)};
}

/// Quotient of g by the equivalence generated by the given node and arrow
/// identifications. Arrow identifications are closed under the involution
/// and pushed to endpoints, so the result is again a graph of the same
/// flavor. Each class keeps the id of its lowest-index member.
template <PresheafGraph G>
std::pair<G, ArrowMap> quotient(const G& g, const std::vector<std::pair<std::size_t, std::size_t>>& node_pairs,
                                const std::vector<std::pair<std::size_t, std::size_t>>& arrow_pairs) {
  detail::UnionFind nodes_uf(g.node_count()), arrows_uf(g.arrow_count());
  for (auto [a, b] : node_pairs) nodes_uf.unite(a, b);
  for (auto [a, b] : arrow_pairs) {
    arrows_uf.unite(a, b);
    arrows_uf.unite(detail::inverse_of(g, a), detail::inverse_of(g, b));
    nodes_uf.unite(g.src(a), g.src(b));
    nodes_uf.unite(g.tgt(a), g.tgt(b));
  }
  ArrowMap q;
  q.nodes.assign(g.node_count(), kDangling);
  q.arrows.assign(g.arrow_count(), kDangling);
  std::vector<std::string> nodes, arrows;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const std::size_t r = nodes_uf.find(v);
    if (r == v) {
      q.nodes[v] = nodes.size();
      nodes.push_back(g.node_id(v));
    } else {
      q.nodes[v] = q.nodes[r];
    }
  }
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    const std::size_t r = arrows_uf.find(a);
    if (r == a) {
      q.arrows[a] = arrows.size();
      arrows.push_back(g.arrow_id(a));
      reps.push_back(a);
    } else {
      q.arrows[a] = q.arrows[r];
    }
  }
  std::vector<std::size_t> src, tgt, inv;
  for (std::size_t a : reps) {
    src.push_back(q.nodes[g.src(a)]);
    tgt.push_back(q.nodes[g.tgt(a)]);
    inv.push_back(q.arrows[detail::inverse_of(g, a)]);
  }
  return {detail::assemble<G>(std::move(nodes), std::move(arrows), std::move(src), std::move(tgt), std::move(inv)),
          std::move(q)};
}

/// The full subgraph on the nodes with keep[v] set, with its inclusion.
template <PresheafGraph G>
std::pair<G, ArrowMap> induced_subgraph(const G& g, const std::vector<bool>& keep) {
  std::vector<std::size_t> node_index(g.node_count(), kDangling), arrow_index(g.arrow_count(), kDangling);
  std::vector<std::string> nodes, arrows;
  ArrowMap inclusion;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (!keep.at(v)) continue;
    node_index[v] = nodes.size();
    nodes.push_back(g.node_id(v));
    inclusion.nodes.push_back(v);
  }
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    if (!keep[g.src(a)] || !keep[g.tgt(a)]) continue;
    arrow_index[a] = arrows.size();
    arrows.push_back(g.arrow_id(a));
    inclusion.arrows.push_back(a);
  }
  std::vector<std::size_t> src, tgt, inv;
  for (std::size_t a : inclusion.arrows) {
    src.push_back(node_index[g.src(a)]);
    tgt.push_back(node_index[g.tgt(a)]);
    inv.push_back(arrow_index[detail::inverse_of(g, a)]);
  }
  return {detail::assemble<G>(std::move(nodes), std::move(arrows), std::move(src), std::move(tgt), std::move(inv)),
          std::move(inclusion)};
}

/// Pushout of X <-f- Z -g-> Y: quotient of X + Y by f(z) ~ g(z). Legs are
/// X -> P and Y -> P.
template <PresheafGraph G>
WithLegs<G> pushout(const Morphism<G>& f, const Morphism<G>& g) {
  if (!(f.domain == g.domain)) throw InputError("pushout: morphisms must share their domain");
  detail::require_valid(f.domain, f.codomain, f.map, "pushout");
  detail::require_valid(g.domain, g.codomain, g.map, "pushout");
  auto s = sum(f.codomain, g.codomain);
  std::vector<std::pair<std::size_t, std::size_t>> node_pairs, arrow_pairs;
  for (std::size_t z = 0; z < f.domain.node_count(); ++z)
    node_pairs.emplace_back(s.first.nodes[f.map.nodes[z]], s.second.nodes[g.map.nodes[z]]);
  for (std::size_t a = 0; a < f.domain.arrow_count(); ++a)
    arrow_pairs.emplace_back(s.first.arrows[f.map.arrows[a]], s.second.arrows[g.map.arrows[a]]);
  auto [graph, q] = quotient(s.graph, node_pairs, arrow_pairs);
  return {std::move(graph), compose(q, s.first), compose(q, s.second)};
}

/// Pullback of X -f-> Z <-g- Y: pairs agreeing in Z. Legs are P -> X and
/// P -> Y.
template <PresheafGraph G>
WithLegs<G> pullback(const Morphism<G>& f, const Morphism<G>& g) {
  if (!(f.codomain == g.codomain)) throw InputError("pullback: morphisms must share their codomain");
  detail::require_valid(f.domain, f.codomain, f.map, "pullback");
  detail::require_valid(g.domain, g.codomain, g.map, "pullback");
  const G& x = f.domain;
  const G& y = g.domain;
  std::vector<std::string> nodes, arrows;
  std::vector<std::size_t> src, tgt, inv;
  ArrowMap px, py;
  std::vector<std::size_t> node_index(x.node_count() * y.node_count(), kDangling);
  std::vector<std::size_t> arrow_index(x.arrow_count() * y.arrow_count(), kDangling);
  for (std::size_t u = 0; u < x.node_count(); ++u)
    for (std::size_t v = 0; v < y.node_count(); ++v) {
      if (f.map.nodes[u] != g.map.nodes[v]) continue;
      node_index[u * y.node_count() + v] = nodes.size();
      nodes.push_back("(" + x.node_id(u) + "," + y.node_id(v) + ")");
      px.nodes.push_back(u);
      py.nodes.push_back(v);
    }
  for (std::size_t a = 0; a < x.arrow_count(); ++a)
    for (std::size_t b = 0; b < y.arrow_count(); ++b) {
      if (f.map.arrows[a] != g.map.arrows[b]) continue;
      arrow_index[a * y.arrow_count() + b] = arrows.size();
      arrows.push_back("(" + x.arrow_id(a) + "," + y.arrow_id(b) + ")");
      src.push_back(node_index[x.src(a) * y.node_count() + y.src(b)]);
      tgt.push_back(node_index[x.tgt(a) * y.node_count() + y.tgt(b)]);
      px.arrows.push_back(a);
      py.arrows.push_back(b);
    }
  for (std::size_t k = 0; k < arrows.size(); ++k)
    inv.push_back(arrow_index[detail::inverse_of(x, px.arrows[k]) * y.arrow_count() +
                              detail::inverse_of(y, py.arrows[k])]);
  return {detail::assemble<G>(std::move(nodes), std::move(arrows), std::move(src), std::move(tgt), std::move(inv)),
          std::move(px), std::move(py)};
}

}  // namespace zetacat
