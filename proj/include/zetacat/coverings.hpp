#pragma once

// Graph coverings: verification, pushouts inside the category of coverings
// of a fixed base, cycle-to-covering extension, edge colorings as coverings
// of the bouquet B_n, and the bounded weak-equivalence check for coverings.

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "zetacat/error.hpp"
#include "zetacat/graph.hpp"
#include "zetacat/limits.hpp"
#include "zetacat/standard_graphs.hpp"
#include "zetacat/zeta.hpp"

namespace zetacat {

using UndirectedMorphism = Morphism<UndirectedGraph>;

struct StarFailure {
  std::size_t node;
  bool injective;
  bool surjective;
};

struct CoveringReport {
  bool covering = true;
  std::vector<StarFailure> failures;
};

/// f is a covering when every star map Y(y,*) -> X(f(y),*) is bijective.
inline CoveringReport check_covering(const UndirectedMorphism& f) {
  if (!validate_morphism(f).empty()) throw InputError("covering check: invalid morphism");
  CoveringReport report;
  for (std::size_t y = 0; y < f.domain.node_count(); ++y) {
    const Star here = star(f.domain, y);
    const Star there = star(f.codomain, f.map.nodes[y]);
    std::set<std::size_t> image;
    bool injective = true;
    for (std::size_t a : here.arcs)
      if (!image.insert(orbit_representative(f.codomain, f.map.arrows[a])).second) injective = false;
    const bool surjective = image == std::set<std::size_t>(there.arcs.begin(), there.arcs.end());
    if (!injective || !surjective) {
      report.covering = false;
      report.failures.push_back({y, injective, surjective});
    }
  }
  return report;
}

inline bool is_covering(const UndirectedMorphism& f) { return check_covering(f).covering; }

/// Fiber cardinality of a covering onto a connected base; nullopt when the
/// base is disconnected.
inline std::optional<std::size_t> covering_degree(const UndirectedMorphism& f) {
  if (f.codomain.node_count() == 0 || !is_connected(f.codomain)) return std::nullopt;
  std::vector<std::size_t> fiber(f.codomain.node_count(), 0);
  for (std::size_t x : f.map.nodes) ++fiber[x];
  return fiber.front();
}

// ---------------------------------------------------------------------------
// Pushouts in the category of coverings of X
// ---------------------------------------------------------------------------

struct CoveringPushout {
  WithLegs<UndirectedGraph> pushout;  // legs Z -> L, Z' -> L
  UndirectedMorphism to_base;         // L -> X
};

/// Given coverings Z -> X, Z' -> X and covering morphisms f : Y -> Z,
/// g : Y -> Z' over X, glue Z + Z' along f(y) ~ g(y) and map the result
/// to X.
inline CoveringPushout covering_pushout(const UndirectedMorphism& f, const UndirectedMorphism& g,
                                        const UndirectedMorphism& z_cover, const UndirectedMorphism& zp_cover) {
  if (!(z_cover.codomain == zp_cover.codomain)) throw InputError("covering pushout: coverings have different bases");
  if (!(f.codomain == z_cover.domain) || !(g.codomain == zp_cover.domain))
    throw InputError("covering pushout: morphisms do not land in the covering spaces");
  for (const auto* m : {&f, &g, &z_cover, &zp_cover})
    if (!is_covering(*m)) throw InputError("covering pushout: input is not a covering");
  if (compose(z_cover.map, f.map) != compose(zp_cover.map, g.map))
    throw InputError("covering pushout: f and g are not morphisms over the base");

  CoveringPushout out{pushout(f, g), {}};
  const UndirectedGraph& l = out.pushout.graph;
  ArrowMap down;
  down.nodes.assign(l.node_count(), kDangling);
  down.arrows.assign(l.half_arc_count(), kDangling);
  auto push_down = [&](const ArrowMap& leg, const ArrowMap& cover) {
    for (std::size_t v = 0; v < leg.nodes.size(); ++v) {
      auto& slot = down.nodes[leg.nodes[v]];
      if (slot != kDangling && slot != cover.nodes[v]) throw InternalError("covering pushout: induced map ill-defined");
      slot = cover.nodes[v];
    }
    for (std::size_t a = 0; a < leg.arrows.size(); ++a) {
      auto& slot = down.arrows[leg.arrows[a]];
      if (slot != kDangling && slot != cover.arrows[a]) throw InternalError("covering pushout: induced map ill-defined");
      slot = cover.arrows[a];
    }
  };
  push_down(out.pushout.first, z_cover.map);
  push_down(out.pushout.second, zp_cover.map);
  out.to_base = {l, z_cover.codomain, std::move(down)};
  if (!is_covering(out.to_base)) throw InternalError("covering pushout: induced map is not a covering");
  return out;
}

// ---------------------------------------------------------------------------
// Extending a non-backtracking cycle to a cycle-with-forest covering
// ---------------------------------------------------------------------------

/// A p-cycle with finite trees attached, mapped into Y (and on to X) so that
/// the restriction to the cycle is the given cycle.
struct CycleWithForest {
  UndirectedGraph graph;
  ArrowMap cycle;     // c^p_U -> graph
  ArrowMap to_total;  // graph -> Y
  ArrowMap to_base;   // graph -> X
  std::vector<std::size_t> node_depth;
  std::size_t depth = 0;
  // Star maps are bijective at every node of depth < `depth`.
  bool covering_within_depth = false;
};

inline CycleWithForest extend_cycle_with_forest(const UndirectedMorphism& cover, const ArrowMap& cycle,
                                                std::size_t depth = 1) {
  const UndirectedGraph& y = cover.domain;
  if (has_loops(y)) throw PreconditionError("cycle extension: loops present in the covering space");
  if (!is_covering(cover)) throw InputError("cycle extension: structure map is not a covering");
  const std::size_t p = cycle.nodes.size();
  const UndirectedGraph base_cycle = graphs::undirected_cycle(static_cast<long long>(p));
  if (!validate_morphism(base_cycle, y, cycle).empty()) throw InputError("cycle extension: invalid cycle");
  if (has_backtracking(y, cycle)) throw InputError("cycle extension: cycle backtracks");

  CycleWithForest out;
  out.depth = depth;
  UndirectedGraph u = base_cycle;
  ArrowMap to_total = cycle;
  std::vector<std::size_t> node_depth(p, 0);

  struct Frontier {
    std::size_t node;
    std::size_t level;
    std::vector<std::size_t> used;  // orbits of Y already present at this node
  };
  std::queue<Frontier> frontier;
  for (std::size_t n = 0; n < p; ++n) {
    const std::size_t out_orbit = orbit_representative(y, cycle.arrows[2 * n]);
    const std::size_t in_orbit = orbit_representative(y, cycle.arrows[2 * ((n + p - 1) % p)]);
    frontier.push({n, 0, {out_orbit, in_orbit}});
  }
  std::size_t fresh = 0;
  while (!frontier.empty()) {
    Frontier f = std::move(frontier.front());
    frontier.pop();
    if (f.level >= depth) continue;
    const std::size_t image = to_total.nodes[f.node];
    for (std::size_t orbit : star(y, image).arcs) {
      if (std::find(f.used.begin(), f.used.end(), orbit) != f.used.end()) continue;
      const std::size_t a = y.src(orbit) == image ? orbit : y.inv(orbit);
      const std::size_t w = u.add_node("t" + std::to_string(fresh));
      const std::string e = "t" + std::to_string(fresh++);
      u.add_arc(e + "+", e + "-", f.node, w);
      to_total.nodes.push_back(y.tgt(a));
      to_total.arrows.push_back(a);
      to_total.arrows.push_back(y.inv(a));
      node_depth.push_back(f.level + 1);
      frontier.push({w, f.level + 1, {orbit}});
    }
  }

  out.cycle = identity_map(base_cycle);
  out.to_base = compose(cover.map, to_total);
  out.graph = std::move(u);
  out.to_total = std::move(to_total);
  out.node_depth = std::move(node_depth);

  if (!validate_morphism(out.graph, y, out.to_total).empty() || compose(out.to_total, out.cycle) != cycle)
    throw InternalError("cycle extension: structure map does not restrict to the cycle");
  const auto report = check_covering({out.graph, y, out.to_total});
  out.covering_within_depth = std::none_of(report.failures.begin(), report.failures.end(), [&](const StarFailure& s) {
    return out.node_depth[s.node] < depth;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Colorings as coverings of B_n
// ---------------------------------------------------------------------------

/// An edge coloring by n colors in which every node sees each color once,
/// returned as a covering x -> B_n (color k is the loop "a{k}").
inline std::optional<UndirectedMorphism> find_n_coloring(const UndirectedGraph& x, std::size_t n) {
  std::vector<std::size_t> orbits;
  for (std::size_t a = 0; a < x.half_arc_count(); ++a)
    if (x.is_orbit_representative(a)) orbits.push_back(a);
  for (std::size_t v = 0; v < x.node_count(); ++v)
    if (star(x, v).arcs.size() != n) return std::nullopt;

  std::vector<std::size_t> color(orbits.size(), kDangling);
  std::vector<std::vector<bool>> used(x.node_count(), std::vector<bool>(n, false));
  auto assign = [&](auto&& self, std::size_t k) -> bool {
    if (k == orbits.size()) return true;
    const std::size_t a = orbits[k], s = x.src(a), t = x.tgt(a);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[s][c] || used[t][c]) continue;
      used[s][c] = used[t][c] = true;
      color[k] = c;
      if (self(self, k + 1)) return true;
      used[s][c] = used[t][c] = false;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;

  UndirectedMorphism f{x, graphs::bouquet(static_cast<long long>(n)), {}};
  f.map.nodes.assign(x.node_count(), 0);
  f.map.arrows.assign(x.half_arc_count(), 0);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    f.map.arrows[orbits[k]] = color[k];
    f.map.arrows[x.inv(orbits[k])] = color[k];
  }
  return f;
}

// ---------------------------------------------------------------------------
// Bounded weak equivalence between coverings
// ---------------------------------------------------------------------------

/// Checks that the covering morphism h : Y -> Z induces bijections on
/// non-backtracking p-cycles for p <= bound. This is a bounded check, not a
/// complete decision.
inline CountingVerdict covering_weak_equiv(const UndirectedMorphism& h, std::size_t bound) {
  if (has_loops(h.domain) || has_loops(h.codomain)) throw PreconditionError("covering weak equivalence: loops present");
  if (!is_covering(h)) throw InputError("covering weak equivalence: morphism is not a covering");
  return counting_bijectivity(h, bound, CycleFamily::kUndirectedNoBacktrack);
}

/// As above, additionally requiring g∘h = f for the structure maps
/// f : Y -> X and g : Z -> X.
inline CountingVerdict covering_weak_equiv(const UndirectedMorphism& h, const UndirectedMorphism& f,
                                           const UndirectedMorphism& g, std::size_t bound) {
  if (!is_covering(f) || !is_covering(g)) throw InputError("covering weak equivalence: structure map is not a covering");
  if (!(h.domain == f.domain) || !(h.codomain == g.domain) || compose(g.map, h.map) != f.map)
    throw InputError("covering weak equivalence: morphism does not commute with the structure maps");
  return covering_weak_equiv(h, bound);
}

/// A common covering L of two colored graphs Y, Z over B_n, built as the
/// union of the components of the fibered product Y x_{B_n} Z that carry the
/// matched cycle pairs.
struct CommonCover {
  UndirectedGraph graph;
  UndirectedMorphism to_first;   // L -> Y
  UndirectedMorphism to_second;  // L -> Z
  CountingVerdict first_verdict;
  CountingVerdict second_verdict;
};

inline CommonCover common_cover(const UndirectedMorphism& y_cover, const UndirectedMorphism& z_cover,
                                const std::vector<std::pair<ArrowMap, ArrowMap>>& matched_cycles, std::size_t bound) {
  if (!(y_cover.codomain == z_cover.codomain)) throw InputError("common cover: different bases");
  if (!is_covering(y_cover) || !is_covering(z_cover)) throw InputError("common cover: structure map is not a covering");
  if (has_loops(y_cover.domain) || has_loops(z_cover.domain)) throw PreconditionError("common cover: loops present");
  if (ihara_reciprocal(y_cover.domain) != ihara_reciprocal(z_cover.domain))
    throw PreconditionError("common cover: Ihara zeta functions differ");
  for (const auto& [u, v] : matched_cycles)
    if (compose(y_cover.map, u) != compose(z_cover.map, v))
      throw InputError("common cover: matched cycles carry different colors");

  const auto fibered = pullback(y_cover, z_cover);
  std::size_t ncomp = 0;
  const auto comp = component_labels(fibered.graph, &ncomp);
  std::vector<bool> keep_comp(ncomp, false);
  for (const auto& [u, v] : matched_cycles) {
    for (std::size_t k = 0; k < fibered.graph.node_count(); ++k)
      if (fibered.first.nodes[k] == u.nodes[0] && fibered.second.nodes[k] == v.nodes[0]) keep_comp[comp[k]] = true;
  }
  std::vector<bool> keep(fibered.graph.node_count());
  for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = keep_comp[comp[k]];
  auto [l, inclusion] = induced_subgraph(fibered.graph, keep);

  CommonCover out;
  out.to_first = {l, y_cover.domain, compose(fibered.first, inclusion)};
  out.to_second = {l, z_cover.domain, compose(fibered.second, inclusion)};
  out.graph = std::move(l);
  out.first_verdict = covering_weak_equiv(out.to_first, bound);
  out.second_verdict = covering_weak_equiv(out.to_second, bound);
  return out;
}

}  // namespace zetacat
