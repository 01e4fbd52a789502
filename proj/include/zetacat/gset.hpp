#pragma once

// Finite G-sets presented by named generators acting as permutations, their
// Cayley graphs, n-colored graphs, dessins d'enfants and Galoisian
// complexes presented by their simplex sets.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zetacat/coverings.hpp"
#include "zetacat/error.hpp"
#include "zetacat/graph.hpp"
#include "zetacat/zeta.hpp"

namespace zetacat {

enum class GroupKind {
  kFree,        // no relations among the generators
  kInvolutive,  // every generator squares to the identity
};

inline const char* to_string(GroupKind kind) { return kind == GroupKind::kFree ? "free" : "involutive"; }

using Permutation = std::vector<std::size_t>;

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Cycle lengths of a permutation, largest first.
inline std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t v = start; !seen[v]; v = p[v]) seen[v] = true, ++len;
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

/// The cycles of a permutation, each listed from its smallest element, in
/// order of that element.
inline std::vector<std::vector<std::size_t>> cycles_of(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    out.emplace_back();
    for (std::size_t v = start; !seen[v]; v = p[v]) seen[v] = true, out.back().push_back(v);
  }
  return out;
}

class GSetAction {
 public:
  GSetAction() = default;

  GSetAction(GroupKind kind, std::vector<std::string> carrier, std::vector<std::string> generators,
             std::vector<Permutation> actions)
      : kind_(kind), carrier_(std::move(carrier)), generators_(std::move(generators)), actions_(std::move(actions)) {
    if (generators_.size() != actions_.size()) throw InputError("G-set: one action per generator required");
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      const Permutation& p = actions_[i];
      if (p.size() != carrier_.size() || !is_permutation(p))
        throw InputError("G-set: generator '" + generators_[i] + "' does not act bijectively");
      if (kind_ == GroupKind::kInvolutive)
        for (std::size_t x = 0; x < p.size(); ++x)
          if (p[p[x]] != x) throw InputError("G-set: generator '" + generators_[i] + "' is not an involution");
    }
    std::vector<std::string> sorted = carrier_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("G-set: duplicate carrier element");
  }

  GroupKind kind() const { return kind_; }
  std::size_t size() const { return carrier_.size(); }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::vector<std::string>& generators() const { return generators_; }
  const Permutation& action(std::size_t generator) const { return actions_.at(generator); }
  std::size_t act(std::size_t generator, std::size_t x) const { return actions_.at(generator).at(x); }

  friend bool operator==(const GSetAction&, const GSetAction&) = default;

 private:
  GroupKind kind_ = GroupKind::kFree;
  std::vector<std::string> carrier_;
  std::vector<std::string> generators_;
  std::vector<Permutation> actions_;
};

/// A map of carriers commuting with every generator.
inline bool is_equivariant(const GSetAction& x, const GSetAction& y, const std::vector<std::size_t>& f) {
  if (x.generators() != y.generators() || f.size() != x.size()) return false;
  for (std::size_t v : f)
    if (v >= y.size()) return false;
  for (std::size_t i = 0; i < x.generator_count(); ++i)
    for (std::size_t v = 0; v < x.size(); ++v)
      if (f[x.act(i, v)] != y.act(i, f[v])) return false;
  return true;
}

/// One-point set on which every generator acts trivially.
inline GSetAction trivial_gset(GroupKind kind, std::vector<std::string> generators) {
  std::vector<Permutation> actions(generators.size(), Permutation{0});
  return GSetAction(kind, {"*"}, std::move(generators), std::move(actions));
}

// ---------------------------------------------------------------------------
// Cayley graphs
// ---------------------------------------------------------------------------

/// Nodes are carrier elements; arc "g:x" runs x -> g(x). Arc index is
/// generator * |carrier| + x.
inline DirectedGraph cayley_directed(const GSetAction& x) {
  DirectedGraph g;
  for (const auto& e : x.carrier()) g.add_node(e);
  for (std::size_t i = 0; i < x.generator_count(); ++i)
    for (std::size_t v = 0; v < x.size(); ++v) g.add_arc(x.generators()[i] + ":" + x.carrier()[v], v, x.act(i, v));
  return g;
}

/// Cayley graph of an involutive action: half-arc "g:x" runs x -> g(x) and is
/// paired with "g:g(x)"; it is degenerate when g fixes x.
inline UndirectedGraph cayley_undirected(const GSetAction& x) {
  if (x.kind() != GroupKind::kInvolutive) throw InputError("undirected Cayley graph needs an involutive action");
  const std::size_t n = x.size();
  std::vector<std::string> half_arcs;
  std::vector<std::size_t> src, tgt, inv;
  for (std::size_t i = 0; i < x.generator_count(); ++i)
    for (std::size_t v = 0; v < n; ++v) {
      half_arcs.push_back(x.generators()[i] + ":" + x.carrier()[v]);
      src.push_back(v);
      tgt.push_back(x.act(i, v));
      inv.push_back(i * n + x.act(i, v));
    }
  return UndirectedGraph(x.carrier(), std::move(half_arcs), std::move(src), std::move(tgt), std::move(inv));
}

/// Generator labelling a Cayley half-arc (or arc) index.
inline std::size_t cayley_generator(const GSetAction& x, std::size_t arrow) { return arrow / x.size(); }

/// The coloring of a Cayley graph by generators, as a covering onto B_n.
inline UndirectedMorphism cayley_coloring(const GSetAction& x) {
  const UndirectedGraph g = cayley_undirected(x);
  UndirectedMorphism f{g, graphs::bouquet(static_cast<long long>(x.generator_count())), {}};
  f.map.nodes.assign(g.node_count(), 0);
  for (std::size_t a = 0; a < g.half_arc_count(); ++a) f.map.arrows.push_back(cayley_generator(x, a));
  return f;
}

/// Image of an equivariant map under the Cayley functor.
inline ArrowMap cayley_morphism(const GSetAction& x, const GSetAction& y, const std::vector<std::size_t>& f) {
  if (!is_equivariant(x, y, f)) throw InputError("Cayley functor: map is not equivariant");
  ArrowMap m;
  m.nodes = f;
  for (std::size_t i = 0; i < x.generator_count(); ++i)
    for (std::size_t v = 0; v < x.size(); ++v) m.arrows.push_back(i * y.size() + f[v]);
  return m;
}

/// Inverse of cayley_undirected on colored graphs: the carrier is the node
/// set and a_i(x) is the far end of the a_i-colored arc at x.
inline GSetAction colored_to_gset(const UndirectedMorphism& coloring) {
  const UndirectedGraph& x = coloring.domain;
  const UndirectedGraph& b = coloring.codomain;
  if (b.node_count() != 1) throw InputError("coloring must map onto a one-node bouquet");
  for (std::size_t l = 0; l < b.half_arc_count(); ++l)
    if (!b.is_degenerate(l)) throw InputError("coloring base must have degenerate loops only");
  if (!is_covering(coloring)) throw InputError("coloring is not a covering");
  std::vector<Permutation> actions(b.half_arc_count(), Permutation(x.node_count(), kDangling));
  for (std::size_t a = 0; a < x.half_arc_count(); ++a) actions[coloring.map.arrows[a]][x.src(a)] = x.tgt(a);
  return GSetAction(GroupKind::kInvolutive, x.node_ids(), b.half_arc_ids(), std::move(actions));
}

// ---------------------------------------------------------------------------
// Weak equivalence transferred along the Cayley functor
// ---------------------------------------------------------------------------

inline void require_same_generators(const GSetAction& x, const GSetAction& y) {
  if (x.generators() != y.generators()) throw InputError("G-sets have different generator lists");
}

inline bool weak_equiv_gsets(const GSetAction& x, const GSetAction& y) {
  require_same_generators(x, y);
  return weak_equiv_directed(cayley_directed(x), cayley_directed(y));
}

/// Bounded check that an equivariant map is a weak equivalence: its Cayley
/// image is bijective on closed walks of each length <= bound.
inline CountingVerdict weak_equiv_gset_map(const GSetAction& x, const GSetAction& y, const std::vector<std::size_t>& f,
                                           std::size_t bound) {
  require_same_generators(x, y);
  Morphism<DirectedGraph> m{cayley_directed(x), cayley_directed(y), cayley_morphism(x, y, f)};
  return counting_bijectivity(m, bound, CycleFamily::kDirected);
}

struct CofibrancyVerdict {
  bool cofibrant;
  std::string reason;
};

/// A free action is cofibrant when every component of its Cayley graph is a
/// single directed cycle with in-trees attached.
inline CofibrancyVerdict is_cofibrant_fnset(const GSetAction& x) {
  if (x.kind() != GroupKind::kFree) throw InputError("cofibrancy is decided for free actions only");
  const DirectedGraph g = cayley_directed(x);
  std::size_t ncomp = 0;
  const auto comp = component_labels(g, &ncomp);
  std::vector<std::size_t> nodes(ncomp, 0), arcs(ncomp, 0), max_out(ncomp, 0);
  std::vector<std::size_t> out_degree(g.node_count(), 0);
  for (std::size_t a = 0; a < g.arc_count(); ++a) ++out_degree[g.src(a)], ++arcs[comp[g.src(a)]];
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    ++nodes[comp[v]];
    max_out[comp[v]] = std::max(max_out[comp[v]], out_degree[v]);
  }
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (arcs[c] > nodes[c]) {
      std::string reason = "a component has " + std::to_string(arcs[c]) + " arcs on " + std::to_string(nodes[c]) +
                           " nodes, so it contains more than one cycle";
      if (x.generator_count() >= 2)
        reason += " (every node has out-degree " + std::to_string(x.generator_count()) + ")";
      return {false, reason};
    }
    if (max_out[c] > 1) return {false, "a node has more than one outgoing arc"};
  }
  return {true, ncomp == 0 ? "empty action" : "every component is a cycle with in-trees attached"};
}

// ---------------------------------------------------------------------------
// Dessins d'enfants
// ---------------------------------------------------------------------------

/// A finite set with two permutations s0, s1 (a free action of F_2).
class Dessin {
 public:
  explicit Dessin(GSetAction action) : action_(std::move(action)) {
    if (action_.kind() != GroupKind::kFree || action_.generator_count() != 2)
      throw InputError("a dessin is a free action with exactly two generators");
  }
  Dessin(std::vector<std::string> carrier, Permutation s0, Permutation s1)
      : Dessin(GSetAction(GroupKind::kFree, std::move(carrier), {"s0", "s1"}, {std::move(s0), std::move(s1)})) {}

  const GSetAction& action() const { return action_; }
  const Permutation& s0() const { return action_.action(0); }
  const Permutation& s1() const { return action_.action(1); }

 private:
  GSetAction action_;
};

namespace dessins {

/// One point, both generators trivial.
inline Dessin d0() { return Dessin({"e"}, {0}, {0}); }

/// Two points; s0 acts trivially and s1 swaps them.
inline Dessin d1() { return Dessin({"x", "y"}, {0, 1}, {1, 0}); }

}  // namespace dessins

struct BipartiteMap {
  UndirectedGraph graph;
  std::vector<bool> white;  // per node
};

/// White nodes are the cycles of s0, black nodes the cycles of s1; each
/// carrier element e is an edge "e+" : white -> black.
inline BipartiteMap dessin_bipartite(const Dessin& d) {
  const auto white_cycles = cycles_of(d.s0());
  const auto black_cycles = cycles_of(d.s1());
  const std::size_t n = d.action().size();
  std::vector<std::size_t> white_of(n), black_of(n);
  BipartiteMap out;
  for (std::size_t k = 0; k < white_cycles.size(); ++k) {
    out.graph.add_node("w" + std::to_string(k));
    out.white.push_back(true);
    for (std::size_t e : white_cycles[k]) white_of[e] = k;
  }
  for (std::size_t k = 0; k < black_cycles.size(); ++k) {
    out.graph.add_node("b" + std::to_string(k));
    out.white.push_back(false);
    for (std::size_t e : black_cycles[k]) black_of[e] = white_cycles.size() + k;
  }
  for (std::size_t e = 0; e < n; ++e) {
    const std::string& id = d.action().carrier()[e];
    out.graph.add_arc(id + "+", id + "-", white_of[e], black_of[e]);
  }
  return out;
}

/// Cycle types of s0, s1 and (s0 s1)^-1.
struct Passport {
  std::vector<std::size_t> zero;
  std::vector<std::size_t> one;
  std::vector<std::size_t> infinity;
  friend bool operator==(const Passport&, const Passport&) = default;
};

inline Passport dessin_passport(const Dessin& d) {
  const std::size_t n = d.action().size();
  Permutation inverse_product(n);
  for (std::size_t x = 0; x < n; ++x) inverse_product[d.s1()[d.s0()[x]]] = x;
  return {cycle_type(d.s0()), cycle_type(d.s1()), cycle_type(inverse_product)};
}

// ---------------------------------------------------------------------------
// Galoisian complexes
// ---------------------------------------------------------------------------

/// Simplexes of a Galoisian n-complex: an involutive action of a_0..a_n on
/// the simplex set, split into direct (+) and indirect (-) simplexes, where
/// every generator exchanges the two classes.
class GaloisComplex {
 public:
  GaloisComplex(GSetAction simplexes, std::vector<bool> positive)
      : simplexes_(std::move(simplexes)), positive_(std::move(positive)) {
    if (simplexes_.kind() != GroupKind::kInvolutive) throw InputError("Galois complex: action must be involutive");
    if (positive_.size() != simplexes_.size()) throw InputError("Galois complex: one sign per simplex required");
    if (simplexes_.generator_count() == 0) throw InputError("Galois complex: at least one generator required");
    for (std::size_t i = 0; i < simplexes_.generator_count(); ++i)
      for (std::size_t x = 0; x < simplexes_.size(); ++x)
        if (positive_[simplexes_.act(i, x)] == positive_[x])
          throw InputError("Galois complex: generator '" + simplexes_.generators()[i] +
                           "' does not exchange direct and indirect simplexes");
  }

  const GSetAction& simplexes() const { return simplexes_; }
  bool positive(std::size_t x) const { return positive_.at(x); }
  // n for an n-complex (generators a_0..a_n).
  std::size_t dimension() const { return simplexes_.generator_count() - 1; }

 private:
  GSetAction simplexes_;
  std::vector<bool> positive_;
};

/// The complex made of one direct and one indirect n-simplex glued along
/// every face.
inline GaloisComplex two_simplex_sphere(std::size_t n) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i <= n; ++i) gens.push_back("a" + std::to_string(i));
  std::vector<Permutation> actions(n + 1, Permutation{1, 0});
  return GaloisComplex(GSetAction(GroupKind::kInvolutive, {"S+", "S-"}, std::move(gens), std::move(actions)),
                       {true, false});
}

struct RamificationEntry {
  std::size_t length;                  // 2p
  std::vector<std::size_t> colors;     // generator indices used by the cycle
  std::vector<std::size_t> nodes;      // simplexes visited, canonical rotation
  std::optional<std::size_t> degree;   // p, when the faces meet
  bool vertex_ambiguous = false;       // colors.size() == dimension
  std::size_t based_count = 0;         // rooted, oriented representatives
};

struct RamificationProfile {
  std::size_t dimension = 0;
  std::size_t bound = 0;
  bool all_even = true;
  std::vector<RamificationEntry> entries;
};

namespace detail {

inline std::vector<std::size_t> canonical_cycle(const UndirectedGraph& g, const std::vector<std::size_t>& walk) {
  const std::size_t len = walk.size();
  std::vector<std::size_t> reversed(len);
  for (std::size_t k = 0; k < len; ++k) reversed[k] = g.inv(walk[len - 1 - k]);
  std::vector<std::size_t> best = walk, candidate(len);
  for (const std::vector<std::size_t>* w : {&walk, static_cast<const std::vector<std::size_t>*>(&reversed)})
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t k = 0; k < len; ++k) candidate[k] = (*w)[(k + r) % len];
      if (candidate < best) best = candidate;
    }
  return best;
}

inline bool is_primitive_walk(const std::vector<std::size_t>& walk) {
  const std::size_t len = walk.size();
  for (std::size_t period = 1; period < len; ++period) {
    if (len % period != 0) continue;
    bool repeats = true;
    for (std::size_t k = period; k < len && repeats; ++k) repeats = walk[k] == walk[k - period];
    if (repeats) return false;
  }
  return true;
}

}  // namespace detail

/// Primitive non-backtracking cycles of length <= 2 * bound in the colored
/// simplex graph, up to rotation and reversal, with their color sets and the
/// ramification degree p for cycles of length 2p whose faces meet (at most n
/// colors in an n-complex).
inline RamificationProfile ramification_profile(const GaloisComplex& complex, std::size_t bound) {
  const GSetAction& omega = complex.simplexes();
  const UndirectedGraph g = cayley_undirected(omega);
  if (has_loops(g)) throw InternalError("simplex graph of a Galois complex has a loop");
  RamificationProfile profile;
  profile.dimension = complex.dimension();
  profile.bound = bound;
  for (std::size_t len = 1; len <= 2 * bound; ++len) {
    const auto cycles = nb_cycles(g, len);
    if (len % 2 == 1) {
      if (!cycles.empty()) profile.all_even = false;
      continue;
    }
    std::map<std::vector<std::size_t>, std::size_t> classes;
    for (const auto& h : cycles) {
      std::vector<std::size_t> walk(len);
      for (std::size_t k = 0; k < len; ++k) walk[k] = h.arrows[2 * k];
      if (!detail::is_primitive_walk(walk)) continue;
      ++classes[detail::canonical_cycle(g, walk)];
    }
    for (const auto& [walk, count] : classes) {
      RamificationEntry e;
      e.length = len;
      e.based_count = count;
      std::set<std::size_t> colors;
      for (std::size_t a : walk) {
        colors.insert(cayley_generator(omega, a));
        e.nodes.push_back(g.src(a));
      }
      e.colors.assign(colors.begin(), colors.end());
      if (e.colors.size() <= profile.dimension) e.degree = len / 2;
      e.vertex_ambiguous = e.colors.size() == profile.dimension;
      profile.entries.push_back(std::move(e));
    }
  }
  return profile;
}

/// The free action on direct simplexes by g_i = a_i ∘ a_0, i = 1..n.
inline GSetAction plus_action(const GaloisComplex& complex) {
  const GSetAction& omega = complex.simplexes();
  std::vector<std::size_t> plus, index(omega.size(), kDangling);
  std::vector<std::string> carrier;
  for (std::size_t x = 0; x < omega.size(); ++x)
    if (complex.positive(x)) {
      index[x] = plus.size();
      plus.push_back(x);
      carrier.push_back(omega.carrier()[x]);
    }
  std::vector<std::string> gens;
  std::vector<Permutation> actions;
  for (std::size_t i = 1; i < omega.generator_count(); ++i) {
    gens.push_back(omega.generators()[0] + omega.generators()[i]);
    Permutation p;
    for (std::size_t x : plus) p.push_back(index.at(omega.act(i, omega.act(0, x))));
    actions.push_back(std::move(p));
  }
  return GSetAction(GroupKind::kFree, std::move(carrier), std::move(gens), std::move(actions));
}

}  // namespace zetacat
