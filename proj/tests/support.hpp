#pragma once

// Independent reference computations and seeded random corpora shared by the
// unit tests and the acceptance runner. Nothing here calls the search or
// determinant code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zetacat/zetacat.hpp"

namespace zetacat::testing {

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

inline DirectedGraph random_directed(std::mt19937& rng, std::size_t max_nodes, std::size_t max_arcs) {
  std::uniform_int_distribution<std::size_t> node_count(1, max_nodes), arc_count(0, max_arcs);
  const std::size_t n = node_count(rng), m = arc_count(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  DirectedGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_node("n" + std::to_string(v));
  for (std::size_t a = 0; a < m; ++a) g.add_arc("e" + std::to_string(a), pick(rng), pick(rng));
  return g;
}

inline std::vector<DirectedGraph> directed_corpus(std::size_t count = 100, unsigned seed = 20240611) {
  std::mt19937 rng(seed);
  std::vector<DirectedGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_directed(rng, 6, 10));
  return out;
}

/// Loopless multigraph; parallel arcs allowed.
inline UndirectedGraph random_loopless(std::mt19937& rng, std::size_t max_nodes, std::size_t max_arcs) {
  std::uniform_int_distribution<std::size_t> node_count(1, max_nodes), arc_count(0, max_arcs);
  const std::size_t n = node_count(rng);
  const std::size_t m = n < 2 ? 0 : arc_count(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  UndirectedGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_node("n" + std::to_string(v));
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t u = pick(rng), v = pick(rng);
    while (v == u) v = pick(rng);
    g.add_arc("e" + std::to_string(a) + "+", "e" + std::to_string(a) + "-", u, v);
  }
  return g;
}

inline std::vector<UndirectedGraph> undirected_corpus(std::size_t count = 100, unsigned seed = 7781) {
  std::mt19937 rng(seed);
  std::vector<UndirectedGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_loopless(rng, 6, 9));
  return out;
}

/// Undirected graph with loops of both kinds allowed.
inline UndirectedGraph random_undirected(std::mt19937& rng, std::size_t max_nodes, std::size_t max_arcs) {
  std::uniform_int_distribution<std::size_t> node_count(1, max_nodes), arc_count(0, max_arcs);
  std::uniform_int_distribution<int> kind(0, 5);
  const std::size_t n = node_count(rng), m = arc_count(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  UndirectedGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_node("n" + std::to_string(v));
  for (std::size_t a = 0; a < m; ++a) {
    const std::string id = "e" + std::to_string(a);
    if (kind(rng) == 0)
      g.add_degenerate_loop(id, pick(rng));
    else
      g.add_arc(id + "+", id + "-", pick(rng), pick(rng));
  }
  return g;
}

/// A random involutive action of a_0..a_{n-1} on `size` points; each
/// generator is a random matching, possibly with fixed points.
inline GSetAction random_involutive(std::mt19937& rng, std::size_t size, std::size_t n, bool fixed_point_free) {
  std::vector<std::string> carrier, gens;
  for (std::size_t v = 0; v < size; ++v) carrier.push_back("x" + std::to_string(v));
  for (std::size_t i = 0; i < n; ++i) gens.push_back("a" + std::to_string(i));
  std::vector<Permutation> actions;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> order(size);
    for (std::size_t v = 0; v < size; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    Permutation p(size);
    std::bernoulli_distribution pair_up(0.7);
    std::size_t k = 0;
    while (k < size) {
      if (k + 1 < size && (fixed_point_free || pair_up(rng))) {
        p[order[k]] = order[k + 1];
        p[order[k + 1]] = order[k];
        k += 2;
      } else {
        p[order[k]] = order[k];
        k += 1;
      }
    }
    actions.push_back(std::move(p));
  }
  return GSetAction(GroupKind::kInvolutive, std::move(carrier), std::move(gens), std::move(actions));
}

inline GSetAction random_free(std::mt19937& rng, std::size_t size, std::size_t n) {
  std::vector<std::string> carrier, gens;
  for (std::size_t v = 0; v < size; ++v) carrier.push_back("x" + std::to_string(v));
  for (std::size_t i = 0; i < n; ++i) gens.push_back("g" + std::to_string(i));
  std::vector<Permutation> actions;
  for (std::size_t i = 0; i < n; ++i) {
    Permutation p(size);
    for (std::size_t v = 0; v < size; ++v) p[v] = v;
    std::shuffle(p.begin(), p.end(), rng);
    actions.push_back(std::move(p));
  }
  return GSetAction(GroupKind::kFree, std::move(carrier), std::move(gens), std::move(actions));
}

// ---------------------------------------------------------------------------
// Oracles on machine integers
// ---------------------------------------------------------------------------

using Matrix64 = std::vector<std::vector<std::int64_t>>;

inline Matrix64 multiply(const Matrix64& a, const Matrix64& b) {
  const std::size_t n = a.size();
  Matrix64 c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// tr(M), tr(M^2), ..., tr(M^max) by repeated multiplication.
inline std::vector<std::int64_t> traces(const Matrix64& m, std::size_t max) {
  std::vector<std::int64_t> out;
  Matrix64 power = m;
  for (std::size_t p = 1; p <= max; ++p) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += power[i][i];
    out.push_back(t);
    if (p < max) power = multiply(power, m);
  }
  return out;
}

inline Matrix64 adjacency64(const DirectedGraph& g) {
  Matrix64 a(g.node_count(), std::vector<std::int64_t>(g.node_count(), 0));
  for (std::size_t e = 0; e < g.arc_count(); ++e) a[g.src(e)][g.tgt(e)] += 1;
  return a;
}

inline Matrix64 adjacency64(const UndirectedGraph& g) {
  Matrix64 a(g.node_count(), std::vector<std::int64_t>(g.node_count(), 0));
  for (std::size_t e = 0; e < g.half_arc_count(); ++e) a[g.src(e)][g.tgt(e)] += 1;
  return a;
}

inline Matrix64 hashimoto64(const UndirectedGraph& g) {
  const std::size_t n = g.half_arc_count();
  Matrix64 b(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (g.tgt(a) == g.src(c) && c != g.inv(a)) b[a][c] = 1;
  return b;
}

/// Closed node-and-arrow sequences counted by brute force over every
/// sequence of arrows, checking consecutive endpoints (and reversals for
/// the non-backtracking variant). Exponential; tiny inputs only.
inline std::int64_t brute_closed_walks(const UndirectedGraph& g, std::size_t p, bool non_backtracking) {
  const std::size_t m = g.half_arc_count();
  if (m == 0) return 0;
  std::vector<std::size_t> w(p, 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < p && ok; ++k) {
      const std::size_t next = w[(k + 1) % p];
      ok = g.tgt(w[k]) == g.src(next) && !(non_backtracking && next == g.inv(w[k]));
    }
    if (ok) ++count;
    std::size_t k = 0;
    for (; k < p; ++k) {
      if (++w[k] < m) break;
      w[k] = 0;
    }
    if (k == p) break;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Polynomial oracle: Leibniz expansion over Z[t] with int64 coefficients
// ---------------------------------------------------------------------------

using Poly64 = std::vector<std::int64_t>;

inline Poly64 poly_mul(const Poly64& a, const Poly64& b) {
  if (a.empty() || b.empty()) return {};
  Poly64 c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline void poly_add_into(Poly64& acc, const Poly64& b, std::int64_t sign) {
  if (acc.size() < b.size()) acc.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i] += sign * b[i];
}

inline Poly64 poly_trim(Poly64 p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// det of a polynomial matrix by summing over all permutations.
inline Poly64 leibniz_det(const std::vector<std::vector<Poly64>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Poly64 det;
  if (n == 0) return {1};
  do {
    std::int64_t sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly64 term{1};
    for (std::size_t i = 0; i < n && !term.empty(); ++i) term = poly_mul(term, m[i][perm[i]]);
    poly_add_into(det, term, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return poly_trim(det);
}

/// det(I - tM) by Leibniz expansion.
inline Poly64 det_one_minus_t64(const Matrix64& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Poly64>> m(n, std::vector<Poly64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Poly64{i == j ? 1 : 0, -a[i][j]};
  return leibniz_det(m);
}

inline Poly64 to_poly64(const IntPolynomial& p) {
  Poly64 out;
  for (long k = 0; k <= p.degree(); ++k) out.push_back(static_cast<std::int64_t>(p.coefficient(static_cast<std::size_t>(k))));
  return out;
}

/// Necklace-style count of primitive closed walks of length l through
/// explicit rotation classes of the walk sequences (tiny inputs only).
inline std::vector<std::int64_t> primitive_classes_directed(const DirectedGraph& g, std::size_t max_length) {
  std::vector<std::int64_t> out;
  const std::size_t m = g.arc_count();
  for (std::size_t l = 1; l <= max_length; ++l) {
    std::set<std::vector<std::size_t>> classes;
    if (m > 0) {
      std::vector<std::size_t> w(l, 0);
      while (true) {
        bool closed = true;
        for (std::size_t k = 0; k < l && closed; ++k) closed = g.tgt(w[k]) == g.src(w[(k + 1) % l]);
        bool primitive = true;
        for (std::size_t d = 1; d < l && closed && primitive; ++d) {
          if (l % d != 0) continue;
          bool periodic = true;
          for (std::size_t k = d; k < l && periodic; ++k) periodic = w[k] == w[k - d];
          primitive = !periodic;
        }
        if (closed && primitive) {
          std::vector<std::size_t> best = w, rot(l);
          for (std::size_t r = 1; r < l; ++r) {
            for (std::size_t k = 0; k < l; ++k) rot[k] = w[(k + r) % l];
            best = std::min(best, rot);
          }
          classes.insert(best);
        }
        std::size_t k = 0;
        for (; k < l; ++k) {
          if (++w[k] < m) break;
          w[k] = 0;
        }
        if (k == l) break;
      }
    }
    out.push_back(static_cast<std::int64_t>(classes.size()));
  }
  return out;
}

/// Relabels every id of an undirected graph and permutes node and half-arc
/// order, producing an isomorphic graph with a different presentation.
inline UndirectedGraph shuffled_copy(const UndirectedGraph& g, std::mt19937& rng, const std::string& tag = "r") {
  const std::size_t n = g.node_count(), h = g.half_arc_count();
  std::vector<std::size_t> node_perm(n), arc_perm(h);
  for (std::size_t i = 0; i < n; ++i) node_perm[i] = i;
  for (std::size_t i = 0; i < h; ++i) arc_perm[i] = i;
  std::shuffle(node_perm.begin(), node_perm.end(), rng);
  std::shuffle(arc_perm.begin(), arc_perm.end(), rng);
  std::vector<std::string> nodes(n), arcs(h);
  std::vector<std::size_t> src(h), tgt(h), inv(h);
  for (std::size_t v = 0; v < n; ++v) nodes[node_perm[v]] = tag + g.node_id(v);
  for (std::size_t a = 0; a < h; ++a) {
    arcs[arc_perm[a]] = tag + g.half_arc_id(a);
    src[arc_perm[a]] = node_perm[g.src(a)];
    tgt[arc_perm[a]] = node_perm[g.tgt(a)];
    inv[arc_perm[a]] = arc_perm[g.inv(a)];
  }
  return UndirectedGraph(std::move(nodes), std::move(arcs), std::move(src), std::move(tgt), std::move(inv));
}

}  // namespace zetacat::testing
