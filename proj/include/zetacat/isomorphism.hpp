#pragma once

// Isomorphism testing by backtracking over node bijections, pruned by
// degree and loop signatures. Desk-scale instances only.

#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "zetacat/graph.hpp"

namespace zetacat {

namespace detail {

// Arrows grouped by (src, tgt); degenerate half-arcs kept apart so that a
// node bijection preserving both tables lifts to an arrow bijection.
template <PresheafGraph G>
struct ArrowTable {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> plain;
  std::vector<std::vector<std::size_t>> fixed;

  explicit ArrowTable(const G& g) : n(g.node_count()), plain(n * n), fixed(n * n) {
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      bool degenerate = false;
      if constexpr (kHasInvolution<G>) degenerate = g.is_degenerate(a);
      (degenerate ? fixed : plain)[g.src(a) * n + g.tgt(a)].push_back(a);
    }
  }

  std::size_t plain_count(std::size_t u, std::size_t v) const { return plain[u * n + v].size(); }
  std::size_t fixed_count(std::size_t u, std::size_t v) const { return fixed[u * n + v].size(); }
};

template <PresheafGraph G>
std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> node_signatures(const ArrowTable<G>& t) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> sig(t.n);
  for (std::size_t u = 0; u < t.n; ++u) {
    std::size_t out = 0, in = 0;
    for (std::size_t v = 0; v < t.n; ++v) {
      out += t.plain_count(u, v) + t.fixed_count(u, v);
      in += t.plain_count(v, u) + t.fixed_count(v, u);
    }
    sig[u] = {out, in, t.plain_count(u, u), t.fixed_count(u, u)};
  }
  return sig;
}

}  // namespace detail

/// An invertible morphism x -> y, or nullopt when none exists.
template <PresheafGraph G>
std::optional<ArrowMap> find_isomorphism(const G& x, const G& y) {
  if (x.node_count() != y.node_count() || x.arrow_count() != y.arrow_count()) return std::nullopt;
  const detail::ArrowTable<G> tx(x), ty(y);
  const auto sx = detail::node_signatures(tx);
  const auto sy = detail::node_signatures(ty);
  {
    auto a = sx, b = sy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::size_t n = x.node_count();
  std::vector<std::size_t> image(n, kDangling);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t u) {
    for (std::size_t v = 0; v <= u; ++v) {
      const std::size_t iu = image[u], iv = image[v];
      if (tx.plain_count(u, v) != ty.plain_count(iu, iv) || tx.plain_count(v, u) != ty.plain_count(iv, iu))
        return false;
      if (tx.fixed_count(u, v) != ty.fixed_count(iu, iv)) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sx[u] != sy[w]) continue;
      image[u] = w;
      if (!consistent(u)) continue;
      used[w] = true;
      if (assign(u + 1)) return true;
      used[w] = false;
    }
    image[u] = kDangling;
    return false;
  };
  if (!assign(0)) return std::nullopt;

  // Lift the node bijection to arrows, pairing inverses where present.
  ArrowMap m;
  m.nodes = image;
  m.arrows.assign(x.arrow_count(), kDangling);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto& fx = tx.fixed[u * n + v];
      const auto& fy = ty.fixed[image[u] * n + image[v]];
      for (std::size_t k = 0; k < fx.size(); ++k) m.arrows[fx[k]] = fy[k];
      const auto& px = tx.plain[u * n + v];
      const auto& py = ty.plain[image[u] * n + image[v]];
      std::size_t next = 0;
      for (std::size_t a : px) {
        if (m.arrows[a] != kDangling) continue;
        // Skip targets already taken as partners of earlier assignments.
        while (std::find(m.arrows.begin(), m.arrows.end(), py[next]) != m.arrows.end()) ++next;
        const std::size_t b = py[next++];
        m.arrows[a] = b;
        if constexpr (kHasInvolution<G>) m.arrows[x.inv(a)] = y.inv(b);
      }
    }
  return m;
}

template <PresheafGraph G>
bool is_isomorphic(const G& x, const G& y) {
  return find_isomorphism(x, y).has_value();
}

}  // namespace zetacat
