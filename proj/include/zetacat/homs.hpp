#pragma once

// Exhaustive homomorphism search: backtracking over node assignments, then
// independent choices of (half-)arc images.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "zetacat/exact.hpp"
#include "zetacat/graph.hpp"
#include "zetacat/standard_graphs.hpp"

namespace zetacat {

namespace detail {

// One free choice in a morphism: the image of a domain arc, or of the
// representative of a half-arc orbit (its partner's image is then forced).
struct ArrowSlot {
  std::size_t arrow;
  std::size_t src;
  std::size_t tgt;
  bool degenerate;
};

template <PresheafGraph G>
class HomSearch {
 public:
  HomSearch(const G& x, const G& y) : x_(x), y_(y) {
    for (std::size_t a = 0; a < x.arrow_count(); ++a) {
      bool degenerate = false;
      if constexpr (kHasInvolution<G>) {
        if (!x.is_orbit_representative(a)) continue;
        degenerate = x.is_degenerate(a);
      }
      slots_.push_back({a, x.src(a), x.tgt(a), degenerate});
    }
    const std::size_t ny = y.node_count();
    between_.assign(ny * ny, {});
    fixed_between_.assign(ny * ny, {});
    for (std::size_t b = 0; b < y.arrow_count(); ++b) {
      between_[y.src(b) * ny + y.tgt(b)].push_back(b);
      if constexpr (kHasInvolution<G>) {
        if (y.is_degenerate(b)) fixed_between_[y.src(b) * ny + y.tgt(b)].push_back(b);
      }
    }
    order_nodes();
    pos_of_.assign(x.node_count(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_of_[order_[i]] = i;
    checks_at_.assign(order_.size(), {});
    for (std::size_t s = 0; s < slots_.size(); ++s)
      checks_at_[std::max(pos_of_[slots_[s].src], pos_of_[slots_[s].tgt])].push_back(s);
    image_.assign(x.node_count(), 0);
  }

  // Calls leaf() for every compatible node assignment (in image_).
  void for_each_node_map(const std::function<void()>& leaf) { descend(0, leaf); }

  const std::vector<std::size_t>& candidates(std::size_t slot) const {
    const auto& s = slots_[slot];
    const std::size_t key = image_[s.src] * y_.node_count() + image_[s.tgt];
    return s.degenerate ? fixed_between_[key] : between_[key];
  }

  const std::vector<ArrowSlot>& slots() const { return slots_; }
  const std::vector<std::size_t>& node_image() const { return image_; }

 private:
  // Breadth-first order so each arc is checked as soon as both ends are set.
  void order_nodes() {
    const std::size_t nx = x_.node_count();
    std::vector<std::vector<std::size_t>> adj(nx);
    for (std::size_t a = 0; a < x_.arrow_count(); ++a) {
      adj[x_.src(a)].push_back(x_.tgt(a));
      adj[x_.tgt(a)].push_back(x_.src(a));
    }
    std::vector<bool> seen(nx, false);
    for (std::size_t root = 0; root < nx; ++root) {
      if (seen[root]) continue;
      std::queue<std::size_t> q;
      q.push(root);
      seen[root] = true;
      while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        order_.push_back(v);
        for (std::size_t w : adj[v])
          if (!seen[w]) seen[w] = true, q.push(w);
      }
    }
  }

  void descend(std::size_t pos, const std::function<void()>& leaf) {
    if (pos == order_.size()) {
      leaf();
      return;
    }
    const std::size_t v = order_[pos];
    for (std::size_t w = 0; w < y_.node_count(); ++w) {
      image_[v] = w;
      bool ok = true;
      for (std::size_t s : checks_at_[pos])
        if (candidates(s).empty()) {
          ok = false;
          break;
        }
      if (ok) descend(pos + 1, leaf);
    }
  }

  const G& x_;
  const G& y_;
  std::vector<ArrowSlot> slots_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::vector<std::size_t>> fixed_between_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> pos_of_;
  std::vector<std::vector<std::size_t>> checks_at_;
  std::vector<std::size_t> image_;
};

}  // namespace detail

/// Calls visit(const ArrowMap&) once per morphism x -> y, in search order,
/// without storing them.
template <PresheafGraph G, typename Visit>
void for_each_hom(const G& x, const G& y, Visit&& visit) {
  detail::HomSearch<G> search(x, y);
  const auto& slots = search.slots();
  ArrowMap m;
  m.arrows.assign(x.arrow_count(), 0);
  std::vector<std::size_t> choice(slots.size(), 0);
  search.for_each_node_map([&] {
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (search.candidates(s).empty()) return;
    m.nodes = search.node_image();
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const std::size_t b = search.candidates(s)[choice[s]];
        m.arrows[slots[s].arrow] = b;
        if constexpr (kHasInvolution<G>) m.arrows[x.inv(slots[s].arrow)] = y.inv(b);
      }
      visit(static_cast<const ArrowMap&>(m));
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        if (++choice[s] < search.candidates(s).size()) break;
        choice[s] = 0;
      }
      if (s == slots.size()) break;
    }
  });
}

/// All morphisms x -> y, duplicate-free, in lexicographic order of their
/// tables.
template <PresheafGraph G>
std::vector<ArrowMap> enumerate_homs(const G& x, const G& y) {
  std::vector<ArrowMap> out;
  for_each_hom(x, y, [&](const ArrowMap& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

/// |Hom(x, y)| by the same search; arc choices are counted rather than
/// materialized.
template <PresheafGraph G>
BigInt count_homs(const G& x, const G& y) {
  detail::HomSearch<G> search(x, y);
  BigInt total = 0;
  std::uint64_t pending = 0;
  const std::size_t nslots = search.slots().size();
  search.for_each_node_map([&] {
    std::uint64_t product = 1;
    bool overflow = false;
    for (std::size_t s = 0; s < nslots && !overflow; ++s)
      overflow = __builtin_mul_overflow(product, search.candidates(s).size(), &product);
    if (overflow) {
      BigInt big = 1;
      for (std::size_t s = 0; s < nslots; ++s) big *= search.candidates(s).size();
      total += big;
      return;
    }
    std::uint64_t sum = 0;
    if (__builtin_add_overflow(pending, product, &sum)) {
      total += pending;
      total += product;
      pending = 0;
    } else {
      pending = sum;
    }
  });
  total += pending;
  return total;
}

/// n_p(x) = |Hom(c_p, x)| via tr(A^p) of the adjacency matrix.
inline IntMatrix adjacency_matrix(const DirectedGraph& g) {
  IntMatrix a(g.node_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) a(g.src(e), g.tgt(e)) += 1;
  return a;
}

/// Half-arc counts x -> y; symmetric by the involution.
inline IntMatrix adjacency_matrix(const UndirectedGraph& g) {
  IntMatrix a(g.node_count());
  for (std::size_t e = 0; e < g.half_arc_count(); ++e) a(g.src(e), g.tgt(e)) += 1;
  return a;
}

inline BigInt closed_walk_count(const DirectedGraph& g, long long p) {
  if (p < 1) throw InputError("cycle length must be >= 1");
  return power_traces(adjacency_matrix(g), static_cast<std::size_t>(p)).back();
}

/// n_1..n_max of a directed graph.
inline std::vector<BigInt> closed_walk_counts(const DirectedGraph& g, std::size_t max_length) {
  return power_traces(adjacency_matrix(g), max_length);
}

}  // namespace zetacat
