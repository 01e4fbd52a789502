#pragma once

// Zeta and Ihara series, their determinant closed forms, non-backtracking
// cycle enumeration, primitive-cycle multiplicities and counting-model
// weak-equivalence decisions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zetacat/error.hpp"
#include "zetacat/exact.hpp"
#include "zetacat/graph.hpp"
#include "zetacat/homs.hpp"
#include "zetacat/standard_graphs.hpp"

namespace zetacat {

/// exp(sum_{p=1..order} counts[p-1] t^p / p) truncated at `order`.
inline RationalPowerSeries series_from_cycle_counts(const std::vector<BigInt>& counts, std::size_t order) {
  RationalPowerSeries log_series(order);
  for (std::size_t p = 1; p <= order; ++p) log_series[p] = Rational(counts.at(p - 1), BigInt(p));
  RationalPowerSeries z = log_series.exp();
  if (!z.all_integral()) throw InternalError("zeta series has a non-integral coefficient");
  return z;
}

// ---------------------------------------------------------------------------
// Directed graphs
// ---------------------------------------------------------------------------

/// exp(sum_p n_p t^p / p) with n_p = |Hom(c_p, x)|.
inline RationalPowerSeries zeta_series(const DirectedGraph& x, std::size_t order) {
  if (order < 1) throw InputError("series order must be >= 1");
  return series_from_cycle_counts(closed_walk_counts(x, order), order);
}

/// det(I - tA): the zeta series is its reciprocal.
inline IntPolynomial zeta_reciprocal(const DirectedGraph& x) { return det_one_minus_t(adjacency_matrix(x)); }

/// Two finite directed graphs are weakly equivalent in the cycle-counting
/// model exactly when their zeta reciprocals agree.
inline bool weak_equiv_directed(const DirectedGraph& x, const DirectedGraph& y) {
  return zeta_reciprocal(x) == zeta_reciprocal(y);
}

inline long long moebius(long long n) {
  long long result = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// m_1..m_L: how many copies of each cycle c_l make up the truncated
/// cofibrant replacement, so that n_p = sum_{l | p} l * m_l.
struct PrimitiveMultiplicities {
  std::vector<BigInt> counts;  // counts[l-1] = m_l

  const BigInt& operator[](std::size_t length) const { return counts.at(length - 1); }
  std::size_t bound() const { return counts.size(); }
};

inline PrimitiveMultiplicities primitive_multiplicities(const std::vector<BigInt>& closed_walks) {
  PrimitiveMultiplicities m;
  const long long bound = static_cast<long long>(closed_walks.size());
  for (long long l = 1; l <= bound; ++l) {
    BigInt acc = 0;
    for (long long d = 1; d <= l; ++d)
      if (l % d == 0) acc += moebius(l / d) * closed_walks[static_cast<std::size_t>(d - 1)];
    if (acc % l != 0 || acc < 0)
      throw InternalError("primitive multiplicity m_" + std::to_string(l) + " is not a nonnegative integer");
    m.counts.push_back(acc / l);
  }
  for (long long p = 1; p <= bound; ++p) {
    BigInt rebuilt = 0;
    for (long long l = 1; l <= p; ++l)
      if (p % l == 0) rebuilt += l * m.counts[static_cast<std::size_t>(l - 1)];
    if (rebuilt != closed_walks[static_cast<std::size_t>(p - 1)])
      throw InternalError("primitive multiplicities do not reconstruct n_" + std::to_string(p));
  }
  return m;
}

inline PrimitiveMultiplicities primitive_multiplicities(const DirectedGraph& x, std::size_t bound) {
  if (bound < 1) throw InputError("cycle bound must be >= 1");
  return primitive_multiplicities(closed_walk_counts(x, bound));
}

/// One row of the homotopy hom-set profile: the summand c_l of the truncated
/// replacement of x appears `multiplicity` times and admits `maps` morphisms
/// into the truncated replacement of y.
struct HomProfileRow {
  std::size_t length;
  BigInt multiplicity;
  BigInt maps;
};

inline std::vector<HomProfileRow> homotopy_hom_profile(const DirectedGraph& x, const DirectedGraph& y,
                                                       std::size_t bound) {
  const auto mx = primitive_multiplicities(x, bound);
  const auto my = primitive_multiplicities(y, bound);
  std::vector<HomProfileRow> rows;
  for (std::size_t l = 1; l <= bound; ++l) {
    if (mx[l] == 0) continue;
    BigInt maps = 0;
    for (std::size_t k = 1; k <= l; ++k)
      if (l % k == 0) maps += BigInt(k) * my[k];
    rows.push_back({l, mx[l], maps});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Undirected graphs
// ---------------------------------------------------------------------------

/// The morphism c^p_U -> x walking the closed half-arc sequence `walk`
/// ([n]+ -> walk[n]).
inline ArrowMap cycle_map_from_walk(const UndirectedGraph& x, const std::vector<std::size_t>& walk) {
  ArrowMap m;
  const std::size_t p = walk.size();
  m.nodes.resize(p);
  m.arrows.resize(2 * p);
  for (std::size_t n = 0; n < p; ++n) {
    m.nodes[n] = x.src(walk[n]);
    m.arrows[2 * n] = walk[n];
    m.arrows[2 * n + 1] = x.inv(walk[n]);
  }
  return m;
}

/// f : c^p_U -> x backtracks when f([n+1]+) = f([n]-) for some n (mod p).
inline bool has_backtracking(const UndirectedGraph& x, const ArrowMap& f) {
  const std::size_t p = f.nodes.size();
  for (std::size_t n = 0; n < p; ++n) {
    const std::size_t next_plus = f.arrows[2 * ((n + 1) % p)];
    const std::size_t minus = f.arrows[2 * n + 1];
    if (next_plus == minus) return true;
  }
  (void)x;
  return false;
}

/// All morphisms c^p_U -> x without backtracking, by filtering the full
/// enumeration of Hom(c^p_U, x).
inline std::vector<ArrowMap> nb_cycles_by_filter(const UndirectedGraph& x, std::size_t p) {
  if (p < 1) throw InputError("cycle length must be >= 1");
  std::vector<ArrowMap> out;
  for (auto& h : enumerate_homs(graphs::undirected_cycle(static_cast<long long>(p)), x))
    if (!has_backtracking(x, h)) out.push_back(std::move(h));
  return out;
}

namespace detail {

// Visits every closed half-arc walk of length p with no immediate reversal,
// including across the wrap-around.
template <typename Visit>
void for_each_nb_walk(const UndirectedGraph& x, std::size_t p, Visit&& visit) {
  std::vector<std::vector<std::size_t>> out_arrows(x.node_count());
  for (std::size_t a = 0; a < x.half_arc_count(); ++a) out_arrows[x.src(a)].push_back(a);
  std::vector<std::size_t> walk(p);
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == p) {
      if (x.tgt(walk[p - 1]) == x.src(walk[0]) && walk[0] != x.inv(walk[p - 1])) visit(walk);
      return;
    }
    for (std::size_t a : out_arrows[x.tgt(walk[k - 1])]) {
      if (a == x.inv(walk[k - 1])) continue;
      walk[k] = a;
      self(self, k + 1);
    }
  };
  for (std::size_t a = 0; a < x.half_arc_count(); ++a) {
    walk[0] = a;
    extend(extend, 1);
  }
}

}  // namespace detail

/// All morphisms c^p_U -> x without backtracking, in canonical order. Same
/// set as nb_cycles_by_filter, built by a pruned walk search.
inline std::vector<ArrowMap> nb_cycles(const UndirectedGraph& x, std::size_t p) {
  if (p < 1) throw InputError("cycle length must be >= 1");
  std::vector<ArrowMap> out;
  detail::for_each_nb_walk(x, p, [&](const std::vector<std::size_t>& w) { out.push_back(cycle_map_from_walk(x, w)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// |nb_cycles(x, p)| without materializing the list.
inline BigInt count_nb_cycles(const UndirectedGraph& x, std::size_t p) {
  if (p < 1) throw InputError("cycle length must be >= 1");
  std::uint64_t count = 0;
  detail::for_each_nb_walk(x, p, [&](const std::vector<std::size_t>&) { ++count; });
  return BigInt(count);
}

inline void require_loopless(const UndirectedGraph& x, const char* what) {
  if (has_loops(x)) throw PreconditionError(std::string(what) + ": graph has loops");
}

/// B[a][b] = 1 iff t(a) = s(b) and b != inv(a), indexed by half-arcs.
inline IntMatrix hashimoto_matrix(const UndirectedGraph& x) {
  require_loopless(x, "non-backtracking operator");
  const std::size_t n = x.half_arc_count();
  IntMatrix b(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (x.tgt(a) == x.src(c) && c != x.inv(a)) b(a, c) = 1;
  return b;
}

inline BigInt hashimoto_count(const UndirectedGraph& x, std::size_t p) {
  if (p < 1) throw InputError("cycle length must be >= 1");
  return power_traces(hashimoto_matrix(x), p).back();
}

/// exp(sum_p c_p t^p / p) with c_p the number of non-backtracking p-cycles,
/// counted by enumeration (loops allowed).
inline RationalPowerSeries ihara_series(const UndirectedGraph& x, std::size_t order) {
  if (order < 1) throw InputError("series order must be >= 1");
  std::vector<BigInt> counts;
  for (std::size_t p = 1; p <= order; ++p) counts.push_back(count_nb_cycles(x, p));
  return series_from_cycle_counts(counts, order);
}

/// det(I - tB) for the non-backtracking operator B; loopless graphs only.
inline IntPolynomial ihara_reciprocal(const UndirectedGraph& x) { return det_one_minus_t(hashimoto_matrix(x)); }

/// Both sides of det(I - tB) = (1 - t^2)^{|E|-|V|} det(I - tA + t^2 (D - I)).
struct BassCheck {
  IntPolynomial hashimoto_side;
  IntPolynomial node_side;  // det(I - tA + t^2 (D - I))
  long long exponent;       // |E| - |V|
  bool holds;
};

inline BassCheck bass_check(const UndirectedGraph& x) {
  require_loopless(x, "Bass identity");
  const std::size_t n = x.node_count();
  const IntMatrix a = adjacency_matrix(x);
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt degree = 0;
    for (std::size_t j = 0; j < n; ++j) degree += a(i, j);
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt diag = i == j ? 1 : 0;
      const BigInt quad = i == j ? BigInt(degree - 1) : BigInt(0);
      m[i][j] = IntPolynomial(std::vector<BigInt>{diag, BigInt(-a(i, j)), quad});
    }
  }
  BassCheck check;
  check.hashimoto_side = ihara_reciprocal(x);
  check.node_side = bareiss_determinant(std::move(m));
  check.exponent = static_cast<long long>(x.arc_count()) - static_cast<long long>(n);
  const IntPolynomial one_minus_t2{1, 0, -1};
  if (check.exponent >= 0)
    check.holds = check.hashimoto_side == one_minus_t2.pow(static_cast<unsigned>(check.exponent)) * check.node_side;
  else
    check.holds = check.hashimoto_side * one_minus_t2.pow(static_cast<unsigned>(-check.exponent)) == check.node_side;
  return check;
}

// ---------------------------------------------------------------------------
// Counting-model weak equivalence of a morphism, up to a finite bound
// ---------------------------------------------------------------------------

/// Outcome of checking that h -> f∘h is a bijection Hom(C_p, X) -> Hom(C_p, Y)
/// for p = 1..bound.
struct CountingVerdict {
  bool bijective = true;
  std::size_t bound = 0;
  std::optional<std::size_t> first_failure;
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (|Hom(C_p,X)|, |Hom(C_p,Y)|) per p
};

enum class CycleFamily {
  kDirected,           // c_p in directed graphs
  kUndirectedAll,      // every morphism c^p_U -> X
  kUndirectedNoBacktrack,  // morphisms c^p_U -> X without backtracking
};

namespace detail {

template <PresheafGraph G>
std::vector<ArrowMap> cycle_homs(const G& x, std::size_t p, CycleFamily family) {
  if constexpr (kHasInvolution<G>) {
    if (family == CycleFamily::kUndirectedNoBacktrack) return nb_cycles(x, p);
    return enumerate_homs(graphs::undirected_cycle(static_cast<long long>(p)), x);
  } else {
    (void)family;
    return enumerate_homs(graphs::directed_cycle(static_cast<long long>(p)), x);
  }
}

}  // namespace detail

template <PresheafGraph G>
CountingVerdict counting_bijectivity(const Morphism<G>& f, std::size_t bound, CycleFamily family,
                                     bool stop_at_failure = false) {
  if (!validate_morphism(f).empty()) throw InputError("counting check: invalid morphism");
  CountingVerdict v;
  v.bound = bound;
  for (std::size_t p = 1; p <= bound; ++p) {
    const auto from = detail::cycle_homs(f.domain, p, family);
    const auto to = detail::cycle_homs(f.codomain, p, family);
    std::set<ArrowMap> image;
    bool ok = true;
    for (const auto& h : from)
      if (!image.insert(compose(f.map, h)).second) ok = false;
    if (ok) ok = image == std::set<ArrowMap>(to.begin(), to.end());
    v.sizes.emplace_back(from.size(), to.size());
    if (!ok && v.bijective) {
      v.bijective = false;
      v.first_failure = p;
      if (stop_at_failure) break;
    }
  }
  return v;
}

}  // namespace zetacat
