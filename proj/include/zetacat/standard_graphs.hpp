#pragma once

// Named graphs with fixed labeling conventions.
//
// Undirected p-cycle: nodes "0".."p-1"; half-arcs "n+" : n -> n+1 and
// "n-" : n+1 -> n, with inv("n+") = "n-".

#include <string>
#include <variant>

#include "zetacat/error.hpp"
#include "zetacat/graph.hpp"

namespace zetacat {

using AnyGraph = std::variant<DirectedGraph, UndirectedGraph>;

namespace graphs {

inline void require_positive(long long v, const char* what) {
  if (v < 1) throw InputError(std::string(what) + " must be >= 1");
}

// --- directed ---------------------------------------------------------------

/// One node, no arcs.
inline DirectedGraph directed_dot() {
  DirectedGraph g;
  g.add_node("0");
  return g;
}

/// Nodes 0, 1 and the arc a: 0 -> 1.
inline DirectedGraph directed_arc() {
  DirectedGraph g;
  g.add_node("0");
  g.add_node("1");
  g.add_arc("a", 0, 1);
  return g;
}

/// Nodes Z/p, arcs a_n : n -> n+1.
inline DirectedGraph directed_cycle(long long p) {
  require_positive(p, "cycle length");
  DirectedGraph g;
  for (long long n = 0; n < p; ++n) g.add_node(std::to_string(n));
  for (long long n = 0; n < p; ++n)
    g.add_arc("a" + std::to_string(n), static_cast<std::size_t>(n), static_cast<std::size_t>((n + 1) % p));
  return g;
}

/// One node "*" carrying n loops a0..a{n-1}. With n = 1 this is the
/// terminal directed graph.
inline DirectedGraph directed_bouquet(long long n) {
  if (n < 0) throw InputError("loop count must be >= 0");
  DirectedGraph g;
  g.add_node("*");
  for (long long i = 0; i < n; ++i) g.add_arc("a" + std::to_string(i), 0, 0);
  return g;
}

// --- undirected -------------------------------------------------------------

inline UndirectedGraph undirected_dot() {
  UndirectedGraph g;
  g.add_node("0");
  return g;
}

/// Nodes u1, u2; half-arcs a1 : u1 -> u2 and a2 = inv(a1).
inline UndirectedGraph undirected_arc() {
  UndirectedGraph g;
  g.add_node("u1");
  g.add_node("u2");
  g.add_arc("a1", "a2", 0, 1);
  return g;
}

/// The cherry: v1 joined to v2 (b1, b2) and to v3 (c1, c2).
inline UndirectedGraph cherry() {
  UndirectedGraph g;
  g.add_node("v1");
  g.add_node("v2");
  g.add_node("v3");
  g.add_arc("b1", "b2", 0, 1);
  g.add_arc("c1", "c2", 0, 2);
  return g;
}

/// Path on nodes 0..n-1 with half-arcs "p+" : p -> p+1, "p-" its inverse.
inline UndirectedGraph path(long long n) {
  require_positive(n, "path node count");
  UndirectedGraph g;
  for (long long i = 0; i < n; ++i) g.add_node(std::to_string(i));
  for (long long p = 0; p + 1 < n; ++p)
    g.add_arc(std::to_string(p) + "+", std::to_string(p) + "-", static_cast<std::size_t>(p),
              static_cast<std::size_t>(p + 1));
  return g;
}

inline UndirectedGraph undirected_cycle(long long p) {
  require_positive(p, "cycle length");
  UndirectedGraph g;
  for (long long n = 0; n < p; ++n) g.add_node(std::to_string(n));
  for (long long n = 0; n < p; ++n)
    g.add_arc(std::to_string(n) + "+", std::to_string(n) + "-", static_cast<std::size_t>(n),
              static_cast<std::size_t>((n + 1) % p));
  return g;
}

/// Two non-degenerate loops x, y glued at the node "*".
inline UndirectedGraph eight_graph() {
  UndirectedGraph g;
  g.add_node("*");
  g.add_arc("x+", "x-", 0, 0);
  g.add_arc("y+", "y-", 0, 0);
  return g;
}

/// One node "*" with n degenerate loops a0..a{n-1}.
inline UndirectedGraph bouquet(long long n) {
  if (n < 0) throw InputError("loop count must be >= 0");
  UndirectedGraph g;
  g.add_node("*");
  for (long long i = 0; i < n; ++i) g.add_degenerate_loop("a" + std::to_string(i), 0);
  return g;
}

/// Two nodes 0, 1 joined by n arcs a1..an (half-arcs "ak+" : 0 -> 1).
inline UndirectedGraph dipole(long long n) {
  require_positive(n, "arc count");
  UndirectedGraph g;
  g.add_node("0");
  g.add_node("1");
  for (long long k = 1; k <= n; ++k) g.add_arc("a" + std::to_string(k) + "+", "a" + std::to_string(k) + "-", 0, 1);
  return g;
}

inline UndirectedGraph complete(long long n) {
  require_positive(n, "node count");
  UndirectedGraph g;
  for (long long i = 0; i < n; ++i) g.add_node(std::to_string(i));
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j) {
      const std::string e = std::to_string(i) + "~" + std::to_string(j);
      g.add_arc(e + "+", e + "-", static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
inline UndirectedGraph petersen() {
  UndirectedGraph g;
  for (int i = 0; i < 10; ++i) g.add_node(std::to_string(i));
  auto edge = [&](int a, int b) {
    const std::string e = std::to_string(a) + "~" + std::to_string(b);
    g.add_arc(e + "+", e + "-", static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  };
  for (int i = 0; i < 5; ++i) edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) edge(i, i + 5);
  for (int i = 0; i < 5; ++i) edge(5 + i, 5 + (i + 2) % 5);
  return g;
}

}  // namespace graphs

/// Builds a named graph. Kinds: directed "D", "A", "c" (p), "B" (n);
/// undirected "D_U", "A_U", "V_U", "P" (n), "c_U" (p), "eight", "B_U" (n),
/// "D_n" (n), "K" (n), "petersen".
inline AnyGraph standard_graph(const std::string& kind, long long param = 1) {
  if (kind == "D") return graphs::directed_dot();
  if (kind == "A") return graphs::directed_arc();
  if (kind == "c") return graphs::directed_cycle(param);
  if (kind == "B") return graphs::directed_bouquet(param);
  if (kind == "D_U") return graphs::undirected_dot();
  if (kind == "A_U") return graphs::undirected_arc();
  if (kind == "V_U") return graphs::cherry();
  if (kind == "P") return graphs::path(param);
  if (kind == "c_U") return graphs::undirected_cycle(param);
  if (kind == "eight") return graphs::eight_graph();
  if (kind == "B_U") return graphs::bouquet(param);
  if (kind == "D_n") return graphs::dipole(param);
  if (kind == "K") return graphs::complete(param);
  if (kind == "petersen") return graphs::petersen();
  throw InputError("unknown standard graph kind '" + kind + "'");
}

}  // namespace zetacat
