#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

namespace zc = zetacat;
using zc::DirectedGraph;
using zc::UndirectedGraph;

TEST(Sum, CountsAndWalks) {
  const auto s = zc::sum(zc::graphs::directed_cycle(1), zc::graphs::directed_cycle(2));
  EXPECT_EQ(s.graph.node_count(), 3u);
  EXPECT_EQ(s.graph.arc_count(), 3u);
  EXPECT_TRUE(zc::validate_morphism(zc::graphs::directed_cycle(1), s.graph, s.first).empty());
  EXPECT_TRUE(zc::validate_morphism(zc::graphs::directed_cycle(2), s.graph, s.second).empty());

  const auto unit = zc::sum(DirectedGraph{}, zc::graphs::directed_cycle(3));
  EXPECT_TRUE(zc::is_isomorphic(unit.graph, zc::graphs::directed_cycle(3)));

  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto x = zc::testing::random_directed(rng, 4, 6);
    const auto y = zc::testing::random_directed(rng, 4, 6);
    const auto xy = zc::sum(x, y).graph;
    for (long long p = 1; p <= 6; ++p)
      EXPECT_EQ(zc::enumerate_homs(zc::graphs::directed_cycle(p), xy).size(),
                zc::enumerate_homs(zc::graphs::directed_cycle(p), x).size() +
                    zc::enumerate_homs(zc::graphs::directed_cycle(p), y).size());
  }
}

TEST(Product, Examples) {
  const auto c6 = zc::product(zc::graphs::directed_cycle(2), zc::graphs::directed_cycle(3)).graph;
  EXPECT_TRUE(zc::is_isomorphic(c6, zc::graphs::directed_cycle(6)));

  const auto a2 = zc::product(zc::graphs::directed_arc(), zc::graphs::directed_arc()).graph;
  EXPECT_EQ(a2.node_count(), 4u);
  EXPECT_EQ(a2.arc_count(), 1u);

  std::mt19937 rng(8);
  const auto terminal = zc::graphs::directed_cycle(1);
  for (int i = 0; i < 10; ++i) {
    const auto x = zc::testing::random_directed(rng, 4, 6);
    EXPECT_TRUE(zc::is_isomorphic(zc::product(x, terminal).graph, x));
  }
}

TEST(Product, UndirectedInvolutionIsComponentwise) {
  const auto p = zc::product(zc::graphs::undirected_cycle(3), zc::graphs::bouquet(2)).graph;
  EXPECT_TRUE(zc::validate(p).empty());
  for (std::size_t a = 0; a < p.half_arc_count(); ++a) EXPECT_FALSE(p.is_degenerate(a));
  const auto q = zc::product(zc::graphs::bouquet(2), zc::graphs::bouquet(3)).graph;
  for (std::size_t a = 0; a < q.half_arc_count(); ++a) EXPECT_TRUE(q.is_degenerate(a));
}

TEST(Pushout, AlongIdentityIsCodomain) {
  const auto x = zc::graphs::petersen();
  const zc::Morphism<UndirectedGraph> id{x, x, zc::identity_map(x)};
  const auto f = zc::lab::elementary_folding();
  const zc::Morphism<UndirectedGraph> id_v{f.domain, f.domain, zc::identity_map(f.domain)};
  const auto po = zc::pushout(id_v, f);
  EXPECT_TRUE(zc::is_isomorphic(po.graph, f.codomain));
  const auto po2 = zc::pushout(id, id);
  EXPECT_TRUE(zc::is_isomorphic(po2.graph, x));
}

TEST(Pushout, CherryAlongFoldingGivesArc) {
  const auto po = zc::pushout(zc::lab::elementary_folding(), zc::lab::cherry_onto_digon());
  EXPECT_TRUE(zc::validate(po.graph).empty());
  EXPECT_TRUE(zc::is_isomorphic(po.graph, zc::graphs::undirected_arc()));
  EXPECT_EQ(zc::count_nb_cycles(zc::graphs::undirected_cycle(2), 2), 4);
  EXPECT_EQ(zc::count_nb_cycles(po.graph, 2), 0);
}

TEST(Pullback, AlongIdentityIsDomain) {
  const auto f = zc::lab::elementary_folding();
  const zc::Morphism<UndirectedGraph> id{f.codomain, f.codomain, zc::identity_map(f.codomain)};
  EXPECT_TRUE(zc::is_isomorphic(zc::pullback(f, id).graph, f.domain));
}

TEST(Pullback, FoldingAlongDigonIsTwoDigons) {
  const auto pb = zc::pullback(zc::lab::elementary_folding(), zc::lab::digon_onto_arc());
  EXPECT_TRUE(zc::validate(pb.graph).empty());
  EXPECT_EQ(pb.graph.node_count(), 3u);
  EXPECT_EQ(pb.graph.arc_count(), 4u);
  EXPECT_FALSE(zc::is_isomorphic(pb.graph, zc::graphs::eight_graph()));
  // Two digons sharing one node: the middle node has degree 4.
  std::multiset<std::size_t> degrees;
  for (std::size_t v = 0; v < 3; ++v) degrees.insert(zc::star(pb.graph, v).arcs.size());
  EXPECT_EQ(degrees, (std::multiset<std::size_t>{2, 2, 4}));
  EXPECT_EQ(zc::count_nb_cycles(pb.graph, 2), 8);
}

TEST(Pullback, CoveringsOverB2) {
  std::mt19937 rng(17);
  for (int i = 0; i < 10; ++i) {
    const auto y = zc::testing::random_involutive(rng, 4, 2, false);
    const auto z = zc::testing::random_involutive(rng, 3, 2, false);
    const auto pb = zc::pullback(zc::cayley_coloring(y), zc::cayley_coloring(z));
    const zc::UndirectedMorphism down{pb.graph, zc::graphs::bouquet(2),
                                      zc::compose(zc::cayley_coloring(y).map, pb.first)};
    EXPECT_TRUE(zc::is_covering(down));
    EXPECT_TRUE(zc::is_covering({pb.graph, zc::cayley_undirected(y), pb.first}));
  }
}

TEST(Quotient, ClosesUnderInvolution) {
  const auto c4 = zc::graphs::undirected_cycle(4);
  const auto [q, map] = zc::quotient(c4, {}, {{0, 4}});  // 0+ ~ 2+
  EXPECT_TRUE(zc::validate(q).empty());
  EXPECT_TRUE(zc::validate_morphism(c4, q, map).empty());
  EXPECT_EQ(map.arrows[1], map.arrows[5]);
}

// Universal properties, checked by exhaustive enumeration on tiny graphs.

template <class G>
void expect_product_universal(const G& x, const G& y, const G& t) {
  const auto p = zc::product(x, y);
  std::set<std::pair<zc::ArrowMap, zc::ArrowMap>> pairs;
  for (const auto& h : zc::enumerate_homs(t, p.graph))
    EXPECT_TRUE(pairs.insert({zc::compose(p.first, h), zc::compose(p.second, h)}).second);
  EXPECT_EQ(pairs.size(), zc::enumerate_homs(t, x).size() * zc::enumerate_homs(t, y).size());
}

template <class G>
void expect_pullback_universal(const zc::Morphism<G>& f, const zc::Morphism<G>& g, const G& t) {
  const auto pb = zc::pullback(f, g);
  std::set<std::pair<zc::ArrowMap, zc::ArrowMap>> cones;
  for (const auto& a : zc::enumerate_homs(t, f.domain))
    for (const auto& b : zc::enumerate_homs(t, g.domain))
      if (zc::compose(f.map, a) == zc::compose(g.map, b)) cones.insert({a, b});
  std::set<std::pair<zc::ArrowMap, zc::ArrowMap>> factored;
  for (const auto& h : zc::enumerate_homs(t, pb.graph))
    EXPECT_TRUE(factored.insert({zc::compose(pb.first, h), zc::compose(pb.second, h)}).second);
  EXPECT_EQ(factored, cones);
}

template <class G>
void expect_pushout_universal(const zc::Morphism<G>& f, const zc::Morphism<G>& g, const G& t) {
  const auto po = zc::pushout(f, g);
  std::set<std::pair<zc::ArrowMap, zc::ArrowMap>> cocones;
  for (const auto& a : zc::enumerate_homs(f.codomain, t))
    for (const auto& b : zc::enumerate_homs(g.codomain, t))
      if (zc::compose(a, f.map) == zc::compose(b, g.map)) cocones.insert({a, b});
  std::set<std::pair<zc::ArrowMap, zc::ArrowMap>> factored;
  for (const auto& h : zc::enumerate_homs(po.graph, t))
    EXPECT_TRUE(factored.insert({zc::compose(h, po.first), zc::compose(h, po.second)}).second);
  EXPECT_EQ(factored, cocones);
}

template <class G>
std::optional<zc::Morphism<G>> random_morphism(std::mt19937& rng, const G& x, const G& y) {
  const auto homs = zc::enumerate_homs(x, y);
  if (homs.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
  return zc::Morphism<G>{x, y, homs[pick(rng)]};
}

TEST(Universal, DirectedSpansAndCospans) {
  std::mt19937 rng(2025);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const auto x = zc::testing::random_directed(rng, 3, 4);
    const auto y = zc::testing::random_directed(rng, 3, 4);
    const auto z = zc::testing::random_directed(rng, 3, 4);
    const auto t = zc::testing::random_directed(rng, 2, 3);
    expect_product_universal(x, y, t);
    const auto f = random_morphism(rng, x, z), g = random_morphism(rng, y, z);
    if (f && g) expect_pullback_universal(*f, *g, t), ++checked;
    const auto f2 = random_morphism(rng, z, x), g2 = random_morphism(rng, z, y);
    if (f2 && g2) expect_pushout_universal(*f2, *g2, t), ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Universal, UndirectedSpansAndCospans) {
  std::mt19937 rng(4048);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const auto x = zc::testing::random_undirected(rng, 3, 3);
    const auto y = zc::testing::random_undirected(rng, 3, 3);
    const auto z = zc::testing::random_undirected(rng, 3, 3);
    const auto t = zc::testing::random_undirected(rng, 2, 2);
    expect_product_universal(x, y, t);
    const auto f = random_morphism(rng, x, z), g = random_morphism(rng, y, z);
    if (f && g) expect_pullback_universal(*f, *g, t), ++checked;
    const auto f2 = random_morphism(rng, z, x), g2 = random_morphism(rng, z, y);
    if (f2 && g2) {
      const auto po = zc::pushout(*f2, *g2);
      EXPECT_TRUE(zc::validate(po.graph).empty());
      expect_pushout_universal(*f2, *g2, t), ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(CoveringPushout, IdentityGivesSameCovering) {
  const auto z = zc::lab::cycle_double_cover(2);
  const zc::UndirectedMorphism id{z.domain, z.domain, zc::identity_map(z.domain)};
  const auto out = zc::covering_pushout(id, id, z, z);
  EXPECT_TRUE(zc::is_isomorphic(out.pushout.graph, z.domain));
  EXPECT_TRUE(zc::is_covering(out.to_base));
}

TEST(CoveringPushout, TwoSquaresOverADigon) {
  // Y = c^8_U, Z = Z' = c^4_U over X = c^2_U; f winds, g winds shifted by 2.
  const auto c8 = zc::graphs::undirected_cycle(8), c4 = zc::graphs::undirected_cycle(4);
  auto wind = [&](std::size_t shift) {
    zc::UndirectedMorphism m{c8, c4, {}};
    for (std::size_t n = 0; n < 8; ++n) m.map.nodes.push_back((n + shift) % 4);
    for (std::size_t n = 0; n < 8; ++n) {
      m.map.arrows.push_back(2 * ((n + shift) % 4));
      m.map.arrows.push_back(2 * ((n + shift) % 4) + 1);
    }
    return m;
  };
  const auto z_cover = zc::lab::cycle_double_cover(2);
  const auto out = zc::covering_pushout(wind(0), wind(2), z_cover, z_cover);
  EXPECT_TRUE(zc::is_covering(out.to_base));
  EXPECT_TRUE(zc::validate(out.pushout.graph).empty());
}

TEST(CoveringPushout, TrivialDoubleCoverOfB2CollapsesToB2) {
  const auto b2 = zc::graphs::bouquet(2);
  const auto two = zc::sum(b2, b2);
  const zc::UndirectedMorphism fold{two.graph, b2, {{0, 0}, {0, 1, 0, 1}}};
  const zc::UndirectedMorphism id{b2, b2, zc::identity_map(b2)};
  const auto out = zc::covering_pushout(fold, fold, id, id);
  EXPECT_TRUE(zc::is_isomorphic(out.pushout.graph, b2));
  EXPECT_TRUE(zc::is_covering(out.to_base));
}

TEST(CoveringPushout, RejectsNonCoverings) {
  const auto f = zc::lab::elementary_folding();
  const zc::UndirectedMorphism id{f.domain, f.domain, zc::identity_map(f.domain)};
  EXPECT_THROW(zc::covering_pushout(id, id, f, f), zc::InputError);
}
