#include <doctest.h>

#include "folim/error.hpp"
#include "folim/families.hpp"
#include "folim/forest_codec.hpp"
#include "folim/interpretation.hpp"
#include "folim/interval.hpp"
#include "folim/pw_codec.hpp"
#include "folim/pw_formulas.hpp"
#include "folim/tree_io.hpp"
#include "oracles.hpp"

using namespace folim;

namespace {

ColoredPlaneForest forest_of(std::vector<PlaneTree> trees, std::vector<std::vector<int>> colors, int k) {
  ColoredPlaneForest f;
  f.trees = std::move(trees);
  f.colors = std::move(colors);
  f.k = k;
  f.validate();
  return f;
}

AIntervalGraph iv(const std::string& text) { return read_interval_graph(text); }

const char* kK2 = "palette 1 2\nv 1 0 1 1\nv 2 0 1 2\ne 1 2\n";
const char* kP3 = "palette 1 2\nv 1 0 1 1\nv 2 0 2 2\nv 3 1 2 1\ne 1 2\ne 2 3\n";

// Decoded vertices carry the node id of their <-free node; map them back to
// source vertices through the encoder's association map.
bool decodes_exactly(const AIntervalGraph& h, const PwTree& t, const SimpleGraph& g) {
  if (g.n != h.vertices.size()) return false;
  std::vector<int> to_src(g.n);
  for (std::size_t i = 0; i < g.n; ++i) to_src[i] = t.assoc[g.label(static_cast<int>(i))];
  std::set<std::pair<int, int>> mapped;
  for (auto [a, b] : g.edges) mapped.insert(std::minmax(to_src[a], to_src[b]));
  std::vector<int> seen(to_src);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  return mapped == h.edges;
}

}  // namespace

TEST_CASE("forest codec examples") {
  auto one = forest_of({PlaneTree()}, {{2}}, 2);
  auto t = forest_encode(one);
  CHECK(t.size() == 4);
  CHECK(forest_decode(t, 2) == one);

  ColoredPlaneForest empty;
  empty.k = 1;
  CHECK(forest_encode(empty).size() == 1);
  CHECK(forest_decode(PlaneTree(), 1).trees.empty());

  auto two = forest_of({PlaneTree(), PlaneTree()}, {{1}, {1}}, 1);
  auto t2 = forest_encode(two);
  CHECK(t2.size() == 5);
  auto roots = t2.children(t2.root());
  REQUIRE(roots.size() == 2);
  CHECK(t2.succ(roots[0], roots[1]));
  CHECK(forest_decode(t2, 1) == two);

  CHECK(forest_decode(make_path(3), 1).node_count() == 1);
  CHECK_THROWS_AS(forest_decode(make_path(4), 1), DecodeError);
  CHECK_THROWS_AS(forest_decode(t, 1), DecodeError);
}

TEST_CASE("forest codec round trips through decoder and interpretation") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    int k = 1 + static_cast<int>(uniform_below(rng, 4));
    auto f = random_forest(uniform_below(rng, 20), k, rng);
    auto t = forest_encode(f);
    std::size_t colors = 0;
    for (auto& c : f.colors)
      for (int x : c) colors += x;
    CHECK(t.size() == 1 + f.node_count() + colors);
    CHECK(forest_decode(t, k) == f);
    if (i < 60) {
      auto st = apply_interpretation(forest_scheme(k), PlaneCTree(t));
      CHECK(forest_from_interpretation(st, k) == f);
    }
  }
}

TEST_CASE("interpretation basics") {
  PlaneCTree s(make_star(3));
  InterpretationScheme sch;
  sch.domain = fo::top();
  sch.relations.push_back(
      {"edge", fo::or_({fo::parnt(fo::var("a"), fo::var("b")), fo::parnt(fo::var("b"), fo::var("a"))}), {"a", "b"}});
  auto st = apply_interpretation(sch, s);
  auto g = relation_as_graph(st, "edge");
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 3);
  sch.domain = fo::bottom();
  CHECK(apply_interpretation(sch, s).empty());
  sch.domain = fo::eq(fo::var("x"), fo::cst(1));
  CHECK_THROWS_AS(apply_interpretation(sch, s), EvalError);
}

TEST_CASE("path decompositions and interval graphs") {
  auto g = read_simple_graph("v 1\nv 2\nv 3\ne 1 2\ne 2 3\n");
  auto pd = read_path_decomposition("1 2\n2 3\n", g);
  auto h = pd_to_interval(g, pd);
  REQUIRE(h.vertices.size() == 3);
  CHECK(h.vertices[0].lo == 0);
  CHECK(h.vertices[0].hi == 1);
  CHECK(h.vertices[1].lo == 0);
  CHECK(h.vertices[1].hi == 2);
  CHECK(h.vertices[2].lo == 1);
  CHECK(h.vertices[0].color == 1);
  CHECK(h.vertices[1].color == 2);
  CHECK(h.vertices[2].color == 1);
  CHECK(interval_to_pd(h) == pd);

  auto single = read_simple_graph("v 7\n");
  auto hs = pd_to_interval(single, read_path_decomposition("7\n", single));
  CHECK(hs.vertices[0].lo == 0);
  CHECK(hs.vertices[0].hi == 1);
  CHECK(hs.vertices[0].color == 1);
  CHECK(interval_to_pd(hs).bags.size() == 1);

  auto fan = make_fan(6);
  auto hf = pd_to_interval(fan.graph, fan.pd);
  CHECK(hf.palette == std::vector<int>{1, 2, 3});
  int apex = fan.graph.index_of(0);
  CHECK(hf.vertices[apex].lo == hf.first_segment());
  CHECK(hf.vertices[apex].hi == hf.last_segment() + 1);

  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    auto dg = random_pw_graph(30, 1 + uniform_below(rng, 3), rng);
    auto hh = pd_to_interval(dg.graph, dg.pd);
    hh.validate();
    auto back = interval_to_pd(hh);
    back.validate(dg.graph);
    CHECK(back.width() <= dg.pd.width());
  }
}

TEST_CASE("pw encoder examples") {
  auto one = pw_encode(iv("palette 1\nv 5 0 1 1\n"));
  CHECK(one.tree.size() == 2);
  CHECK(one.color[1] == ColorTriple{1, 0, 0});
  CHECK(pw_decode_direct(one).graph.n == 1);

  auto k2 = pw_encode(iv(kK2));
  REQUIRE(k2.tree.size() == 3);
  CHECK(k2.tree.parent(2) == 1);
  CHECK(k2.color[1] == ColorTriple{1, 0, 0});
  CHECK(k2.color[2] == ColorTriple{2, 1u << 1, 0});
  CHECK(decodes_exactly(iv(kK2), k2, pw_decode_direct(k2).graph));

  auto hp = iv(kP3);
  auto p3 = pw_encode(hp);
  REQUIRE(p3.tree.size() == 4);
  CHECK(p3.tree.children(1).size() == 2);
  CHECK(p3.color[1] == ColorTriple{2, 0, 0});
  CHECK(p3.color[2] == ColorTriple{1, 1u << 2, 0});
  CHECK(p3.color[3] == ColorTriple{1, 1u << 2, 0});
  auto dec = pw_decode_direct(p3);
  CHECK(dec.graph.edges.size() == 2);
  CHECK(decodes_exactly(hp, p3, dec.graph));
  CHECK(check_pw_lemma(hp, p3).empty());

  auto text = write_pw_tree(p3);
  auto back = read_pw_tree(text);
  CHECK(back.color == p3.color);
}

TEST_CASE("pw decoder rejects trees outside the image") {
  // A lone -> marker has no partner.
  auto t = read_pw_tree("(0 (1 ctriple=1:0:1))");
  CHECK_THROWS_AS(pw_decode_direct(t), DecodeError);
  auto u = read_pw_tree("(0 (1 ctriple=1:0:2))");
  CHECK_THROWS_AS(pw_decode_direct(u), DecodeError);
}

TEST_CASE("pw round trips with structural checks") {
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    std::size_t p = 1 + uniform_below(rng, 3);
    auto dg = random_pw_graph(1 + uniform_below(rng, 25), p, rng);
    auto h = pd_to_interval(dg.graph, dg.pd);
    auto t = pw_encode(h, i % 2 ? &rng : nullptr);
    CHECK(t.tree.size() <= h.palette.size() * h.vertices.size() + 1);
    CHECK(t.tree.height() <= h.palette.size());
    CHECK(decodes_exactly(h, t, pw_decode_direct(t).graph));
    CHECK(check_pw_lemma(h, t).empty());
    if (i < 40) CHECK(oracle::isomorphic(pw_decode_direct(t).graph, h.graph()));
  }
}

TEST_CASE("pw formulas agree with the direct decoder") {
  auto k2 = pw_encode(iv(kK2));
  auto f2 = pw_formulas(k2.palette);
  auto c2 = pw_colored_tree(k2, k2.palette);
  CHECK(evaluate(c2, f2.phi0, {{"u", 1}}));
  CHECK(evaluate(c2, f2.phi0, {{"u", 2}}));
  CHECK(is_local(f2.phi0));

  auto hp = iv(kP3);
  auto p3 = pw_encode(hp);
  auto f3 = pw_formulas(p3.palette);
  auto c3 = pw_colored_tree(p3, p3.palette);
  std::set<std::pair<int, int>> wit;
  for (NodeId a = 0; a < 4; ++a)
    for (NodeId b = 0; b < 4; ++b)
      if (evaluate(c3, f3.phi_e, {{"u", a}, {"w", b}})) wit.insert(std::minmax(a, b));
  CHECK(wit == std::set<std::pair<int, int>>{{1, 2}, {1, 3}});

  Rng rng(44);
  for (int i = 0; i < 25; ++i) {
    std::size_t p = 1 + uniform_below(rng, 2);
    auto dg = random_pw_graph(1 + uniform_below(rng, 7), p, rng);
    auto h = pd_to_interval(dg.graph, dg.pd);
    auto t = pw_encode(h);
    auto st = apply_interpretation(pw_scheme(pw_formulas(t.palette)), pw_colored_tree(t, t.palette));
    auto g = relation_as_graph(st, "edge");
    auto direct = pw_decode_direct(t).graph;
    CHECK(g.labels == direct.labels);
    CHECK(g.edges == direct.edges);
  }
}
