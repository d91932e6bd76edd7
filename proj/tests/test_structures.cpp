#include <doctest.h>

#include "folim/error.hpp"
#include "folim/families.hpp"
#include "folim/structures.hpp"
#include "folim/tree_io.hpp"
#include "oracles.hpp"

using namespace folim;

TEST_CASE("plane tree construction and validation") {
  PlaneTree single;
  CHECK(single.size() == 1);
  CHECK(gaifman_neighbors(single, 0).empty());

  std::vector<NodeId> cyc{1, 0};
  CHECK_THROWS_AS(PlaneTree::from_parents(cyc), ValidationError);
  std::vector<NodeId> two_roots{kNoNode, kNoNode};
  CHECK_THROWS_AS(PlaneTree::from_parents(two_roots), ValidationError);
  std::vector<NodeId> loop{kNoNode, 2, 1};
  CHECK_THROWS_AS(PlaneTree::from_parents(loop), ValidationError);

  CHECK_THROWS_WITH_AS(PlaneCTree(make_path(2), ConstantMap{{1, 0}, {2, 0}}), doctest::Contains("constants not injective"),
                       ValidationError);
  CHECK_THROWS_AS(read_ctree("(0 const=1 (1 const=1))"), ValidationError);
}

TEST_CASE("gaifman neighbors") {
  auto t = make_star(3);  // root 0, children 1 2 3
  CHECK(gaifman_neighbors(t, 1) == std::vector<NodeId>{0, 2});
  CHECK(gaifman_neighbors(t, 2) == std::vector<NodeId>{0, 1, 3});
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    auto r = random_plane_tree(1 + i, rng);
    for (NodeId v = 0; v < static_cast<NodeId>(r.size()); ++v) CHECK(gaifman_neighbors(r, v) == oracle::neighbors(r, v));
  }
}

TEST_CASE("succ is irreflexive, functional and injective") {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    auto t = random_recursive_tree(40, rng);
    for (NodeId x = 0; x < 40; ++x) {
      int out = 0, in = 0;
      for (NodeId y = 0; y < 40; ++y) {
        out += t.succ(x, y);
        in += t.succ(y, x);
      }
      CHECK(!t.succ(x, x));
      CHECK(out <= 1);
      CHECK(in <= 1);
    }
  }
}

TEST_CASE("components after removal") {
  auto p = make_path(3);
  CHECK(components_after_removal(p, 1) == std::vector<std::size_t>{1, 1});
  auto s = make_star(5);
  CHECK(components_after_removal(s, 0) == std::vector<std::size_t>(5, 1));
  CHECK(components_after_removal(s, 3) == std::vector<std::size_t>{5});
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    auto t = random_pruefer_tree(30, rng);
    std::size_t total = 0;
    for (NodeId u = 0; u < 30; ++u) {
      auto c = components_after_removal(t, u);
      CHECK(c == oracle::brute_components(t, u));
      std::size_t sum = 0;
      for (auto x : c) sum += x;
      total += 29 - sum;
    }
    CHECK(total == 0);
  }
}

TEST_CASE("interval graph validation") {
  CHECK_THROWS_WITH_AS(read_interval_graph("palette 1 2\nv 1 0 2 1\nv 2 1 3 1\n"),
                       doctest::Contains("intersecting intervals share color"), ValidationError);
  CHECK_THROWS_WITH_AS(read_interval_graph("palette 1 2\nv 1 0 1 1\nv 2 1 3 2\ne 1 2\n"),
                       doctest::Contains("edge between disjoint intervals"), ValidationError);
  auto h = read_interval_graph("palette 1 2\nv 1 0 2 1\nv 2 1 3 2\ne 1 2\n");
  CHECK(h.vertices.size() == 2);
  CHECK(read_interval_graph(write_interval_graph(h)).edges == h.edges);
}

TEST_CASE("path decomposition validation") {
  auto g = read_simple_graph("v 1\nv 2\nv 3\ne 1 2\ne 2 3\n");
  CHECK_NOTHROW(read_path_decomposition("1 2\n2 3\n", g).validate(g));
  CHECK_THROWS_WITH_AS(read_path_decomposition("1 2\n2 3\n1\n", g).validate(g), doctest::Contains("non-contiguous"),
                       ValidationError);
  CHECK_THROWS_AS(read_path_decomposition("1 2\n3\n", g).validate(g), ValidationError);
  CHECK(read_path_decomposition("1 2\n2 3\n", g).width() == 1);
}

TEST_CASE("tree text round trip") {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto t = random_plane_tree(1 + i % 17, rng);
    PlaneCTree c(t, ConstantMap{{1, 0}}, std::vector<int>(t.size(), 1 + i % 3));
    auto back = read_ctree(write_ctree(c));
    auto pre = c.tree.renumbered_preorder();
    CHECK(back.tree == pre);
    CHECK(back.constants.at(1) == 0);
  }
  auto t = read_ctree("(0 color=2 (2) (1 const=3))");
  CHECK(t.constant(3) == 1);
  CHECK_THROWS_AS(read_ctree("(5 (7))"), ValidationError);
  CHECK(t.size() == 3);
  auto again = read_ctree(write_ctree(t));
  CHECK(again.constant(3).has_value());
  CHECK(again.color(*again.constant(3)) == 0);
}

TEST_CASE("forest text round trip") {
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    auto f = random_forest(20, 3, rng);
    CHECK(read_forest(write_forest(f)) == f);
  }
  CHECK_THROWS_AS(read_forest("(forest k=2 (0 color=3))"), ValidationError);
}
