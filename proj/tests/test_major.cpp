#include <doctest.h>

#include "folim/error.hpp"
#include "folim/families.hpp"
#include "folim/major.hpp"
#include "oracles.hpp"

using namespace folim;

TEST_CASE("major node examples") {
  auto star = make_star(5);
  CHECK(major_nodes(star, Epsilon(1, 2)) == std::vector<NodeId>{0});
  CHECK(major_nodes(make_path(11), Epsilon(1, 10)).empty());
  CHECK(major_nodes(make_path(10), Epsilon(1, 10)).size() == 10);
  CHECK(verify_major_bound(make_path(10), Epsilon(1, 10)));
  CHECK(major_nodes(PlaneTree(), Epsilon(1, 3)).size() == 1);
  CHECK(major_bound(Epsilon(1, 2)) == 4);
  CHECK(major_bound(Epsilon(9, 10)) == 2);
  auto r = major_report(star, Epsilon(1, 2));
  CHECK(r.bound == 4);
  CHECK(r.pass);
  CHECK(major_csv({r}) == "tree_index,epsilon,major_count,bound,pass\n0,1/2,1,4,true\n");
  CHECK_THROWS_AS(major_nodes(star, Epsilon(0)), ValidationError);
  CHECK_THROWS_AS(major_nodes(star, Epsilon(3, 2)), ValidationError);
}

TEST_CASE("major nodes match brute force and are monotone") {
  Rng rng(31);
  const std::vector<Epsilon> eps{Epsilon(1, 2), Epsilon(1, 3), Epsilon(1, 10), Epsilon(1, 100)};
  for (int i = 0; i < 150; ++i) {
    PlaneTree t = i % 3 == 0 ? random_plane_tree(1 + uniform_below(rng, 200), rng)
                 : i % 3 == 1 ? random_recursive_tree(1 + uniform_below(rng, 200), rng)
                              : random_pruefer_tree(1 + uniform_below(rng, 200), rng);
    std::vector<NodeId> prev;
    for (auto& e : eps) {
      auto m = major_nodes(t, e);
      CHECK(m == oracle::brute_major(t, boost::rational<long long>(e.numerator(), e.denominator())));
      CHECK(std::includes(m.begin(), m.end(), prev.begin(), prev.end()));
      prev = m;
    }
  }
}

TEST_CASE("pruned balls") {
  auto p = make_path(10);
  CHECK(pruned_ball(p, {}, 0, 3) == 4);
  std::set<NodeId> others;
  for (NodeId v = 1; v < 10; ++v) others.insert(v);
  CHECK(pruned_ball(p, others, 0, 5) == 1);
  CHECK_THROWS_AS(pruned_ball(p, {0}, 0, 1), ValidationError);
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    auto t = random_recursive_tree(1000, rng);
    auto b = check_major_neighborhood(t, Epsilon(1, 20), 2);
    CHECK(b.pass);
    CHECK(b.worst <= 450);
  }
  for (int i = 0; i < 30; ++i) {
    auto t = random_plane_tree(1 + uniform_below(rng, 60), rng);
    auto m = major_nodes(t, Epsilon(1, 4));
    std::set<NodeId> u(m.begin(), m.end());
    for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
      if (u.count(v)) continue;
      for (std::size_t r = 0; r <= 3; ++r) CHECK(pruned_ball(t, u, v, r) == oracle::brute_ball(t, u, v, r));
    }
  }
}

TEST_CASE("constant annotation") {
  std::vector<PlaneTree> stars;
  for (std::size_t n = 10; n <= 40; n += 5) stars.push_back(make_star(n));
  auto a = annotate_constants(stars, 1);
  for (auto& t : a.trees) {
    bool center = false;
    for (auto [i, v] : t.constants) center |= v == 0;
    CHECK(center);
    CHECK(t.constants.size() == 8);
  }
  auto id = annotate_constants(stars, 0);
  for (auto& t : id.trees) CHECK(t.constants.empty());

  Rng rng(33);
  std::vector<PlaneTree> seq;
  for (int i = 0; i < 40; ++i) seq.push_back(random_plane_tree(2 + uniform_below(rng, 600), rng));
  const int stages = 3;
  auto ann = annotate_constants(seq, stages);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::set<NodeId> nodes;
    for (auto [c, v] : ann.trees[i].constants) nodes.insert(v);
    CHECK(nodes.size() == ann.trees[i].constants.size());
    int top = 0;
    for (int k = 1; k <= stages; ++k)
      if (std::find(ann.skipped[i].begin(), ann.skipped[i].end(), k) == ann.skipped[i].end()) top = k;
    if (top == 0) continue;
    for (NodeId u : major_nodes(seq[i], stage_epsilon(top))) CHECK(nodes.count(u));
  }
  auto small = annotate_constants({make_path(5)}, 2);
  CHECK(small.skipped[0] == std::vector<int>{1, 2});
}
