#include <doctest.h>

#include "folim/error.hpp"
#include "folim/evaluator.hpp"
#include "folim/families.hpp"
#include "folim/formula.hpp"
#include "folim/pairing.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace folim;

TEST_CASE("parser examples") {
  auto psi = parse_formula("(existsN x z (forallN y x (= y z)))");
  CHECK(free_variables(psi) == std::vector<std::string>{"z"});
  CHECK(quantifier_depth(psi) == 2);
  CHECK(is_local(psi));

  auto closed = parse_formula("(exists x (= x x))");
  CHECK(free_variables(closed).empty());
  CHECK(quantifier_depth(closed) == 1);
  CHECK(!is_local(closed));

  auto atom = parse_formula("(parnt x (const 3))");
  CHECK(free_variables(atom) == std::vector<std::string>{"x"});
  CHECK(max_constant_index(atom) == 3);
  CHECK(quantifier_depth(atom) == 0);

  auto branches = parse_formula("(and (exists x (= x x)) (exists y (exists z (succ y z))))");
  CHECK(quantifier_depth(branches) == 2);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_formula("(and (= x y)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(frob x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(existsN x w (= x x))", ParseOptions{std::vector<std::string>{}}), ValidationError);
  CHECK_THROWS_AS(parse_formula("(= x y)", ParseOptions{std::vector<std::string>{"x"}}), ValidationError);
  CHECK_NOTHROW(parse_formula("(existsN y x (= x y))", ParseOptions{std::vector<std::string>{"x"}}));
  try {
    parse_formula("(and (= x y) (bogus))");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("printer round trip") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> scope{"x", "y"};
    auto f = testutil::random_formula(rng, 3, scope, i % 2, 2);
    auto text = to_string(f);
    CHECK(to_string(parse_formula(text)) == text);
    CHECK(quantifier_depth(parse_formula(text)) == quantifier_depth(f));
  }
}

TEST_CASE("evaluation examples") {
  auto path = PlaneCTree(make_path(3));  // a=0, b=1, c=2
  auto psi = parse_formula("(existsN x z (forallN y x (= y z)))");
  CHECK(evaluate(path, psi, {{"z", 1}}));
  CHECK(evaluate(path, parse_formula("(= x x)"), {{"x", 2}}));
  auto cherry = PlaneCTree(make_star(1));
  auto par = parse_formula("(parnt x y)");
  CHECK(evaluate(cherry, par, {{"x", 1}, {"y", 0}}));
  CHECK(!evaluate(cherry, par, {{"x", 0}, {"y", 1}}));
  CHECK_THROWS_AS(evaluate(cherry, parse_formula("(= x (const 1))"), {{"x", 0}}), EvalError);
}

TEST_CASE("evaluator agrees with direct recursion") {
  Rng rng(12);
  for (int i = 0; i < 400; ++i) {
    auto t = random_plane_tree(1 + uniform_below(rng, 8), rng);
    std::vector<int> col(t.size());
    for (auto& c : col) c = 1 + static_cast<int>(uniform_below(rng, 2));
    PlaneCTree s(t, {}, col);
    std::vector<std::string> scope{"x", "y"};
    auto f = testutil::random_formula(rng, 3, scope, i % 2, 2);
    for (int j = 0; j < 5; ++j) {
      std::map<std::string, NodeId> asg{{"x", static_cast<NodeId>(uniform_below(rng, t.size()))},
                                        {"y", static_cast<NodeId>(uniform_below(rng, t.size()))}};
      CHECK(evaluate(s, f, asg) == oracle::naive_eval(s, f, asg));
    }
  }
}

TEST_CASE("stone pairing identities and brute force") {
  Rng rng(13);
  auto eq = parse_formula("(= x y)");
  auto edge = parse_formula("(or (parnt x y) (parnt y x))");
  for (int i = 0; i < 40; ++i) {
    std::int64_t n = 1 + static_cast<std::int64_t>(uniform_below(rng, 30));
    PlaneCTree s(random_recursive_tree(n, rng));
    CHECK(stone_pairing(s, fo::top()) == Rational(1));
    CHECK(stone_pairing(s, eq) == Rational(1, n));
    CHECK(stone_pairing(s, edge) == Rational(2 * (n - 1), n * n));
  }
  CHECK(stone_pairing(PlaneCTree(make_path(4)), fo::bottom()) == Rational(0));
  CHECK(stone_pairing(PlaneCTree(make_path(4)), parse_formula("(exists x (= x x))")) == Rational(1));
  for (int i = 0; i < 200; ++i) {
    PlaneCTree s(random_plane_tree(1 + uniform_below(rng, 7), rng));
    std::vector<std::string> scope{"x", "y", "z"};
    auto f = testutil::random_formula(rng, 2, scope, i % 2);
    auto vars = free_variables(f);
    auto [hits, total] = oracle::brute_pairing(s, f, vars);
    CHECK(stone_pairing(s, f) == Rational(hits, total));
    CHECK(stone_pairing(s, f, 3) == Rational(hits, total));
  }
}

TEST_CASE("pairing rendering") {
  CHECK(format_rational(Rational(1, 4), false) == "1/4");
  CHECK(format_rational(Rational(1, 4), true) == "0.250000000000");
  CHECK(format_rational(Rational(2, 3), true) == "0.666666666667");
  CHECK(format_rational(Rational(1), true) == "1.000000000000");
}

TEST_CASE("monte carlo pairing") {
  PlaneCTree s(make_path(100));
  auto t = stone_pairing_mc(s, fo::top(), 1000, 1);
  CHECK(t.estimate == 1.0);
  CHECK(t.stderr_ == 0.0);
  auto e = stone_pairing_mc(s, parse_formula("(= x y)"), 100000, 7);
  CHECK(std::abs(e.estimate - 0.01) <= 4 * e.stderr_);
  auto e2 = stone_pairing_mc(s, parse_formula("(= x y)"), 100000, 7);
  CHECK(e.hits == e2.hits);
  CHECK_THROWS_AS(stone_pairing_mc(s, fo::top(), 0, 1), ValidationError);

  Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    PlaneCTree small(random_plane_tree(2 + uniform_below(rng, 11), rng));
    std::vector<std::string> scope{"x", "y"};
    auto f = testutil::random_formula(rng, 2, scope, true);
    double exact = boost::rational_cast<double>(stone_pairing(small, f));
    auto mc = stone_pairing_mc(small, f, 100000, 100 + i);
    CHECK(std::abs(mc.estimate - exact) <= 4 * mc.stderr_ + 1e-12);
  }
}

TEST_CASE("evaluation is invariant under relabeling") {
  Rng rng(15);
  for (int i = 0; i < 150; ++i) {
    PlaneCTree s(random_plane_tree(1 + uniform_below(rng, 9), rng));
    std::vector<NodeId> perm;
    auto r = testutil::relabel(s, rng, perm);
    std::vector<std::string> scope{"x", "y"};
    auto f = testutil::random_formula(rng, 3, scope, i % 2);
    NodeId a = static_cast<NodeId>(uniform_below(rng, s.size())), b = static_cast<NodeId>(uniform_below(rng, s.size()));
    CHECK(evaluate(s, f, {{"x", a}, {"y", b}}) == evaluate(r, f, {{"x", perm[a]}, {"y", perm[b]}}));
    CHECK(stone_pairing(s, f) == stone_pairing(r, f));
  }
}

TEST_CASE("local formulas only see their ball") {
  // Growing the tree far from v leaves the radius-q ball around v intact.
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    auto t = random_plane_tree(3 + uniform_below(rng, 15), rng);
    std::vector<std::string> scope{"z"};
    auto f = testutil::random_formula(rng, 3, scope, true);
    const int q = quantifier_depth(f);
    NodeId v = static_cast<NodeId>(uniform_below(rng, t.size()));
    std::vector<int> dist(t.size(), -1);
    std::vector<NodeId> bfs{v};
    dist[v] = 0;
    for (std::size_t k = 0; k < bfs.size(); ++k)
      for (NodeId w : gaifman_neighbors(t, bfs[k]))
        if (dist[w] < 0) dist[w] = dist[bfs[k]] + 1, bfs.push_back(w);
    std::vector<NodeId> far;
    for (NodeId x = 0; x < static_cast<NodeId>(t.size()); ++x)
      if (dist[x] > q) far.push_back(x);
    if (far.empty()) continue;
    NodeId x = far[uniform_below(rng, far.size())];
    std::vector<std::vector<NodeId>> ch(t.size() + 1);
    for (NodeId y = 0; y < static_cast<NodeId>(t.size()); ++y) ch[y] = t.children(y);
    ch[x].push_back(static_cast<NodeId>(t.size()));
    PlaneCTree grown(PlaneTree::from_children(std::move(ch)));
    CHECK(evaluate(PlaneCTree(t), f, {{"z", v}}) == evaluate(grown, f, {{"z", v}}));
  }
}
