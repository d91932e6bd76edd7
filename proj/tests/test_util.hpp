#pragma once

#include <string>
#include <vector>

#include "folim/formula.hpp"
#include "folim/rng.hpp"
#include "folim/structures.hpp"

namespace testutil {

using namespace folim;

/// Random formula over the variables in scope. With `local` set, every
/// quantifier is a neighbor quantifier anchored at a variable in scope.
inline FormulaPtr random_formula(Rng& rng, int depth, std::vector<std::string>& scope, bool local, int colors = 0,
                                 int budget = 6) {
  auto pick = [&] { return fo::var(scope[uniform_below(rng, scope.size())]); };
  auto leaf = [&]() -> FormulaPtr {
    switch (uniform_below(rng, colors ? 4 : 3)) {
      case 0: return fo::parnt(pick(), pick());
      case 1: return fo::succ(pick(), pick());
      case 2: return fo::eq(pick(), pick());
      default: return fo::color(1 + static_cast<int>(uniform_below(rng, colors)), pick());
    }
  };
  std::uint64_t r = uniform_below(rng, 6);
  if (budget <= 0 || r == 0 || (r >= 3 && depth <= 0)) return leaf();
  if (r == 1) return fo::neg(random_formula(rng, depth, scope, local, colors, budget - 1));
  if (r == 2) {
    auto a = random_formula(rng, depth, scope, local, colors, budget / 2);
    auto b = random_formula(rng, depth, scope, local, colors, budget / 2);
    return coin(rng, 1, 2) ? fo::and_({a, b}) : fo::or_({a, b});
  }
  std::string v = "q" + std::to_string(scope.size());
  std::string anchor = scope[uniform_below(rng, scope.size())];
  scope.push_back(v);
  auto body = random_formula(rng, depth - 1, scope, local, colors, budget - 1);
  scope.pop_back();
  bool ex = r != 5;
  if (local) return ex ? fo::exists_n(v, anchor, body) : fo::forall_n(v, anchor, body);
  return ex ? fo::exists(v, body) : fo::forall(v, body);
}

/// Same tree with node ids permuted (plane order kept).
inline PlaneCTree relabel(const PlaneCTree& s, Rng& rng, std::vector<NodeId>& perm) {
  const std::size_t n = s.size();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<NodeId>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  std::vector<std::vector<NodeId>> ch(n);
  for (std::size_t v = 0; v < n; ++v)
    for (NodeId c : s.tree.children(static_cast<NodeId>(v))) ch[perm[v]].push_back(perm[c]);
  ConstantMap cm;
  for (auto [i, v] : s.constants) cm[i] = perm[v];
  std::vector<int> col;
  if (!s.colors.empty()) {
    col.resize(n);
    for (std::size_t v = 0; v < n; ++v) col[perm[v]] = s.colors[v];
  }
  return PlaneCTree(PlaneTree::from_children(std::move(ch)), std::move(cm), std::move(col));
}

}  // namespace testutil
