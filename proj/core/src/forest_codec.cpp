#include "folim/forest_codec.hpp"

#include <functional>

#include "folim/error.hpp"

namespace folim {

PlaneTree forest_encode(const ColoredPlaneForest& f) {
  f.validate();
  std::vector<std::vector<NodeId>> ch(1);
  std::function<NodeId(const PlaneTree&, const std::vector<int>&, NodeId)> add =
      [&](const PlaneTree& t, const std::vector<int>& col, NodeId v) {
        auto me = static_cast<NodeId>(ch.size());
        ch.emplace_back();
        for (int i = 0; i < col[v]; ++i) {
          auto leaf = static_cast<NodeId>(ch.size());
          ch.emplace_back();
          ch[me].push_back(leaf);
        }
        for (NodeId c : t.children(v)) {
          NodeId id = add(t, col, c);
          ch[me].push_back(id);
        }
        return me;
      };
  for (std::size_t j = 0; j < f.trees.size(); ++j) {
    NodeId r = add(f.trees[j], f.colors[j], f.trees[j].root());
    ch[0].push_back(r);
  }
  return PlaneTree::from_children(std::move(ch));
}

namespace {

std::size_t leading_leaves(const PlaneTree& t, NodeId v) {
  std::size_t i = 0;
  while (i < t.child_count(v) && t.is_leaf(t.children(v)[i])) ++i;
  return i;
}

}  // namespace

ColoredPlaneForest forest_decode(const PlaneTree& t, int k) {
  if (k < 1) throw ValidationError("palette size must be >= 1");
  ColoredPlaneForest f;
  f.k = k;
  // Rebuild each component with ids in preorder.
  std::function<void(NodeId, std::vector<std::vector<NodeId>>&, std::vector<int>&)> take =
      [&](NodeId v, std::vector<std::vector<NodeId>>& ch, std::vector<int>& col) {
        std::size_t lead = leading_leaves(t, v);
        if (lead == 0) throw DecodeError("node " + std::to_string(v) + " has no leading leaf children");
        if (lead > static_cast<std::size_t>(k))
          throw DecodeError("node " + std::to_string(v) + " would get color " + std::to_string(lead) + " > " +
                            std::to_string(k));
        auto me = static_cast<NodeId>(ch.size());
        ch.emplace_back();
        col.push_back(static_cast<int>(lead));
        for (std::size_t i = lead; i < t.child_count(v); ++i) {
          NodeId c = t.children(v)[i];
          if (t.is_leaf(c)) throw DecodeError("leaf " + std::to_string(c) + " after the leading leaf run");
          auto id = static_cast<NodeId>(ch.size());
          ch[me].push_back(id);
          take(c, ch, col);
        }
      };
  for (NodeId r : t.children(t.root())) {
    if (t.is_leaf(r)) throw DecodeError("leaf child of the root");
    std::vector<std::vector<NodeId>> ch;
    std::vector<int> col;
    take(r, ch, col);
    f.trees.push_back(PlaneTree::from_children(std::move(ch)));
    f.colors.push_back(std::move(col));
  }
  return f;
}

InterpretationScheme forest_scheme(int k) {
  using namespace fo;
  auto x = var("x");
  auto is_leaf = [](const std::string& v, const std::string& tmp) {
    return neg(exists_n(tmp, v, parnt(var(tmp), var(v))));
  };
  InterpretationScheme s;
  s.domain = and_({exists_n("p", "x", parnt(x, var("p"))), neg(is_leaf("x", "q"))});
  // The i-th child of x as a walk: first child, then i-1 succ steps.
  for (int i = 1; i <= k; ++i) {
    // Innermost: child i is a leaf and child i+1 is absent or not a leaf.
    std::string ci = "c" + std::to_string(i);
    std::string nxt = "c" + std::to_string(i + 1);
    FormulaPtr body = and_({is_leaf(ci, "l" + std::to_string(i)),
                            neg(exists_n(nxt, ci, and_({succ(var(ci), var(nxt)), is_leaf(nxt, "m")})))});
    for (int j = i; j >= 1; --j) {
      std::string cj = "c" + std::to_string(j);
      std::string prev = j == 1 ? "x" : "c" + std::to_string(j - 1);
      FormulaPtr step = j == 1 ? and_({parnt(var(cj), x), neg(exists_n("f", cj, succ(var("f"), var(cj))))})
                               : succ(var(prev), var(cj));
      // Earlier children on the way must be leaves too.
      FormulaPtr leaf_here = j < i ? is_leaf(cj, "l" + std::to_string(j)) : top();
      body = exists_n(cj, prev, and_({step, leaf_here, body}));
    }
    s.relations.push_back({"color" + std::to_string(i), body, {"x"}, false});
  }
  s.relations.push_back({"parnt", nullptr, {"x", "y"}, true});
  s.relations.push_back({"succ", nullptr, {"x", "y"}, true});
  return s;
}

ColoredPlaneForest forest_from_interpretation(const InterpretedStructure& st, int k) {
  const int m = static_cast<int>(st.domain.size());
  std::vector<int> color(m, 0);
  for (int i = 1; i <= k; ++i) {
    auto it = st.relations.find("color" + std::to_string(i));
    if (it == st.relations.end()) continue;
    for (const auto& tup : it->second) {
      if (color[tup[0]]) throw DecodeError("element with two colors");
      color[tup[0]] = i;
    }
  }
  std::vector<int> parent(m, -1);
  for (const auto& tup : st.relations.at("parnt")) parent[tup[0]] = tup[1];
  std::map<int, int> next;
  for (const auto& tup : st.relations.at("succ")) next[tup[0]] = tup[1];
  // Children ordered by following succ from the element without a predecessor.
  std::vector<char> has_pred(m, 0);
  for (auto [a, b] : next) has_pred[b] = 1;
  ColoredPlaneForest f;
  f.k = k;
  std::function<void(int, std::vector<std::vector<NodeId>>&, std::vector<int>&)> take =
      [&](int e, std::vector<std::vector<NodeId>>& ch, std::vector<int>& col) {
        if (!color[e]) throw DecodeError("element without a color");
        auto me = static_cast<NodeId>(ch.size());
        ch.emplace_back();
        col.push_back(color[e]);
        int first = -1;
        for (int c = 0; c < m; ++c)
          if (parent[c] == e && !has_pred[c]) first = c;
        for (int c = first; c != -1; c = next.count(c) ? next[c] : -1) {
          ch[me].push_back(static_cast<NodeId>(ch.size()));
          take(c, ch, col);
        }
      };
  int first_root = -1;
  for (int c = 0; c < m; ++c)
    if (parent[c] == -1 && !has_pred[c]) first_root = c;
  for (int r = first_root; r != -1; r = next.count(r) ? next[r] : -1) {
    std::vector<std::vector<NodeId>> ch;
    std::vector<int> col;
    take(r, ch, col);
    f.trees.push_back(PlaneTree::from_children(std::move(ch)));
    f.colors.push_back(std::move(col));
  }
  return f;
}

}  // namespace folim
