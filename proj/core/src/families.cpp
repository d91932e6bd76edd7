#include "folim/families.hpp"

#include <algorithm>
#include <numeric>

#include "folim/error.hpp"

namespace folim {
namespace {

PlaneTree from_dyck(const std::vector<char>& up) {
  // up[i] true = open a child of the current node, false = close it.
  std::vector<std::vector<NodeId>> ch(1);
  std::vector<NodeId> stack{0};
  for (char u : up) {
    if (u) {
      auto v = static_cast<NodeId>(ch.size());
      ch.emplace_back();
      ch[stack.back()].push_back(v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return PlaneTree::from_children(std::move(ch));
}

void dyck_rec(std::vector<char>& w, std::size_t open, std::size_t depth, std::size_t pairs,
              std::vector<PlaneTree>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (w.size() == 2 * pairs) {
    out.push_back(from_dyck(w));
    return;
  }
  if (open < pairs) {
    w.push_back(1);
    dyck_rec(w, open + 1, depth + 1, pairs, out, cap);
    w.pop_back();
  }
  if (depth > 0) {
    w.push_back(0);
    dyck_rec(w, open, depth - 1, pairs, out, cap);
    w.pop_back();
  }
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

}  // namespace

PlaneTree make_path(std::size_t n) {
  if (n == 0) throw ValidationError("path needs at least one node");
  std::vector<NodeId> par(n);
  for (std::size_t i = 0; i < n; ++i) par[i] = static_cast<NodeId>(i) - 1;
  return PlaneTree::from_parents(par);
}

PlaneTree make_star(std::size_t leaves) {
  std::vector<NodeId> par(leaves + 1, 0);
  par[0] = kNoNode;
  return PlaneTree::from_parents(par);
}

PlaneTree make_caterpillar(std::size_t spine, std::size_t legs) {
  if (spine == 0) throw ValidationError("caterpillar needs a spine");
  std::vector<std::vector<NodeId>> ch(spine);
  for (std::size_t i = 0; i < spine; ++i) {
    for (std::size_t j = 0; j < legs; ++j) {
      ch[i].push_back(static_cast<NodeId>(ch.size()));
      ch.emplace_back();
    }
    if (i + 1 < spine) ch[i].push_back(static_cast<NodeId>(i + 1));
  }
  return PlaneTree::from_children(std::move(ch)).renumbered_preorder();
}

PlaneTree make_complete_binary(std::size_t height) {
  if (height > 24) throw ValidationError("binary tree too tall");
  std::size_t n = (std::size_t{1} << (height + 1)) - 1;
  std::vector<NodeId> par(n);
  par[0] = kNoNode;
  for (std::size_t i = 1; i < n; ++i) par[i] = static_cast<NodeId>((i - 1) / 2);
  return PlaneTree::from_parents(par);
}

PlaneTree random_recursive_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw ValidationError("tree needs at least one node");
  std::vector<NodeId> par(n, kNoNode);
  for (std::size_t i = 1; i < n; ++i) par[i] = static_cast<NodeId>(uniform_below(rng, i));
  return PlaneTree::from_parents(par);
}

PlaneTree random_pruefer_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw ValidationError("tree needs at least one node");
  if (n <= 2) return make_path(n);
  std::vector<std::size_t> code(n - 2), degree(n, 1);
  for (auto& c : code) {
    c = uniform_below(rng, n);
    ++degree[c];
  }
  std::vector<std::vector<NodeId>> adj(n);
  // Linear-time decoding with a moving leaf pointer.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t c : code) {
    adj[leaf].push_back(static_cast<NodeId>(c));
    adj[c].push_back(static_cast<NodeId>(leaf));
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      do ++ptr; while (degree[ptr] != 1);
      leaf = ptr;
    }
  }
  adj[leaf].push_back(static_cast<NodeId>(n - 1));
  adj[n - 1].push_back(static_cast<NodeId>(leaf));
  std::vector<std::vector<NodeId>> ch(n);
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ch[v].push_back(w);
        stack.push_back(w);
      }
    shuffle(ch[v], rng);
  }
  return PlaneTree::from_children(std::move(ch));
}

PlaneTree random_plane_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw ValidationError("tree needs at least one node");
  // Cycle lemma: a random arrangement of n-1 ups and n downs has exactly one
  // rotation that is a Lukasiewicz-style path; use the classic conjugation.
  const std::size_t m = n - 1;
  std::vector<int> w(2 * m + 1);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = i < m ? 1 : -1;
  shuffle(w, rng);
  int sum = 0, best = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sum += w[i];
    if (sum < best) {
      best = sum;
      start = i + 1;
    }
  }
  std::vector<char> up;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) up.push_back(w[(start + i) % w.size()] == 1);
  return from_dyck(up);
}

std::vector<PlaneTree> all_plane_trees(std::size_t n, std::size_t cap) {
  std::vector<PlaneTree> out;
  if (n == 0) return out;
  std::vector<char> w;
  dyck_rec(w, 0, 0, n - 1, out, cap);
  return out;
}

ColoredPlaneForest random_forest(std::size_t max_nodes, int k, Rng& rng) {
  ColoredPlaneForest f;
  f.k = k;
  std::size_t total = uniform_below(rng, max_nodes + 1);
  while (total > 0) {
    std::size_t sz = 1 + uniform_below(rng, total);
    total -= sz;
    f.trees.push_back(uniform_below(rng, 2) ? random_recursive_tree(sz, rng).renumbered_preorder()
                                            : random_plane_tree(sz, rng));
    std::vector<int> col(sz);
    for (auto& c : col) c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    f.colors.push_back(std::move(col));
  }
  return f;
}

DecomposedGraph make_fan(std::size_t n) {
  if (n < 2) throw ValidationError("fan needs at least two vertices");
  DecomposedGraph d;
  d.graph.n = n;
  for (std::size_t i = 1; i < n; ++i) {
    d.graph.add_edge(0, static_cast<int>(i));
    if (i + 1 < n) d.graph.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
  }
  if (n == 2) d.pd.bags.push_back({0, 1});
  for (std::size_t i = 1; i + 1 < n; ++i) d.pd.bags.push_back({0, static_cast<int>(i), static_cast<int>(i + 1)});
  return d;
}

DecomposedGraph make_path_graph(std::size_t n) {
  if (n == 0) throw ValidationError("path needs at least one vertex");
  DecomposedGraph d;
  d.graph.n = n;
  if (n == 1) d.pd.bags.push_back({0});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    d.graph.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
    d.pd.bags.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  }
  return d;
}

DecomposedGraph random_pw_graph(std::size_t max_vertices, std::size_t width, Rng& rng) {
  DecomposedGraph d;
  std::size_t target = 1 + uniform_below(rng, std::max<std::size_t>(max_vertices, 1));
  std::vector<int> bag;
  while (d.graph.n < target) {
    bool introduce = bag.empty() || (bag.size() < width + 1 && coin(rng, 2, 3));
    if (introduce) {
      int v = static_cast<int>(d.graph.n++);
      for (int u : bag)
        if (coin(rng, 1, 2)) d.graph.add_edge(u, v);
      bag.push_back(v);
      d.pd.bags.push_back(bag);
    } else {
      bag.erase(bag.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, bag.size())));
    }
  }
  return d;
}

}  // namespace folim
