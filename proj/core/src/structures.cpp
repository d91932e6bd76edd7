#include "folim/structures.hpp"

#include <algorithm>
#include <string>

#include "folim/error.hpp"

namespace folim {

PlaneTree::PlaneTree() : parent_{kNoNode}, children_(1) { finish(); }

PlaneTree PlaneTree::from_parents(std::span<const NodeId> parent) {
  const auto n = static_cast<NodeId>(parent.size());
  if (n == 0) throw ValidationError("tree has no nodes");
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId v = 0; v < n; ++v) {
    NodeId p = parent[v];
    if (p == kNoNode) continue;
    if (p < 0 || p >= n) throw ValidationError("parent of node " + std::to_string(v) + " out of range");
    if (p == v) throw ValidationError("cycle in parent links at node " + std::to_string(v));
    children[p].push_back(v);
  }
  return from_children(std::move(children));
}

PlaneTree PlaneTree::from_children(std::vector<std::vector<NodeId>> children) {
  const auto n = static_cast<NodeId>(children.size());
  if (n == 0) throw ValidationError("tree has no nodes");
  PlaneTree t;
  t.parent_.assign(n, kNoNode);
  std::vector<char> seen(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId c : children[v]) {
      if (c < 0 || c >= n) throw ValidationError("child id out of range");
      if (c == v) throw ValidationError("cycle in parent links at node " + std::to_string(v));
      if (seen[c]) throw ValidationError("node " + std::to_string(c) + " appears in two child lists");
      seen[c] = 1;
      t.parent_[c] = v;
    }
  }
  NodeId root = kNoNode;
  for (NodeId v = 0; v < n; ++v) {
    if (!seen[v]) {
      if (root != kNoNode) throw ValidationError("more than one root (nodes " + std::to_string(root) + " and " + std::to_string(v) + ")");
      root = v;
    }
  }
  if (root == kNoNode) throw ValidationError("cycle in parent links: no root");
  t.root_ = root;
  t.children_ = std::move(children);
  // Reachability from the root rules out cycles detached from it.
  std::vector<NodeId> stack{root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    ++reached;
    for (NodeId c : t.children_[v]) stack.push_back(c);
    if (reached > static_cast<std::size_t>(n)) break;
  }
  if (reached != static_cast<std::size_t>(n)) throw ValidationError("cycle in parent links");
  t.finish();
  return t;
}

void PlaneTree::finish() {
  const std::size_t n = parent_.size();
  index_.assign(n, 0);
  depth_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < children_[v].size(); ++i) index_[children_[v][i]] = i;
  for (NodeId v : preorder())
    if (parent_[v] != kNoNode) depth_[v] = depth_[parent_[v]] + 1;
}

NodeId PlaneTree::prev_sibling(NodeId v) const {
  NodeId p = parent_[v];
  if (p == kNoNode || index_[v] == 0) return kNoNode;
  return children_[p][index_[v] - 1];
}

NodeId PlaneTree::next_sibling(NodeId v) const {
  NodeId p = parent_[v];
  if (p == kNoNode || index_[v] + 1 >= children_[p].size()) return kNoNode;
  return children_[p][index_[v] + 1];
}

std::size_t PlaneTree::height() const {
  return depth_.empty() ? 0 : *std::max_element(depth_.begin(), depth_.end());
}

std::vector<NodeId> PlaneTree::preorder() const {
  std::vector<NodeId> out;
  out.reserve(size());
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<std::size_t> PlaneTree::subtree_sizes() const {
  std::vector<std::size_t> sz(size(), 1);
  auto order = preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent_[*it] != kNoNode) sz[parent_[*it]] += sz[*it];
  return sz;
}

PlaneTree PlaneTree::renumbered_preorder(std::vector<NodeId>* old_to_new) const {
  auto order = preorder();
  std::vector<NodeId> map(size());
  for (std::size_t i = 0; i < order.size(); ++i) map[order[i]] = static_cast<NodeId>(i);
  std::vector<std::vector<NodeId>> ch(size());
  for (std::size_t v = 0; v < size(); ++v)
    for (NodeId c : children_[v]) ch[map[v]].push_back(map[c]);
  if (old_to_new) *old_to_new = map;
  return from_children(std::move(ch));
}

PlaneCTree::PlaneCTree(PlaneTree t, ConstantMap c, std::vector<int> col)
    : tree(std::move(t)), constants(std::move(c)), colors(std::move(col)) {
  std::set<NodeId> used;
  for (auto [i, v] : constants) {
    if (i < 1) throw ValidationError("constant index must be >= 1");
    if (v < 0 || static_cast<std::size_t>(v) >= tree.size()) throw ValidationError("constant node out of range");
    if (!used.insert(v).second) throw ValidationError("constants not injective: node " + std::to_string(v) + " carries two constants");
  }
  if (!colors.empty()) {
    if (colors.size() != tree.size()) throw ValidationError("color vector size mismatch");
    for (int x : colors)
      if (x < 0) throw ValidationError("negative color");
  }
}

std::optional<NodeId> PlaneCTree::constant(int index) const {
  auto it = constants.find(index);
  if (it == constants.end()) return std::nullopt;
  return it->second;
}

int PlaneCTree::max_constant() const { return constants.empty() ? 0 : constants.rbegin()->first; }

void ColoredPlaneForest::validate() const {
  if (k < 1) throw ValidationError("palette size must be >= 1");
  if (colors.size() != trees.size()) throw ValidationError("forest color table size mismatch");
  for (std::size_t j = 0; j < trees.size(); ++j) {
    if (colors[j].size() != trees[j].size()) throw ValidationError("forest color table size mismatch");
    for (int c : colors[j])
      if (c < 1 || c > k) throw ValidationError("forest color " + std::to_string(c) + " outside [" + std::to_string(k) + "]");
  }
}

std::size_t ColoredPlaneForest::node_count() const {
  std::size_t s = 0;
  for (const auto& t : trees) s += t.size();
  return s;
}

void SimpleGraph::add_edge(int a, int b) {
  if (a == b) throw ValidationError("loop at vertex " + std::to_string(label(a)));
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
    throw ValidationError("edge endpoint out of range");
  edges.emplace(std::min(a, b), std::max(a, b));
}

bool SimpleGraph::has_edge(int a, int b) const { return edges.count({std::min(a, b), std::max(a, b)}) > 0; }

int SimpleGraph::index_of(int id) const {
  if (labels.empty()) {
    if (id < 0 || static_cast<std::size_t>(id) >= n) throw ValidationError("unknown vertex " + std::to_string(id));
    return id;
  }
  auto it = std::find(labels.begin(), labels.end(), id);
  if (it == labels.end()) throw ValidationError("unknown vertex " + std::to_string(id));
  return static_cast<int>(it - labels.begin());
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

void AIntervalGraph::validate() const {
  for (std::size_t i = 1; i < palette.size(); ++i)
    if (palette[i - 1] >= palette[i]) throw ValidationError("palette must be sorted and distinct");
  std::set<int> ids;
  for (const auto& v : vertices) {
    if (v.lo >= v.hi) throw ValidationError("empty interval at vertex " + std::to_string(v.id));
    if (!std::binary_search(palette.begin(), palette.end(), v.color))
      throw ValidationError("color " + std::to_string(v.color) + " of vertex " + std::to_string(v.id) + " not in palette");
    if (!ids.insert(v.id).second) throw ValidationError("duplicate vertex id " + std::to_string(v.id));
  }
  const int n = static_cast<int>(vertices.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw ValidationError("bad edge");
    if (!intersects(a, b))
      throw ValidationError("edge between disjoint intervals: " + std::to_string(vertices[a].id) + " " + std::to_string(vertices[b].id));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (intersects(a, b) && vertices[a].color == vertices[b].color)
        throw ValidationError("intersecting intervals share color: " + std::to_string(vertices[a].id) + " " + std::to_string(vertices[b].id));
}

int AIntervalGraph::first_segment() const {
  int f = vertices.at(0).lo;
  for (const auto& v : vertices) f = std::min(f, v.lo);
  return f;
}

int AIntervalGraph::last_segment() const {
  int l = vertices.at(0).hi;
  for (const auto& v : vertices) l = std::max(l, v.hi);
  return l - 1;
}

SimpleGraph AIntervalGraph::graph() const {
  SimpleGraph g;
  g.n = vertices.size();
  for (const auto& v : vertices) g.labels.push_back(v.id);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::size_t PathDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w == 0 ? 0 : w - 1;
}

void PathDecomposition::validate(const SimpleGraph& g) const {
  const int n = static_cast<int>(g.n);
  std::vector<int> first(n, -1), last(n, -1), count(n, 0);
  for (int i = 0; i < static_cast<int>(bags.size()); ++i) {
    std::set<int> in_bag;
    for (int v : bags[i]) {
      if (v < 0 || v >= n) throw ValidationError("bag " + std::to_string(i) + " holds unknown vertex");
      if (!in_bag.insert(v).second) throw ValidationError("vertex repeated within bag " + std::to_string(i));
      if (first[v] < 0) first[v] = i;
      last[v] = i;
      ++count[v];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (first[v] < 0) throw ValidationError("vertex " + std::to_string(g.label(v)) + " occurs in no bag");
    if (count[v] != last[v] - first[v] + 1)
      throw ValidationError("non-contiguous bag run for vertex " + std::to_string(g.label(v)));
  }
  for (auto [a, b] : g.edges)
    if (std::max(first[a], first[b]) > std::min(last[a], last[b]))
      throw ValidationError("edge " + std::to_string(g.label(a)) + "-" + std::to_string(g.label(b)) + " lies in no bag");
}

std::vector<NodeId> gaifman_neighbors(const PlaneTree& t, NodeId v) {
  std::vector<NodeId> out(t.children(v).begin(), t.children(v).end());
  if (t.parent(v) != kNoNode) out.push_back(t.parent(v));
  if (NodeId p = t.prev_sibling(v); p != kNoNode) out.push_back(p);
  if (NodeId s = t.next_sibling(v); s != kNoNode) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> components_after_removal(const PlaneTree& t, NodeId u) {
  auto sz = t.subtree_sizes();
  std::vector<std::size_t> out;
  for (NodeId c : t.children(u)) out.push_back(sz[c]);
  if (t.parent(u) != kNoNode) out.push_back(t.size() - sz[u]);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace folim
