#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace folim {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Rooted tree with an ordered child list at every node. Node ids are dense
/// (0..size()-1). Immutable after construction; every factory validates.
class PlaneTree {
 public:
  /// Single-node tree.
  PlaneTree();

  /// `parent[v]` is the parent of v or kNoNode for the root. Children of a
  /// node are ordered by increasing id. Throws ValidationError on cycles,
  /// missing or multiple roots, or out-of-range parents.
  static PlaneTree from_parents(std::span<const NodeId> parent);

  /// `children[v]` lists the children of v in plane order. Throws
  /// ValidationError unless the lists partition all non-root nodes and
  /// form a tree.
  static PlaneTree from_children(std::vector<std::vector<NodeId>> children);

  std::size_t size() const noexcept { return parent_.size(); }
  NodeId root() const noexcept { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  const std::vector<NodeId>& children(NodeId v) const { return children_[v]; }
  std::size_t child_count(NodeId v) const { return children_[v].size(); }
  bool is_leaf(NodeId v) const { return children_[v].empty(); }
  /// Position of v in its parent's child list (0 for the root).
  std::size_t child_index(NodeId v) const { return index_[v]; }
  /// The sibling immediately before / after v, or kNoNode.
  NodeId prev_sibling(NodeId v) const;
  NodeId next_sibling(NodeId v) const;
  NodeId first_child(NodeId v) const { return children_[v].empty() ? kNoNode : children_[v].front(); }
  std::size_t depth(NodeId v) const { return depth_[v]; }
  std::size_t height() const;

  /// parnt(x, y): x is a child of y.
  bool parnt(NodeId x, NodeId y) const { return parent_[x] == y; }
  /// succ(x, y): y immediately follows x in their parent's child list.
  bool succ(NodeId x, NodeId y) const { return parent_[x] != kNoNode && next_sibling(x) == y; }

  std::vector<NodeId> preorder() const;
  /// Number of nodes in the subtree of each node (including itself).
  std::vector<std::size_t> subtree_sizes() const;

  /// Same tree with ids reassigned in preorder. If `old_to_new` is given it
  /// receives the id mapping.
  PlaneTree renumbered_preorder(std::vector<NodeId>* old_to_new = nullptr) const;

  bool operator==(const PlaneTree& o) const { return children_ == o.children_ && root_ == o.root_; }

 private:
  void finish();

  NodeId root_ = 0;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::size_t> index_;
  std::vector<std::size_t> depth_;
};

/// Constant symbols c_i (i >= 1) interpreted by distinct nodes.
using ConstantMap = std::map<int, NodeId>;

/// Plane tree with optional constants and optional node colors. Colors are
/// unary labels 1..k; an empty color vector means "uncolored" and color 0
/// denotes an uncolored node (e.g. the root of an encoded tree).
struct PlaneCTree {
  PlaneTree tree;
  ConstantMap constants;
  std::vector<int> colors;

  PlaneCTree() = default;
  explicit PlaneCTree(PlaneTree t) : tree(std::move(t)) {}
  /// Validating constructor: constants injective and in range, colors
  /// either empty or one per node and non-negative.
  PlaneCTree(PlaneTree t, ConstantMap c, std::vector<int> col = {});

  std::size_t size() const noexcept { return tree.size(); }
  int color(NodeId v) const { return colors.empty() ? 0 : colors[v]; }
  std::optional<NodeId> constant(int index) const;
  /// Largest constant index interpreted (0 if none).
  int max_constant() const;

  bool operator==(const PlaneCTree&) const = default;
};

/// Ordered list of plane trees whose nodes carry colors from [k].
/// Node ids are global: tree j occupies the id range starting at offset(j),
/// numbered in preorder within that tree.
struct ColoredPlaneForest {
  std::vector<PlaneTree> trees;
  std::vector<std::vector<int>> colors;  // colors[j][v] for node v of tree j
  int k = 1;

  /// Throws ValidationError unless every node has a color in [k].
  void validate() const;
  std::size_t node_count() const;
  bool operator==(const ColoredPlaneForest&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. `labels` carries external
/// vertex ids for I/O.
struct SimpleGraph {
  std::size_t n = 0;
  std::set<std::pair<int, int>> edges;  // normalized a < b
  std::vector<int> labels;

  /// Adds {a, b}; throws ValidationError on loops or out-of-range ends.
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int label(int v) const { return labels.empty() ? v : labels[v]; }
  /// Index of the vertex with external id `id`; throws if absent.
  int index_of(int id) const;
  std::vector<std::vector<int>> adjacency() const;
};

struct IntervalVertex {
  int id = 0;   // external id
  int lo = 0;   // interval [lo, hi)
  int hi = 1;
  int color = 1;
};

/// Semi-interval graph with a proper coloring of intersecting intervals by
/// the palette A. Edges are stored by vertex index.
struct AIntervalGraph {
  std::vector<int> palette;  // sorted, distinct
  std::vector<IntervalVertex> vertices;
  std::set<std::pair<int, int>> edges;

  /// Checks lo < hi, colors in the palette, distinct ids, adjacent
  /// intervals intersect, intersecting intervals differ in color.
  void validate() const;
  bool intersects(int a, int b) const {
    return vertices[a].lo < vertices[b].hi && vertices[b].lo < vertices[a].hi;
  }
  int first_segment() const;
  int last_segment() const;
  /// Underlying graph with external ids as labels.
  SimpleGraph graph() const;
};

/// Sequence of bags; bags hold vertex indices of an accompanying graph.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  std::size_t width() const;
  /// Checks every vertex of `g` occurs in a contiguous nonempty run and every
  /// edge lies in some bag. Throws ValidationError otherwise.
  void validate(const SimpleGraph& g) const;
  bool operator==(const PathDecomposition&) const = default;
};

/// Color (x, X, Z) of a node of a path-width tree. X is a bitmask with bit c
/// set when palette color c is a member; Z uses kRightMark / kLeftMark.
struct ColorTriple {
  int x = 0;
  std::uint32_t X = 0;
  std::uint32_t Z = 0;
  bool operator==(const ColorTriple&) const = default;
};
inline constexpr std::uint32_t kRightMark = 1;  // ->
inline constexpr std::uint32_t kLeftMark = 2;   // <-

/// Plane tree whose non-root nodes carry color triples. `assoc` maps a node
/// to the index of its source vertex (encoder side; -1 for the root) and is
/// empty when unknown.
struct PwTree {
  PlaneTree tree;
  std::vector<ColorTriple> color;
  std::vector<int> assoc;
  std::vector<int> palette;  // sorted; may be empty when read from a file
};

/// Parent, children and the succ-predecessor / successor of v (those that
/// exist), sorted ascending.
std::vector<NodeId> gaifman_neighbors(const PlaneTree& t, NodeId v);

/// Sizes of the components of T minus u (parent edges only), descending.
std::vector<std::size_t> components_after_removal(const PlaneTree& t, NodeId u);

}  // namespace folim
