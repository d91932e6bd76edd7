#pragma once

#include <cstddef>
#include <vector>

#include "folim/rng.hpp"
#include "folim/structures.hpp"

namespace folim {

/// Path on n nodes rooted at one end.
PlaneTree make_path(std::size_t n);
/// Root with `leaves` children.
PlaneTree make_star(std::size_t leaves);
/// Spine of `spine` nodes rooted at one end; every spine node gets `legs`
/// leaf children placed before its spine child.
PlaneTree make_caterpillar(std::size_t spine, std::size_t legs);
/// Complete binary tree of the given height (height 0 = one node).
PlaneTree make_complete_binary(std::size_t height);

/// Uniform attachment: node i picks a parent uniformly among 0..i-1 and is
/// appended to its child list.
PlaneTree random_recursive_tree(std::size_t n, Rng& rng);
/// Uniformly random labeled tree (Pruefer code) rooted at node 0, children
/// shuffled. Typically much deeper than recursive trees.
PlaneTree random_pruefer_tree(std::size_t n, Rng& rng);
/// Uniformly random plane tree on n nodes (via a random Dyck word).
PlaneTree random_plane_tree(std::size_t n, Rng& rng);

/// Every plane tree with exactly n nodes (Catalan(n-1) of them), stopping
/// after `cap` trees.
std::vector<PlaneTree> all_plane_trees(std::size_t n, std::size_t cap = SIZE_MAX);

/// Random forest with between 0 and max_nodes nodes, colors uniform in [k].
ColoredPlaneForest random_forest(std::size_t max_nodes, int k, Rng& rng);

/// A graph together with a path decomposition of it.
struct DecomposedGraph {
  SimpleGraph graph;
  PathDecomposition pd;
};

/// Fan: apex 0 adjacent to every vertex of the path 1..n-1; bags
/// {0, i, i+1}. n >= 2.
DecomposedGraph make_fan(std::size_t n);
/// Path graph on n vertices with bags {i, i+1}.
DecomposedGraph make_path_graph(std::size_t n);
/// Random graph of path-width at most `width`: a random introduce/forget
/// sweep keeps bags at size <= width+1, and each new vertex is joined to
/// every other bag member with probability 1/2.
DecomposedGraph random_pw_graph(std::size_t max_vertices, std::size_t width, Rng& rng);

}  // namespace folim
