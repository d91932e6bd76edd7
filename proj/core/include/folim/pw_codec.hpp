#pragma once

#include <string>
#include <vector>

#include "folim/rng.hpp"
#include "folim/structures.hpp"

namespace folim {

/// Recursive tree encoding of an A-interval graph. The vertex picked at each
/// step has a longest interval among those starting at the first segment;
/// ties go to the smallest id, or to a uniform choice when `tie_rng` is
/// given. The result's assoc maps nodes to vertex indices of h.
PwTree pw_encode(const AIntervalGraph& h, Rng* tie_rng = nullptr);

/// Palette read off the colors (x values and X members).
std::vector<int> infer_palette(const PwTree& t);

/// Structural checks every encoding passes: root uncolored, other nodes
/// with x and X inside the palette, x distinct along root paths, depth at
/// most |A|. Throws DecodeError.
void validate_pw_tree(const PwTree& t, const std::vector<int>& palette);

struct PwDecoded {
  SimpleGraph graph;              // labels = node id of each vertex's <-free node
  std::vector<int> node_vertex;   // node -> vertex index, -1 for the root
};

/// Decodes by matching -> and <- markers along first-child paths, merging
/// matched nodes, and reading edges off ancestor pairs with x' in X.
PwDecoded pw_decode_direct(const PwTree& t);

/// Formula color of a triple: 1 + (((i << |A|) | Xidx) << 2 | Z) where i is
/// the index of x in A and Xidx the index mask of X. The root gets 0.
int triple_color(const ColorTriple& c, const std::vector<int>& palette);
std::size_t palette_color_count(std::size_t palette_size);

/// The tree with triples replaced by formula colors.
PlaneCTree pw_colored_tree(const PwTree& t, const std::vector<int>& palette);

/// Violations of the structural invariants of an encoding of h (empty = none):
/// node counts per vertex, the first-child path, <- uniqueness, unique edge
/// witnesses, and the size and depth bounds.
std::vector<std::string> check_pw_lemma(const AIntervalGraph& h, const PwTree& t);

}  // namespace folim
