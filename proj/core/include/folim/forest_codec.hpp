#pragma once

#include "folim/interpretation.hpp"
#include "folim/structures.hpp"

namespace folim {

/// New root whose children are the forest roots in order; a node of color i
/// gets i new leaf children in front of its own. Nodes are numbered in
/// preorder.
PlaneTree forest_encode(const ColoredPlaneForest& f);

/// Inverse of forest_encode for palette [k]. Throws DecodeError when T is
/// not an encoding.
ColoredPlaneForest forest_decode(const PlaneTree& t, int k);

/// The same decoding as first-order formulas: domain "x" (neither root nor
/// leaf), unary relations color1..colork, and parnt/succ copied trivially.
InterpretationScheme forest_scheme(int k);

/// Converts the output of forest_scheme back into a forest.
ColoredPlaneForest forest_from_interpretation(const InterpretedStructure& st, int k);

}  // namespace folim
