#pragma once

#include "folim/structures.hpp"

namespace folim {

/// Vertex v gets [first bag, last bag + 1); colors from [width+1] are given
/// greedily in order of (lo, id), smallest free color first.
AIntervalGraph pd_to_interval(const SimpleGraph& g, const PathDecomposition& p);

/// One bag per segment from the first to the last, renumbered from 0. Bags
/// hold vertex indices of h (equivalently of h.graph()).
PathDecomposition interval_to_pd(const AIntervalGraph& h);

}  // namespace folim
