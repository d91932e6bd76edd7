#pragma once

#include <vector>

#include "folim/formula.hpp"
#include "folim/interpretation.hpp"

namespace folim {

/// Decoding formulas over the formula colors of pw_colored_tree.
struct PwFormulas {
  std::vector<int> palette;
  FormulaPtr phi0;   // free u: the node carries no <- marker
  FormulaPtr phi_v;  // free u, w: both nodes belong to the same vertex
  FormulaPtr phi_e;  // free u, w: the nodes belong to adjacent vertices
};

PwFormulas pw_formulas(const std::vector<int>& palette);

/// Domain phi0 over "u" and the binary relation "edge" given by phi_e.
InterpretationScheme pw_scheme(const PwFormulas& f);

}  // namespace folim
