#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "folim/formula.hpp"
#include "folim/structures.hpp"

namespace folim {

struct InterpretedRelation {
  std::string name;
  FormulaPtr formula;
  std::vector<std::string> args;  // free variables in argument order
  /// Copy the same-named relation of the input restricted to the domain
  /// instead of evaluating `formula` (only "parnt" and "succ").
  bool trivial = false;
};

struct InterpretationScheme {
  FormulaPtr domain;
  std::string domain_var = "x";
  std::vector<InterpretedRelation> relations;

  /// Arity and free-variable checks; throws ValidationError.
  void validate() const;
};

/// Output structure. Elements are the domain nodes in increasing id order;
/// tuples hold element indices.
struct InterpretedStructure {
  std::vector<NodeId> domain;
  std::map<std::string, std::set<std::vector<int>>> relations;
  bool empty() const { return domain.empty(); }
};

InterpretedStructure apply_interpretation(const InterpretationScheme& scheme, const PlaneCTree& s);

/// Reads a symmetric binary relation of an interpreted structure as a graph
/// on its elements (labels = node ids). Self-pairs are dropped.
SimpleGraph relation_as_graph(const InterpretedStructure& st, const std::string& rel);

}  // namespace folim
