#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "folim/formula.hpp"
#include "folim/structures.hpp"

namespace folim {

/// A formula compiled against one structure. Global quantifiers with few
/// free variables are memoized, so repeated calls on the same instance get
/// cheaper; an instance must not be shared between threads.
class Evaluator {
 public:
  /// `free_order` fixes the argument order of operator(); by default it is
  /// free_variables(f). Throws EvalError on uninterpreted constants or when
  /// a free variable of f is missing from `free_order`.
  Evaluator(const PlaneCTree& s, const FormulaPtr& f, std::vector<std::string> free_order = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  const std::vector<std::string>& free_order() const noexcept;
  /// values[i] is the node assigned to free_order()[i].
  bool operator()(std::span<const NodeId> values);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot evaluation. Throws EvalError when `asg` misses a free variable.
bool evaluate(const PlaneCTree& s, const FormulaPtr& f, const std::map<std::string, NodeId>& asg);

/// Gaifman neighbor lists of every node.
std::vector<std::vector<NodeId>> neighbor_table(const PlaneTree& t);

}  // namespace folim
