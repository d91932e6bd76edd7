#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace folim {

enum class Op { Parnt, Succ, Color, Eq, True, False, Not, And, Or, Implies, Exists, Forall, ExistsN, ForallN };

/// A variable name or the constant symbol c_index.
struct Term {
  std::string var;
  int index = 0;  // > 0 for constants

  bool is_const() const noexcept { return index > 0; }
  static Term variable(std::string v) { return Term{std::move(v), 0}; }
  static Term constant(int i) { return Term{{}, i}; }
  bool operator==(const Term&) const = default;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node. Subformulas may be shared between parents.
struct Formula {
  Op op = Op::True;
  std::vector<Term> terms;       // atoms
  int color = 0;                 // Op::Color
  std::vector<FormulaPtr> kids;  // connectives and quantifier body
  std::string var;               // bound variable of a quantifier
  std::string anchor;            // anchor of ExistsN / ForallN
  int depth = 0;                 // quantifier depth, cached
  int max_const = 0;             // largest constant index, cached

  bool is_quantifier() const noexcept { return op >= Op::Exists; }
  bool is_neighbor_quantifier() const noexcept { return op == Op::ExistsN || op == Op::ForallN; }
};

namespace fo {
FormulaPtr parnt(Term child, Term parent);
FormulaPtr succ(Term left, Term right);
FormulaPtr color(int k, Term t);
FormulaPtr eq(Term a, Term b);
FormulaPtr top();
FormulaPtr bottom();
FormulaPtr neg(FormulaPtr f);
/// Flattening constructors; and_() of nothing is true, or_() of nothing false.
FormulaPtr and_(std::vector<FormulaPtr> fs);
FormulaPtr or_(std::vector<FormulaPtr> fs);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(std::string v, FormulaPtr body);
FormulaPtr forall(std::string v, FormulaPtr body);
FormulaPtr exists_n(std::string v, std::string anchor, FormulaPtr body);
FormulaPtr forall_n(std::string v, std::string anchor, FormulaPtr body);
inline Term var(std::string v) { return Term::variable(std::move(v)); }
inline Term cst(int i) { return Term::constant(i); }
}  // namespace fo

struct ParseOptions {
  /// When set, these are the only allowed free variables, and any other
  /// unbound variable (including a quantifier anchor) is an error.
  std::optional<std::vector<std::string>> declared_free;
};

/// Parses the S-expression grammar. Throws ParseError with a byte offset.
FormulaPtr parse_formula(std::string_view text, const ParseOptions& opts = {});

std::string to_string(const FormulaPtr& f);

inline int quantifier_depth(const FormulaPtr& f) { return f->depth; }
inline int max_constant_index(const FormulaPtr& f) { return f->max_const; }

/// Free variables in order of first occurrence (left to right).
std::vector<std::string> free_variables(const FormulaPtr& f);

/// True when no global quantifier occurs (every quantifier ranges over the
/// Gaifman neighbors of an already bound variable).
bool is_local(const FormulaPtr& f);

/// Number of distinct nodes in the formula DAG.
std::size_t dag_size(const FormulaPtr& f);

}  // namespace folim
