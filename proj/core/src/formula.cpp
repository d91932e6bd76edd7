#include "folim/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "folim/error.hpp"
#include "folim/sexpr.hpp"

namespace folim {
namespace fo {
namespace {

int term_const(const Term& t) { return t.is_const() ? t.index : 0; }

FormulaPtr atom(Op op, std::vector<Term> ts, int color = 0) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->color = color;
  for (const auto& t : ts) f->max_const = std::max(f->max_const, term_const(t));
  f->terms = std::move(ts);
  return f;
}

FormulaPtr node(Op op, std::vector<FormulaPtr> kids) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  for (const auto& k : kids) {
    f->depth = std::max(f->depth, k->depth);
    f->max_const = std::max(f->max_const, k->max_const);
  }
  f->kids = std::move(kids);
  return f;
}

FormulaPtr quant(Op op, std::string v, std::string anchor, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->op = op;
  f->var = std::move(v);
  f->anchor = std::move(anchor);
  f->depth = body->depth + 1;
  f->max_const = body->max_const;
  f->kids.push_back(std::move(body));
  return f;
}

FormulaPtr flatten(Op op, std::vector<FormulaPtr> fs) {
  std::vector<FormulaPtr> out;
  for (auto& f : fs) {
    if (f->op == op)
      out.insert(out.end(), f->kids.begin(), f->kids.end());
    else
      out.push_back(std::move(f));
  }
  return node(op, std::move(out));
}

}  // namespace

FormulaPtr parnt(Term child, Term parent) { return atom(Op::Parnt, {std::move(child), std::move(parent)}); }
FormulaPtr succ(Term left, Term right) { return atom(Op::Succ, {std::move(left), std::move(right)}); }
FormulaPtr color(int k, Term t) { return atom(Op::Color, {std::move(t)}, k); }
FormulaPtr eq(Term a, Term b) { return atom(Op::Eq, {std::move(a), std::move(b)}); }
FormulaPtr top() { return atom(Op::True, {}); }
FormulaPtr bottom() { return atom(Op::False, {}); }
FormulaPtr neg(FormulaPtr f) { return node(Op::Not, {std::move(f)}); }
FormulaPtr and_(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return top();
  if (fs.size() == 1) return fs[0];
  return flatten(Op::And, std::move(fs));
}
FormulaPtr or_(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return bottom();
  if (fs.size() == 1) return fs[0];
  return flatten(Op::Or, std::move(fs));
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return node(Op::Implies, {std::move(a), std::move(b)}); }
FormulaPtr exists(std::string v, FormulaPtr body) { return quant(Op::Exists, std::move(v), {}, std::move(body)); }
FormulaPtr forall(std::string v, FormulaPtr body) { return quant(Op::Forall, std::move(v), {}, std::move(body)); }
FormulaPtr exists_n(std::string v, std::string anchor, FormulaPtr body) {
  return quant(Op::ExistsN, std::move(v), std::move(anchor), std::move(body));
}
FormulaPtr forall_n(std::string v, std::string anchor, FormulaPtr body) {
  return quant(Op::ForallN, std::move(v), std::move(anchor), std::move(body));
}

}  // namespace fo

namespace {

const std::set<std::string_view> kKeywords = {"parnt", "succ", "color", "=", "not", "and", "or", "implies",
                                              "exists", "forall", "existsN", "forallN", "const", "true", "false"};

bool valid_var(std::string_view s) {
  if (s.empty() || kKeywords.count(s)) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-' || c == '.';
  });
}

class Parser {
 public:
  explicit Parser(const ParseOptions& o) : opts_(o) {
    if (opts_.declared_free)
      for (const auto& v : *opts_.declared_free) scope_.push_back(v);
  }

  FormulaPtr formula(const SExpr& e) {
    if (e.is_atom()) {
      if (e.atom == "true") return fo::top();
      if (e.atom == "false") return fo::bottom();
      fail("expected a formula, got '" + e.atom + "'", e);
    }
    if (e.items.empty() || e.items[0].is_list) fail("expected an operator", e);
    const std::string& head = e.items[0].atom;
    auto arity = [&](std::size_t k) {
      if (e.items.size() != k + 1) fail("'" + head + "' takes " + std::to_string(k) + " arguments", e);
    };
    if (head == "parnt" || head == "succ" || head == "=") {
      arity(2);
      Term a = term(e.items[1]), b = term(e.items[2]);
      if (head == "parnt") return fo::parnt(a, b);
      if (head == "succ") return fo::succ(a, b);
      return fo::eq(a, b);
    }
    if (head == "color") {
      arity(2);
      int k = integer(e.items[1]);
      if (k < 0) fail("color index must be non-negative", e.items[1]);
      return fo::color(k, term(e.items[2]));
    }
    if (head == "not") {
      arity(1);
      return fo::neg(formula(e.items[1]));
    }
    if (head == "and" || head == "or") {
      if (e.items.size() < 2) fail("'" + head + "' needs at least one argument", e);
      std::vector<FormulaPtr> kids;
      for (std::size_t i = 1; i < e.items.size(); ++i) kids.push_back(formula(e.items[i]));
      // Keep the written shape so printing round-trips.
      auto f = std::make_shared<Formula>();
      f->op = head == "and" ? Op::And : Op::Or;
      for (const auto& k : kids) {
        f->depth = std::max(f->depth, k->depth);
        f->max_const = std::max(f->max_const, k->max_const);
      }
      f->kids = std::move(kids);
      return f;
    }
    if (head == "implies") {
      arity(2);
      auto a = formula(e.items[1]);
      return fo::implies(a, formula(e.items[2]));
    }
    if (head == "exists" || head == "forall") {
      arity(2);
      std::string v = bound_var(e.items[1]);
      scope_.push_back(v);
      auto body = formula(e.items[2]);
      scope_.pop_back();
      return head == "exists" ? fo::exists(v, body) : fo::forall(v, body);
    }
    if (head == "existsN" || head == "forallN") {
      arity(3);
      std::string v = bound_var(e.items[1]);
      if (e.items[2].is_list || !valid_var(e.items[2].atom)) fail("anchor must be a variable", e.items[2]);
      const std::string& anchor = e.items[2].atom;
      if (opts_.declared_free && !in_scope(anchor))
        fail("neighbor quantifier anchors unbound variable '" + anchor + "'", e.items[2]);
      scope_.push_back(v);
      auto body = formula(e.items[3]);
      scope_.pop_back();
      return head == "existsN" ? fo::exists_n(v, anchor, body) : fo::forall_n(v, anchor, body);
    }
    fail("unknown operator '" + head + "'", e.items[0]);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const SExpr& at) { throw ParseError(msg, at.offset); }

  bool in_scope(const std::string& v) const { return std::find(scope_.begin(), scope_.end(), v) != scope_.end(); }

  int integer(const SExpr& e) {
    if (e.is_list) fail("expected an integer", e);
    int v = 0;
    auto [p, ec] = std::from_chars(e.atom.data(), e.atom.data() + e.atom.size(), v);
    if (ec != std::errc() || p != e.atom.data() + e.atom.size()) fail("expected an integer, got '" + e.atom + "'", e);
    return v;
  }

  std::string bound_var(const SExpr& e) {
    if (e.is_list || !valid_var(e.atom)) fail("expected a variable name", e);
    return e.atom;
  }

  Term term(const SExpr& e) {
    if (e.is_list) {
      if (e.items.size() != 2 || !e.items[0].is_atom("const")) fail("term must be a variable or (const I)", e);
      int i = integer(e.items[1]);
      if (i < 1) fail("constant index must be >= 1", e.items[1]);
      return Term::constant(i);
    }
    if (!valid_var(e.atom)) fail("bad variable name '" + e.atom + "'", e);
    if (opts_.declared_free && !in_scope(e.atom)) fail("unbound variable '" + e.atom + "'", e);
    return Term::variable(e.atom);
  }

  const ParseOptions& opts_;
  std::vector<std::string> scope_;
};

void print_term(std::ostringstream& os, const Term& t) {
  if (t.is_const())
    os << "(const " << t.index << ')';
  else
    os << t.var;
}

void print(std::ostringstream& os, const Formula& f) {
  static const char* names[] = {"parnt", "succ", "color",   "=",      "true",   "false",   "not",
                                "and",   "or",   "implies", "exists", "forall", "existsN", "forallN"};
  const char* name = names[static_cast<int>(f.op)];
  switch (f.op) {
    case Op::True:
    case Op::False:
      os << name;
      return;
    case Op::Parnt:
    case Op::Succ:
    case Op::Eq:
      os << '(' << name << ' ';
      print_term(os, f.terms[0]);
      os << ' ';
      print_term(os, f.terms[1]);
      os << ')';
      return;
    case Op::Color:
      os << "(color " << f.color << ' ';
      print_term(os, f.terms[0]);
      os << ')';
      return;
    case Op::Exists:
    case Op::Forall:
      os << '(' << name << ' ' << f.var << ' ';
      print(os, *f.kids[0]);
      os << ')';
      return;
    case Op::ExistsN:
    case Op::ForallN:
      os << '(' << name << ' ' << f.var << ' ' << f.anchor << ' ';
      print(os, *f.kids[0]);
      os << ')';
      return;
    default:
      os << '(' << name;
      for (const auto& k : f.kids) {
        os << ' ';
        print(os, *k);
      }
      os << ')';
  }
}

using FreeCache = std::unordered_map<const Formula*, std::vector<std::string>>;

const std::vector<std::string>& free_of(const Formula* f, FreeCache& cache) {
  if (auto it = cache.find(f); it != cache.end()) return it->second;
  std::vector<std::string> out;
  auto add = [&](const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& t : f->terms)
    if (!t.is_const()) add(t.var);
  if (f->is_neighbor_quantifier()) add(f->anchor);
  for (const auto& k : f->kids)
    for (const auto& v : free_of(k.get(), cache))
      if (!(f->is_quantifier() && v == f->var)) add(v);
  return cache[f] = std::move(out);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, const ParseOptions& opts) {
  SExpr e = parse_sexpr(text);
  Parser p(opts);
  return p.formula(e);
}

std::string to_string(const FormulaPtr& f) {
  std::ostringstream os;
  print(os, *f);
  return os.str();
}

std::vector<std::string> free_variables(const FormulaPtr& f) {
  FreeCache cache;
  return free_of(f.get(), cache);
}

bool is_local(const FormulaPtr& f) {
  std::unordered_set<const Formula*> seen;
  std::vector<const Formula*> stack{f.get()};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.insert(g).second) continue;
    if (g->op == Op::Exists || g->op == Op::Forall) return false;
    for (const auto& k : g->kids) stack.push_back(k.get());
  }
  return true;
}

std::size_t dag_size(const FormulaPtr& f) {
  std::unordered_set<const Formula*> seen;
  std::vector<const Formula*> stack{f.get()};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.insert(g).second) continue;
    for (const auto& k : g->kids) stack.push_back(k.get());
  }
  return seen.size();
}

}  // namespace folim
