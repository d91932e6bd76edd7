#include "folim/evaluator.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "folim/error.hpp"

namespace folim {

std::vector<std::vector<NodeId>> neighbor_table(const PlaneTree& t) {
  std::vector<std::vector<NodeId>> nb(t.size());
  for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) nb[v] = gaifman_neighbors(t, v);
  return nb;
}

namespace {

enum class K { Parnt, Succ, Color, ColorSet, Eq, True, False, Not, And, Or, Implies, Exists, Forall, ExistsN, ForallN };

struct CNode {
  K kind = K::True;
  int a = 0, b = 0;  // term codes: slot >= 0, constant node as -(node + 1)
  int color = 0;
  std::vector<char> colors;
  std::vector<int> kids;
  int slot = -1;
  bool memo = false;
  std::vector<int> free_slots;
  std::unordered_map<std::uint64_t, bool> cache;
};

}  // namespace

struct Evaluator::Impl {
  const PlaneCTree* s = nullptr;
  std::vector<std::vector<NodeId>> nb;
  std::vector<CNode> nodes;
  std::vector<NodeId> asg;
  std::vector<std::string> order;
  int root = 0;
  int n = 0;

  std::unordered_map<const Formula*, std::vector<std::string>> free_cache;
  std::map<std::pair<const Formula*, std::vector<int>>, int> compiled;

  const std::vector<std::string>& free_of(const Formula* f) {
    if (auto it = free_cache.find(f); it != free_cache.end()) return it->second;
    std::vector<std::string> out;
    auto add = [&](const std::string& v) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    for (const auto& t : f->terms)
      if (!t.is_const()) add(t.var);
    if (f->is_neighbor_quantifier()) add(f->anchor);
    for (const auto& k : f->kids)
      for (const auto& v : free_of(k.get()))
        if (!(f->is_quantifier() && v == f->var)) add(v);
    return free_cache[f] = std::move(out);
  }

  int term_code(const Term& t, const std::map<std::string, int>& env) {
    if (t.is_const()) {
      auto c = s->constant(t.index);
      if (!c) throw EvalError("constant c_" + std::to_string(t.index) + " is not interpreted");
      return -(*c + 1);
    }
    return env.at(t.var);
  }

  int compile(const Formula* f, const std::map<std::string, int>& env) {
    std::vector<int> key_slots;
    for (const auto& v : free_of(f)) key_slots.push_back(env.at(v));
    auto key = std::make_pair(f, key_slots);
    if (auto it = compiled.find(key); it != compiled.end()) return it->second;

    CNode c;
    switch (f->op) {
      case Op::Parnt: c.kind = K::Parnt; break;
      case Op::Succ: c.kind = K::Succ; break;
      case Op::Color: c.kind = K::Color; break;
      case Op::Eq: c.kind = K::Eq; break;
      case Op::True: c.kind = K::True; break;
      case Op::False: c.kind = K::False; break;
      case Op::Not: c.kind = K::Not; break;
      case Op::And: c.kind = K::And; break;
      case Op::Or: c.kind = K::Or; break;
      case Op::Implies: c.kind = K::Implies; break;
      case Op::Exists: c.kind = K::Exists; break;
      case Op::Forall: c.kind = K::Forall; break;
      case Op::ExistsN: c.kind = K::ExistsN; break;
      case Op::ForallN: c.kind = K::ForallN; break;
    }
    if (!f->terms.empty()) c.a = term_code(f->terms[0], env);
    if (f->terms.size() > 1) c.b = term_code(f->terms[1], env);
    c.color = f->color;

    if (f->op == Op::Or && f->kids.size() > 1 &&
        std::all_of(f->kids.begin(), f->kids.end(), [&](const FormulaPtr& k) {
          return k->op == Op::Color && k->terms[0] == f->kids[0]->terms[0];
        })) {
      c.kind = K::ColorSet;
      c.a = term_code(f->kids[0]->terms[0], env);
      int mx = 0;
      for (const auto& k : f->kids) mx = std::max(mx, k->color);
      c.colors.assign(mx + 1, 0);
      for (const auto& k : f->kids) c.colors[k->color] = 1;
    } else if (f->is_quantifier()) {
      c.slot = static_cast<int>(asg.size());
      asg.push_back(0);
      if (f->is_neighbor_quantifier()) c.a = env.at(f->anchor);
      auto inner = env;
      inner[f->var] = c.slot;
      c.kids.push_back(compile(f->kids[0].get(), inner));
      if ((f->op == Op::Exists || f->op == Op::Forall) && key_slots.size() <= 4 && n < 65535) {
        c.memo = true;
        c.free_slots = key_slots;
      }
    } else {
      for (const auto& k : f->kids) c.kids.push_back(compile(k.get(), env));
    }
    int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(c));
    compiled.emplace(std::move(key), id);
    return id;
  }

  NodeId val(int code) const { return code >= 0 ? asg[code] : -(code + 1); }

  bool eval(int id) {
    CNode& c = nodes[id];
    const PlaneTree& t = s->tree;
    switch (c.kind) {
      case K::Parnt: return t.parent(val(c.a)) == val(c.b);
      case K::Succ: return t.succ(val(c.a), val(c.b));
      case K::Color: return s->color(val(c.a)) == c.color;
      case K::ColorSet: {
        int col = s->color(val(c.a));
        return col < static_cast<int>(c.colors.size()) && c.colors[col];
      }
      case K::Eq: return val(c.a) == val(c.b);
      case K::True: return true;
      case K::False: return false;
      case K::Not: return !eval(c.kids[0]);
      case K::And:
        for (int k : c.kids)
          if (!eval(k)) return false;
        return true;
      case K::Or:
        for (int k : c.kids)
          if (eval(k)) return true;
        return false;
      case K::Implies: return !eval(c.kids[0]) || eval(c.kids[1]);
      case K::Exists:
      case K::Forall: {
        std::uint64_t key = 0;
        if (c.memo) {
          for (std::size_t i = 0; i < c.free_slots.size(); ++i)
            key |= static_cast<std::uint64_t>(asg[c.free_slots[i]] + 1) << (16 * i);
          if (auto it = c.cache.find(key); it != c.cache.end()) return it->second;
        }
        const bool want = c.kind == K::Exists;
        const int slot = c.slot, body = c.kids[0];
        bool result = !want;
        for (NodeId v = 0; v < n; ++v) {
          asg[slot] = v;
          if (eval(body) == want) {
            result = want;
            break;
          }
        }
        if (nodes[id].memo) nodes[id].cache.emplace(key, result);
        return result;
      }
      case K::ExistsN:
      case K::ForallN: {
        const bool want = c.kind == K::ExistsN;
        const int slot = c.slot, body = c.kids[0];
        for (NodeId v : nb[val(c.a)]) {
          asg[slot] = v;
          if (eval(body) == want) return want;
        }
        return !want;
      }
    }
    return false;
  }
};

Evaluator::Evaluator(const PlaneCTree& s, const FormulaPtr& f, std::vector<std::string> free_order)
    : impl_(std::make_unique<Impl>()) {
  impl_->s = &s;
  impl_->n = static_cast<int>(s.size());
  impl_->nb = neighbor_table(s.tree);
  impl_->order = free_order.empty() ? free_variables(f) : std::move(free_order);
  std::map<std::string, int> env;
  for (const auto& v : impl_->order) {
    if (env.count(v)) throw ValidationError("free variable '" + v + "' listed twice");
    env[v] = static_cast<int>(impl_->asg.size());
    impl_->asg.push_back(0);
  }
  for (const auto& v : impl_->free_of(f.get()))
    if (!env.count(v)) throw EvalError("no value for free variable '" + v + "'");
  impl_->root = impl_->compile(f.get(), env);
  impl_->compiled.clear();
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

const std::vector<std::string>& Evaluator::free_order() const noexcept { return impl_->order; }

bool Evaluator::operator()(std::span<const NodeId> values) {
  if (values.size() != impl_->order.size()) throw ValidationError("wrong number of free-variable values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= impl_->n) throw ValidationError("assigned node out of range");
    impl_->asg[i] = values[i];
  }
  return impl_->eval(impl_->root);
}

bool evaluate(const PlaneCTree& s, const FormulaPtr& f, const std::map<std::string, NodeId>& asg) {
  std::vector<std::string> order;
  std::vector<NodeId> vals;
  for (const auto& v : free_variables(f)) {
    auto it = asg.find(v);
    if (it == asg.end()) throw EvalError("no value for free variable '" + v + "'");
    order.push_back(v);
    vals.push_back(it->second);
  }
  Evaluator e(s, f, order);
  return e(vals);
}

}  // namespace folim
