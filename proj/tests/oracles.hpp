#pragma once
// Reference implementations used only by the tests. They favor obviously
// correct brute force over speed and share no code with the library beyond
// the structures and the formula evaluator.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "folim/evaluator.hpp"
#include "folim/formula.hpp"
#include "folim/structures.hpp"

namespace oracle {

using folim::FormulaPtr;
using folim::NodeId;
using folim::PlaneCTree;
using folim::PlaneTree;
namespace fo = folim::fo;

inline std::vector<NodeId> neighbors(const PlaneTree& t, NodeId v) {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < static_cast<NodeId>(t.size()); ++u)
    if (u != v && (t.parent(u) == v || t.parent(v) == u || t.succ(u, v) || t.succ(v, u))) out.push_back(u);
  return out;
}

inline std::string var_name(std::size_t i) { return "x" + std::to_string(i); }

/// Conjunction of all atomic facts (and negated facts) about the tuple,
/// colors included. No constants.
inline FormulaPtr atomic_description(const PlaneCTree& s, const std::vector<NodeId>& tup, int max_color) {
  std::vector<FormulaPtr> lits;
  auto lit = [&](bool holds, FormulaPtr f) { lits.push_back(holds ? f : fo::neg(f)); };
  const PlaneTree& t = s.tree;
  for (std::size_t i = 0; i < tup.size(); ++i) {
    auto xi = fo::var(var_name(i));
    for (int c = 1; c <= max_color; ++c) lit(s.color(tup[i]) == c, fo::color(c, xi));
    for (std::size_t j = 0; j < tup.size(); ++j) {
      auto xj = fo::var(var_name(j));
      if (j < i) lit(tup[i] == tup[j], fo::eq(xi, xj));
      lit(t.parent(tup[i]) == tup[j], fo::parnt(xi, xj));
      lit(t.succ(tup[i], tup[j]), fo::succ(xi, xj));
    }
  }
  return fo::and_(lits);
}

/// Direct Tarskian evaluation by recursion on the AST.
inline bool naive_eval(const PlaneCTree& s, const FormulaPtr& f, std::map<std::string, NodeId>& asg) {
  using folim::Op;
  auto val = [&](const folim::Term& t) -> NodeId { return t.is_const() ? s.constants.at(t.index) : asg.at(t.var); };
  const PlaneTree& t = s.tree;
  auto quant = [&](bool ex, const std::vector<NodeId>& range) {
    auto saved = asg.find(f->var) == asg.end() ? std::optional<NodeId>() : std::optional<NodeId>(asg[f->var]);
    bool res = !ex;
    for (NodeId w : range) {
      asg[f->var] = w;
      if (naive_eval(s, f->kids[0], asg) == ex) {
        res = ex;
        break;
      }
    }
    if (saved)
      asg[f->var] = *saved;
    else
      asg.erase(f->var);
    return res;
  };
  std::vector<NodeId> all(s.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<NodeId>(i);
  switch (f->op) {
    case Op::Parnt: return t.parent(val(f->terms[0])) == val(f->terms[1]);
    case Op::Succ: return t.succ(val(f->terms[0]), val(f->terms[1]));
    case Op::Color: return s.color(val(f->terms[0])) == f->color;
    case Op::Eq: return val(f->terms[0]) == val(f->terms[1]);
    case Op::True: return true;
    case Op::False: return false;
    case Op::Not: return !naive_eval(s, f->kids[0], asg);
    case Op::And:
      for (auto& k : f->kids)
        if (!naive_eval(s, k, asg)) return false;
      return true;
    case Op::Or:
      for (auto& k : f->kids)
        if (naive_eval(s, k, asg)) return true;
      return false;
    case Op::Implies: return !naive_eval(s, f->kids[0], asg) || naive_eval(s, f->kids[1], asg);
    case Op::Exists: return quant(true, all);
    case Op::Forall: return quant(false, all);
    case Op::ExistsN: return quant(true, neighbors(t, asg.at(f->anchor)));
    case Op::ForallN: return quant(false, neighbors(t, asg.at(f->anchor)));
  }
  return false;
}

/// Satisfying tuples over all assignments to `vars`, by enumeration.
inline std::pair<long long, long long> brute_pairing(const PlaneCTree& s, const FormulaPtr& f,
                                                     const std::vector<std::string>& vars) {
  long long n = static_cast<long long>(s.size()), total = 1, hits = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= n;
  std::map<std::string, NodeId> asg;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (auto& v : vars) {
      asg[v] = static_cast<NodeId>(c % n);
      c /= n;
    }
    hits += naive_eval(s, f, asg);
  }
  return {hits, total};
}

/// Local Hintikka formula of the tuple at depth q: exactly the tuples with
/// the same local q-type satisfy it. Built from the definition; free
/// variables x0..x{m-1}.
inline FormulaPtr local_hintikka(const PlaneCTree& s, std::vector<NodeId>& tup, int q, int max_color,
                                 std::map<std::string, FormulaPtr>* pool = nullptr) {
  FormulaPtr alpha = atomic_description(s, tup, max_color);
  if (q == 0) return alpha;
  std::set<NodeId> ext;
  for (NodeId x : tup)
    for (NodeId w : neighbors(s.tree, x)) ext.insert(w);
  std::map<std::string, FormulaPtr> kids;  // dedupe by text
  for (NodeId w : ext) {
    tup.push_back(w);
    auto f = local_hintikka(s, tup, q - 1, max_color, pool);
    tup.pop_back();
    kids.emplace(folim::to_string(f), f);
  }
  const std::string w = var_name(tup.size());
  auto around = [&](bool exists, FormulaPtr body) {
    std::vector<FormulaPtr> alts;
    for (std::size_t i = 0; i < tup.size(); ++i)
      alts.push_back(exists ? fo::exists_n(w, var_name(i), body) : fo::forall_n(w, var_name(i), body));
    return exists ? fo::or_(alts) : fo::and_(alts);
  };
  std::vector<FormulaPtr> conj{alpha};
  std::vector<FormulaPtr> any;
  for (auto& [txt, f] : kids) {
    conj.push_back(around(true, f));
    any.push_back(f);
  }
  conj.push_back(around(false, fo::or_(any)));
  return fo::and_(conj);
}

/// Global Hintikka sentence/formula of rank q (quantifiers over all nodes).
inline FormulaPtr global_hintikka(const PlaneCTree& s, std::vector<NodeId>& tup, int q, int max_color) {
  FormulaPtr alpha = atomic_description(s, tup, max_color);
  if (q == 0) return alpha;
  std::map<std::string, FormulaPtr> kids;
  for (NodeId w = 0; w < static_cast<NodeId>(s.size()); ++w) {
    tup.push_back(w);
    auto f = global_hintikka(s, tup, q - 1, max_color);
    tup.pop_back();
    kids.emplace(folim::to_string(f), f);
  }
  const std::string w = var_name(tup.size());
  std::vector<FormulaPtr> conj{alpha}, any;
  for (auto& [txt, f] : kids) {
    conj.push_back(fo::exists(w, f));
    any.push_back(f);
  }
  conj.push_back(fo::forall(w, fo::or_(any)));
  return fo::and_(conj);
}

/// Components of T minus u under parent edges, by flood fill.
inline std::vector<std::size_t> brute_components(const PlaneTree& t, NodeId u) {
  const auto n = static_cast<NodeId>(t.size());
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId v = 0; v < n; ++v)
    if (t.parent(v) != folim::kNoNode) {
      adj[v].push_back(t.parent(v));
      adj[t.parent(v)].push_back(v);
    }
  std::vector<char> seen(n, 0);
  seen[u] = 1;
  std::vector<std::size_t> out;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t c = 0;
    std::vector<NodeId> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      NodeId x = st.back();
      st.pop_back();
      ++c;
      for (NodeId y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          st.push_back(y);
        }
    }
    out.push_back(c);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// eps-major nodes by deleting each node in turn.
inline std::vector<NodeId> brute_major(const PlaneTree& t, boost::rational<long long> eps) {
  std::vector<NodeId> out;
  const auto n = static_cast<long long>(t.size());
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    auto c = brute_components(t, u);
    long long two = (c.size() > 0 ? c[0] : 0) + (c.size() > 1 ? c[1] : 0);
    if (boost::rational<long long>(two) <= (1 - eps) * n) out.push_back(u);
  }
  return out;
}

/// Number of nodes within distance r of v in T minus U (parent edges only).
inline std::size_t brute_ball(const PlaneTree& t, const std::set<NodeId>& removed, NodeId v, std::size_t r) {
  std::map<NodeId, std::size_t> dist{{v, 0}};
  std::vector<NodeId> frontier{v};
  for (std::size_t step = 0; step < r; ++step) {
    std::vector<NodeId> next;
    for (NodeId x : frontier) {
      std::vector<NodeId> nb(t.children(x).begin(), t.children(x).end());
      if (t.parent(x) != folim::kNoNode) nb.push_back(t.parent(x));
      for (NodeId y : nb)
        if (!removed.count(y) && !dist.count(y)) {
          dist[y] = step + 1;
          next.push_back(y);
        }
    }
    frontier = std::move(next);
  }
  return dist.size();
}

/// Unlabeled graph isomorphism by backtracking with degree pruning.
inline bool isomorphic(const folim::SimpleGraph& a, const folim::SimpleGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  auto adja = a.adjacency(), adjb = b.adjacency();
  std::vector<std::size_t> da, db;
  for (auto& l : adja) da.push_back(l.size());
  for (auto& l : adjb) db.push_back(l.size());
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  const int n = static_cast<int>(a.n);
  std::vector<int> map(n, -1), used(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return da[x] > da[y]; });
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || db[w] != da[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = order[j];
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, k + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
