#include "folim/interpretation.hpp"

#include <algorithm>

#include "folim/error.hpp"
#include "folim/evaluator.hpp"

namespace folim {

void InterpretationScheme::validate() const {
  if (!domain) throw ValidationError("scheme has no domain formula");
  for (const auto& v : free_variables(domain))
    if (v != domain_var) throw ValidationError("domain formula has stray free variable '" + v + "'");
  for (const auto& r : relations) {
    if (r.trivial) {
      if (r.name != "parnt" && r.name != "succ") throw ValidationError("only parnt and succ can be trivial");
      if (r.args.size() != 2) throw ValidationError("trivial relation must be binary");
      continue;
    }
    if (!r.formula) throw ValidationError("relation " + r.name + " has no formula");
    for (const auto& v : free_variables(r.formula))
      if (std::find(r.args.begin(), r.args.end(), v) == r.args.end())
        throw ValidationError("relation " + r.name + " has stray free variable '" + v + "'");
  }
}

InterpretedStructure apply_interpretation(const InterpretationScheme& scheme, const PlaneCTree& s) {
  scheme.validate();
  InterpretedStructure out;
  {
    Evaluator dom(s, scheme.domain, {scheme.domain_var});
    for (NodeId v = 0; v < static_cast<NodeId>(s.size()); ++v) {
      NodeId a[1] = {v};
      if (dom(a)) out.domain.push_back(v);
    }
  }
  const int m = static_cast<int>(out.domain.size());
  for (const auto& r : scheme.relations) {
    auto& tuples = out.relations[r.name];
    if (r.trivial) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          NodeId x = out.domain[i], y = out.domain[j];
          if (r.name == "parnt" ? s.tree.parnt(x, y) : s.tree.succ(x, y)) tuples.insert({i, j});
        }
      continue;
    }
    Evaluator ev(s, r.formula, r.args);
    const std::size_t k = r.args.size();
    std::vector<int> idx(k, 0);
    std::vector<NodeId> vals(k);
    if (m == 0 && k > 0) continue;
    while (true) {
      for (std::size_t i = 0; i < k; ++i) vals[i] = out.domain[idx[i]];
      if (ev(vals)) tuples.insert(idx);
      std::size_t p = k;
      while (p > 0 && ++idx[p - 1] == m) idx[--p] = 0;
      if (p == 0) break;
    }
  }
  return out;
}

SimpleGraph relation_as_graph(const InterpretedStructure& st, const std::string& rel) {
  SimpleGraph g;
  g.n = st.domain.size();
  for (NodeId v : st.domain) g.labels.push_back(v);
  auto it = st.relations.find(rel);
  if (it == st.relations.end()) throw ValidationError("no relation named " + rel);
  for (const auto& t : it->second) {
    if (t.size() != 2) throw ValidationError("relation " + rel + " is not binary");
    if (t[0] != t[1]) g.add_edge(t[0], t[1]);
  }
  return g;
}

}  // namespace folim
