#include "folim/pw_formulas.hpp"

#include <functional>
#include <map>

#include "folim/error.hpp"
#include "folim/pw_codec.hpp"

namespace folim {
namespace {

using namespace fo;
using Pred = std::function<FormulaPtr(const std::string&)>;

class Builder {
 public:
  explicit Builder(std::vector<int> palette) : pal_(std::move(palette)), k_(static_cast<int>(pal_.size())) {}

  std::string fresh() { return "_" + std::to_string(next_++); }

  // Disjunction of every formula color whose triple satisfies `keep`.
  FormulaPtr colors_where(const std::string& v, const std::function<bool(int, unsigned, unsigned)>& keep) {
    std::vector<FormulaPtr> alts;
    for (int xi = 0; xi < k_; ++xi)
      for (unsigned X = 0; X < (1u << k_); ++X)
        for (unsigned Z = 0; Z < 4; ++Z)
          if (keep(xi, X, Z)) alts.push_back(color(1 + static_cast<int>((((static_cast<unsigned>(xi) << k_) | X) << 2) | Z), var(v)));
    return or_(alts);
  }
  FormulaPtr x_is(int xi, const std::string& v) {
    return colors_where(v, [&](int x, unsigned, unsigned) { return x == xi; });
  }
  FormulaPtr in_x(int xi, const std::string& v) {
    return colors_where(v, [&](int, unsigned X, unsigned) { return (X >> xi & 1) != 0; });
  }
  FormulaPtr has_right(const std::string& v) {
    return colors_where(v, [](int, unsigned, unsigned Z) { return (Z & kRightMark) != 0; });
  }
  FormulaPtr has_left(const std::string& v) {
    return colors_where(v, [](int, unsigned, unsigned Z) { return (Z & kLeftMark) != 0; });
  }
  FormulaPtr no_left(const std::string& v) {
    return colors_where(v, [](int, unsigned, unsigned Z) { return (Z & kLeftMark) == 0; });
  }
  FormulaPtr same_x(const std::string& a, const std::string& b) {
    std::vector<FormulaPtr> alts;
    for (int xi = 0; xi < k_; ++xi) alts.push_back(and_({x_is(xi, a), x_is(xi, b)}));
    return or_(alts);
  }

  FormulaPtr is_first(const std::string& c) {
    std::string p = fresh();
    return neg(exists_n(p, c, succ(var(p), var(c))));
  }

  // Some node on the first-child path from s (s included, at most k_ steps
  // down) satisfies `pred`.
  FormulaPtr first_child_path(const std::string& s, const Pred& pred, int steps) {
    if (steps == 0) return pred(s);
    std::string c = fresh();
    return or_({pred(s), exists_n(c, s, and_({parnt(var(c), var(s)), is_first(c), first_child_path(c, pred, steps - 1)}))});
  }

  // Walk `up` parent steps from u to w, then search the first-child path
  // from the successor of w.
  FormulaPtr walk(const std::string& cur, int up, const Pred& pred) {
    if (up == 0) {
      std::string s = fresh();
      return exists_n(s, cur, and_({succ(var(cur), var(s)), first_child_path(s, pred, k_)}));
    }
    std::string w = fresh();
    return exists_n(w, cur, and_({parnt(var(cur), var(w)), walk(w, up - 1, pred)}));
  }

  FormulaPtr phi_prime(const std::string& u, const std::string& v) {
    std::vector<FormulaPtr> alts;
    for (int a = 0; a < k_; ++a) {
      std::vector<FormulaPtr> conj{walk(u, a, [&](const std::string& n) { return eq(var(n), var(v)); })};
      for (int b = 0; b < a; ++b)
        conj.push_back(neg(walk(u, b, [&](const std::string& n) { return and_({has_left(n), same_x(u, n)}); })));
      alts.push_back(and_(conj));
    }
    return and_({has_right(u), has_left(v), same_x(u, v), or_(alts)});
  }

  FormulaPtr phi_pp(const std::string& a, const std::string& b) {
    return or_({eq(var(a), var(b)), phi_prime(a, b), phi_prime(b, a)});
  }

  FormulaPtr phi_v(const std::string& u, const std::string& w) {
    auto key = std::make_pair(u, w);
    if (auto it = phi_v_cache_.find(key); it != phi_v_cache_.end()) return it->second;
    std::function<FormulaPtr(const std::string&, int)> chain = [&](const std::string& prev, int i) -> FormulaPtr {
      if (i == k_ - 1) return phi_pp(prev, w);
      std::string m = fresh();
      return exists(m, and_({phi_pp(prev, m), chain(m, i + 1)}));
    };
    auto f = chain(u, 0);
    phi_v_cache_[key] = f;
    return f;
  }

  // e2 is a proper ancestor of e1 (within k_ steps).
  FormulaPtr ancestor(const std::string& e2, const std::string& e1, int steps) {
    std::string a = fresh();
    FormulaPtr here = eq(var(a), var(e2));
    FormulaPtr body = steps > 1 ? or_({here, ancestor(e2, a, steps - 1)}) : here;
    return exists_n(a, e1, and_({parnt(var(e1), var(a)), body}));
  }

  FormulaPtr phi_e(const std::string& u, const std::string& w) {
    std::string e1 = fresh(), e2 = fresh();
    std::vector<FormulaPtr> cc;
    for (int xi = 0; xi < k_; ++xi) cc.push_back(and_({in_x(xi, e1), x_is(xi, e2)}));
    FormulaPtr pair = or_({and_({phi_v(u, e1), phi_v(w, e2)}), and_({phi_v(u, e2), phi_v(w, e1)})});
    FormulaPtr inner = exists(e2, and_({ancestor(e2, e1, k_), or_(cc), pair}));
    return and_({neg(eq(var(u), var(w))), exists(e1, and_({or_({phi_v(u, e1), phi_v(w, e1)}), inner}))});
  }

 private:
  std::vector<int> pal_;
  int k_;
  int next_ = 0;
  std::map<std::pair<std::string, std::string>, FormulaPtr> phi_v_cache_;
};

}  // namespace

PwFormulas pw_formulas(const std::vector<int>& palette) {
  if (palette.empty()) throw ValidationError("palette must be nonempty");
  if (palette.size() > 6) throw ValidationError("palette too large for formula generation");
  for (std::size_t i = 1; i < palette.size(); ++i)
    if (palette[i - 1] >= palette[i]) throw ValidationError("palette must be sorted and distinct");
  Builder b(palette);
  PwFormulas f;
  f.palette = palette;
  f.phi0 = b.no_left("u");
  f.phi_v = b.phi_v("u", "w");
  f.phi_e = b.phi_e("u", "w");
  return f;
}

InterpretationScheme pw_scheme(const PwFormulas& f) {
  InterpretationScheme s;
  s.domain = f.phi0;
  s.domain_var = "u";
  s.relations.push_back({"edge", f.phi_e, {"u", "w"}, false});
  return s;
}

}  // namespace folim
