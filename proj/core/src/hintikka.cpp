#include "folim/hintikka.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "folim/error.hpp"
#include "folim/evaluator.hpp"

namespace folim {

std::size_t TypeTable::Hash::operator()(const TypeKey& k) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.size();
  for (auto w : k) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

TypeId TypeTable::intern(TypeKey key) {
  {
    std::shared_lock lock(mu_);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  }
  std::unique_lock lock(mu_);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  auto id = static_cast<TypeId>(keys_.size());
  keys_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

TypeKey TypeTable::key(TypeId id) const {
  std::shared_lock lock(mu_);
  if (id >= keys_.size()) throw ValidationError("unknown type id " + std::to_string(id));
  return keys_[id];
}

std::size_t TypeTable::size() const {
  std::shared_lock lock(mu_);
  return keys_.size();
}

TypeTable& TypeTable::global() {
  static TypeTable t;
  return t;
}

namespace {

// Key layout: [kind, q, b, m, 2 words per constant, 2 words per tuple
// position, sorted child ids]. Relation bits: 5 per earlier position
// (eq, parnt(x,y), parnt(y,x), succ(x,y), succ(y,x)), constants from bit 32.
enum : std::uint64_t { kLocal = 0, kGlobal = 1 };
constexpr int kHeader = 4;
constexpr int kConstBit = 32;

std::uint64_t rel5(const PlaneTree& t, NodeId x, NodeId y) {
  if (x < 0 || y < 0) return 0;
  return (x == y ? 1u : 0u) | (t.parent(x) == y ? 2u : 0u) | (t.parent(y) == x ? 4u : 0u) |
         (t.succ(x, y) ? 8u : 0u) | (t.succ(y, x) ? 16u : 0u);
}

class Typer {
 public:
  Typer(const PlaneCTree& s, int b, TypeTable& tab, std::uint64_t kind) : s_(s), t_(s.tree), b_(b), tab_(tab), kind_(kind) {
    if (b < 0 || b > kMaxTypeDepth) throw ValidationError("type depth must be in 0.." + std::to_string(kMaxTypeDepth));
    for (int i = 1; i <= b; ++i) consts_.push_back(s.constant(i).value_or(kNoNode));
    for (int i = 0; i < b; ++i) {
      std::uint64_t w = consts_[i] >= 0 ? 1 : 0;
      for (int j = 0; j < i; ++j) w |= rel5(t_, consts_[i], consts_[j]) << (1 + 5 * j);
      const_block_.push_back(w);
      const_block_.push_back(consts_[i] >= 0 ? static_cast<std::uint64_t>(s.color(consts_[i])) : 0);
    }
    for (NodeId c : consts_)
      if (c >= 0) present_.push_back(c);
  }

  TypeId local(std::vector<NodeId>& tup, int q) {
    TypeKey key = base_key(tup, q);
    if (q > 0) {
      std::vector<TypeId> kids;
      if (q == 1) {
        for (NodeId w : extensions_q1(tup)) kids.push_back(atomic_with(tup, w));
      } else {
        const std::size_t m = tup.size();
        for (std::size_t i = 0; i < m; ++i) {
          NodeId x = tup[i];
          auto visit = [&](NodeId w) {
            if (w == kNoNode) return;
            tup.push_back(w);
            kids.push_back(local(tup, q - 1));
            tup.pop_back();
          };
          visit(t_.parent(x));
          visit(t_.prev_sibling(x));
          visit(t_.next_sibling(x));
          for (NodeId c : t_.children(x)) visit(c);
        }
      }
      std::sort(kids.begin(), kids.end());
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
      key.insert(key.end(), kids.begin(), kids.end());
    }
    return tab_.intern(std::move(key));
  }

  TypeId global(std::vector<NodeId>& tup, int q) {
    TypeKey key = base_key(tup, q);
    if (q > 0) {
      std::vector<TypeId> kids;
      for (NodeId w = 0; w < static_cast<NodeId>(t_.size()); ++w) {
        tup.push_back(w);
        kids.push_back(global(tup, q - 1));
        tup.pop_back();
      }
      std::sort(kids.begin(), kids.end());
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
      key.insert(key.end(), kids.begin(), kids.end());
    }
    return tab_.intern(std::move(key));
  }

 private:
  std::uint64_t row(const std::vector<NodeId>& tup, std::size_t i) const {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < i; ++j) w |= rel5(t_, tup[i], tup[j]) << (5 * j);
    for (int c = 0; c < b_; ++c) w |= rel5(t_, tup[i], consts_[c]) << (kConstBit + 5 * c);
    return w;
  }

  TypeKey base_key(const std::vector<NodeId>& tup, int q) const {
    TypeKey key;
    key.reserve(kHeader + const_block_.size() + 2 * tup.size() + 8);
    key.push_back(kind_);
    key.push_back(static_cast<std::uint64_t>(q));
    key.push_back(static_cast<std::uint64_t>(b_));
    key.push_back(tup.size());
    key.insert(key.end(), const_block_.begin(), const_block_.end());
    for (std::size_t i = 0; i < tup.size(); ++i) {
      key.push_back(row(tup, i));
      key.push_back(static_cast<std::uint64_t>(s_.color(tup[i])));
    }
    return key;
  }

  TypeId atomic_with(std::vector<NodeId>& tup, NodeId w) {
    tup.push_back(w);
    TypeId id = tab_.intern(base_key(tup, 0));
    tup.pop_back();
    return id;
  }

  // Neighbors whose atomic relation to the tuple and constants can differ
  // from that of a plain child: tuple/constant nodes and everything next to
  // them. Other children of a tuple node are interchangeable up to color,
  // so one per color suffices.
  std::vector<NodeId> extensions_q1(const std::vector<NodeId>& tup) const {
    std::vector<NodeId> marked;
    auto mark_around = [&](NodeId x) {
      marked.push_back(x);
      marked.push_back(t_.parent(x));
      marked.push_back(t_.prev_sibling(x));
      marked.push_back(t_.next_sibling(x));
    };
    for (NodeId x : tup) mark_around(x);
    for (NodeId x : present_) mark_around(x);
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    auto is_marked = [&](NodeId x) { return std::binary_search(marked.begin(), marked.end(), x); };
    auto in_tuple = [&](NodeId x) { return std::find(tup.begin(), tup.end(), x) != tup.end(); };

    std::vector<NodeId> out;
    for (NodeId x : tup) {
      for (NodeId w : {t_.parent(x), t_.prev_sibling(x), t_.next_sibling(x)})
        if (w != kNoNode) out.push_back(w);
    }
    for (NodeId w : marked)
      if (w != kNoNode && t_.parent(w) != kNoNode && in_tuple(t_.parent(w))) out.push_back(w);
    for (NodeId x : tup) {
      std::vector<int> seen_colors;
      for (NodeId c : t_.children(x)) {
        if (is_marked(c)) continue;
        int col = s_.color(c);
        if (std::find(seen_colors.begin(), seen_colors.end(), col) != seen_colors.end()) continue;
        seen_colors.push_back(col);
        out.push_back(c);
        if (s_.colors.empty()) break;
      }
    }
    return out;
  }

  const PlaneCTree& s_;
  const PlaneTree& t_;
  int b_;
  TypeTable& tab_;
  std::uint64_t kind_;
  std::vector<NodeId> consts_;
  std::vector<NodeId> present_;
  std::vector<std::uint64_t> const_block_;
};

TypeId restrict_key(const TypeKey& key, int q, int b, TypeTable& tab, std::map<std::pair<TypeId, int>, TypeId>& memo);

TypeId restrict_id(TypeId id, int q, int b, TypeTable& tab, std::map<std::pair<TypeId, int>, TypeId>& memo) {
  if (auto it = memo.find({id, q}); it != memo.end()) return it->second;
  TypeId r = restrict_key(tab.key(id), q, b, tab, memo);
  memo[{id, q}] = r;
  return r;
}

TypeId restrict_key(const TypeKey& key, int q, int b, TypeTable& tab, std::map<std::pair<TypeId, int>, TypeId>& memo) {
  const int old_b = static_cast<int>(key[2]);
  const std::size_t m = key[3];
  TypeKey out{key[0], static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(b), m};
  for (int c = 0; c < b; ++c) {
    out.push_back(key[kHeader + 2 * c]);
    out.push_back(key[kHeader + 2 * c + 1]);
  }
  const std::uint64_t low = (std::uint64_t{1} << kConstBit) - 1;
  const std::uint64_t keep =
      b == 0 ? low : low | (((std::uint64_t{1} << (5 * b)) - 1) << kConstBit);
  const std::size_t rows = kHeader + 2 * static_cast<std::size_t>(old_b);
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(key[rows + 2 * i] & keep);
    out.push_back(key[rows + 2 * i + 1]);
  }
  if (q > 0) {
    std::vector<TypeId> kids;
    for (std::size_t i = rows + 2 * m; i < key.size(); ++i)
      kids.push_back(restrict_id(static_cast<TypeId>(key[i]), q - 1, b, tab, memo));
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    out.insert(out.end(), kids.begin(), kids.end());
  }
  return tab.intern(std::move(out));
}

void dump_rec(std::ostringstream& os, TypeId id, const TypeTable& tab) {
  TypeKey k = tab.key(id);
  const int b = static_cast<int>(k[2]);
  const std::size_t m = k[3];
  os << "(type " << (k[0] == kLocal ? "local" : "global") << " q=" << k[1] << " b=" << b << " m=" << m << " (consts";
  for (int c = 0; c < b; ++c) os << ' ' << k[kHeader + 2 * c] << ':' << k[kHeader + 2 * c + 1];
  os << ") (rows";
  const std::size_t rows = kHeader + 2 * static_cast<std::size_t>(b);
  for (std::size_t i = 0; i < m; ++i) os << ' ' << k[rows + 2 * i] << ':' << k[rows + 2 * i + 1];
  os << ") (ext";
  // Children sorted by their dump text so the output is run-independent.
  std::vector<std::string> kids;
  for (std::size_t i = rows + 2 * m; i < k.size(); ++i) {
    std::ostringstream sub;
    dump_rec(sub, static_cast<TypeId>(k[i]), tab);
    kids.push_back(sub.str());
  }
  std::sort(kids.begin(), kids.end());
  for (const auto& s : kids) os << ' ' << s;
  os << "))";
}

std::uint64_t sat_pow_sum(std::uint64_t n, int d) {
  std::uint64_t total = 0, p = 1;
  for (int i = 0; i <= d; ++i) {
    total += p;
    if (p > UINT64_MAX / (n + 1)) return UINT64_MAX;
    p *= n;
  }
  return total;
}

}  // namespace

TypeId local_type(const PlaneCTree& t, NodeId v, int d, TypeTable& tab) {
  Typer ty(t, d, tab, kLocal);
  std::vector<NodeId> tup{v};
  return ty.local(tup, d);
}

std::vector<TypeId> local_types(const PlaneCTree& t, int d, TypeTable& tab) {
  Typer ty(t, d, tab, kLocal);
  std::vector<TypeId> out(t.size());
  std::vector<NodeId> tup(1);
  for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
    tup.assign(1, v);
    out[v] = ty.local(tup, d);
  }
  return out;
}

int type_depth(TypeId id, const TypeTable& tab) { return static_cast<int>(tab.key(id)[1]); }

TypeId restrict_type(TypeId id, int q, TypeTable& tab) {
  TypeKey k = tab.key(id);
  if (q < 0 || q > static_cast<int>(k[1])) throw ValidationError("restriction depth out of range");
  if (q == static_cast<int>(k[1])) return id;
  std::map<std::pair<TypeId, int>, TypeId> memo;
  return restrict_key(k, q, q, tab, memo);
}

std::string dump_type(TypeId id, const TypeTable& tab) {
  std::ostringstream os;
  dump_rec(os, id, tab);
  return os.str();
}

std::size_t TypeCensus::total() const {
  std::size_t s = 0;
  for (auto& [id, c] : counts) s += c;
  return s;
}

TypeCensus type_census(const PlaneCTree& t, int d, std::optional<std::size_t> gamma, TypeTable& tab) {
  TypeCensus c;
  c.depth = d;
  c.gamma = gamma;
  for (TypeId id : local_types(t, d, tab)) ++c.counts[id];
  return c;
}

std::string census_csv(const TypeCensus& c) {
  std::ostringstream os;
  os << "type_id,depth,count,truncated_flag\n";
  for (auto& [id, n] : c.counts) {
    bool tr = c.truncated(id);
    os << id << ',' << c.depth << ',' << (tr ? *c.gamma : n) << ',' << (tr ? 1 : 0) << '\n';
  }
  return os.str();
}

std::optional<StepWord> k_position(const PlaneTree& t, NodeId v, NodeId w, std::size_t k) {
  if (v == w) return StepWord{};
  // Lowest common ancestor by depth walking.
  NodeId a = v, b = w;
  NodeId ca = kNoNode, cb = kNoNode;  // children of the LCA on each side
  while (t.depth(a) > t.depth(b)) ca = a, a = t.parent(a);
  while (t.depth(b) > t.depth(a)) cb = b, b = t.parent(b);
  while (a != b) ca = a, a = t.parent(a), cb = b, b = t.parent(b);
  const std::size_t up = t.depth(v) - t.depth(a), down = t.depth(w) - t.depth(a);
  if (up > 0 && down > 0) {
    std::size_t i = t.child_index(ca), j = t.child_index(cb);
    std::size_t side = i < j ? j - i : i - j;
    if (up - 1 + side + down - 1 <= k) {
      StepWord word(up - 1, Step::Up);
      word.insert(word.end(), side, i < j ? Step::Left : Step::Right);
      word.insert(word.end(), down - 1, Step::Down);
      return word;
    }
  }
  if (up + down <= k) {
    StepWord word(up, Step::Up);
    word.insert(word.end(), down, Step::Down);
    return word;
  }
  return std::nullopt;
}

std::string to_string(const StepWord& w) {
  if (w.empty()) return "empty";
  std::string s;
  for (Step x : w) {
    if (!s.empty()) s += ' ';
    s += x == Step::Up ? "up" : x == Step::Down ? "down" : x == Step::Left ? "left" : "right";
  }
  return s;
}

bool structure_equivalent_d(const PlaneCTree& s, const PlaneCTree& s2, int d, std::uint64_t budget, TypeTable& tab) {
  if (d < 0) throw ValidationError("depth must be >= 0");
  std::uint64_t work = sat_pow_sum(s.size(), d);
  std::uint64_t work2 = sat_pow_sum(s2.size(), d);
  if (work == UINT64_MAX || work2 == UINT64_MAX || work + work2 > budget)
    throw BudgetExceeded("EF check at depth " + std::to_string(d) + " exceeds the budget of " + std::to_string(budget) +
                         " tuples");
  std::vector<NodeId> tup;
  Typer a(s, d, tab, kGlobal), b(s2, d, tab, kGlobal);
  TypeId x = a.global(tup, d);
  tup.clear();
  return x == b.global(tup, d);
}

bool hanf_predict(const PlaneCTree& s, const PlaneCTree& s2, int D, std::size_t gamma, TypeTable& tab) {
  if (D < 1 || gamma < 1) throw ValidationError("hanf_predict needs D >= 1 and gamma >= 1");
  auto c1 = type_census(s, D, std::nullopt, tab).counts;
  auto c2 = type_census(s2, D, std::nullopt, tab).counts;
  for (auto& [id, n] : c1) {
    std::size_t m = c2.count(id) ? c2[id] : 0;
    if (n != m && !(n >= gamma && m >= gamma)) return false;
  }
  for (auto& [id, m] : c2)
    if (!c1.count(id)) return false;
  return true;
}

double beta_bound(int d, int l) { return std::pow(10.0 * d + 12.0, d - l + 1); }

StoneMeasureEstimate estimate_stone_measures(const std::vector<PlaneCTree>& seq, int d, std::size_t threshold,
                                             TypeTable& tab) {
  if (seq.empty()) throw ValidationError("empty sequence");
  StoneMeasureEstimate est;
  est.depth = d;
  est.threshold = threshold;
  est.tail_begin = seq.size() / 2;
  est.tail_end = seq.size();
  std::vector<std::map<TypeId, std::size_t>> counts;
  for (std::size_t i = est.tail_begin; i < est.tail_end; ++i) counts.push_back(type_census(seq[i], d, std::nullopt, tab).counts);
  std::set<TypeId> all;
  for (auto& c : counts)
    for (auto& [id, n] : c) all.insert(id);
  const double last_n = static_cast<double>(seq.back().size());
  for (TypeId id : all) {
    TypeMeasure m;
    for (auto& c : counts) m.tail_counts.push_back(c.count(id) ? c.at(id) : 0);
    const auto& tc = m.tail_counts;
    bool constant = std::all_of(tc.begin(), tc.end(), [&](std::size_t x) { return x == tc[0]; });
    bool growing = tc.size() > 1;
    for (std::size_t i = 1; i < tc.size(); ++i) growing &= tc[i] > tc[i - 1];
    if (constant && tc.back() < threshold) {
      m.kind = NuKind::Finite;
      m.nu = tc.back();
    } else if (growing || tc.back() >= threshold) {
      m.kind = NuKind::Infinite;
    } else {
      m.kind = NuKind::Unstable;
    }
    m.mu = static_cast<double>(tc.back()) / last_n;
    est.types[id] = std::move(m);
  }
  return est;
}

}  // namespace folim
