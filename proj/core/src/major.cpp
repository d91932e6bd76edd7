#include "folim/major.hpp"

#include <algorithm>
#include <sstream>

#include "folim/error.hpp"

namespace folim {

std::vector<NodeId> major_nodes(const PlaneTree& t, const Epsilon& eps) {
  if (eps <= 0 || eps > 1) throw ValidationError("epsilon must lie in (0, 1]");
  const auto n = static_cast<std::int64_t>(t.size());
  const auto sz = t.subtree_sizes();
  const std::int64_t p = eps.numerator(), q = eps.denominator();
  std::vector<NodeId> out;
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    std::int64_t a = 0, b = 0;  // two largest
    auto push = [&](std::int64_t x) {
      if (x > a) {
        b = a;
        a = x;
      } else if (x > b) {
        b = x;
      }
    };
    for (NodeId c : t.children(u)) push(static_cast<std::int64_t>(sz[c]));
    if (t.parent(u) != kNoNode) push(n - static_cast<std::int64_t>(sz[u]));
    if (q * (a + b) <= (q - p) * n) out.push_back(u);
  }
  return out;
}

std::int64_t major_bound(const Epsilon& eps) {
  const std::int64_t p = eps.numerator(), q = eps.denominator();
  return (q * q + p * p - 1) / (p * p);
}

MajorReport major_report(const PlaneTree& t, const Epsilon& eps) {
  MajorReport r;
  r.eps = eps;
  r.majors = major_nodes(t, eps);
  r.bound = major_bound(eps);
  const std::int64_t p = eps.numerator(), q = eps.denominator();
  r.pass = static_cast<std::int64_t>(r.majors.size()) * p * p <= q * q;
  return r;
}

bool verify_major_bound(const PlaneTree& t, const Epsilon& eps) { return major_report(t, eps).pass; }

std::size_t pruned_ball(const PlaneTree& t, const std::set<NodeId>& removed, NodeId v, std::size_t r) {
  if (removed.count(v)) throw ValidationError("ball center lies in the removed set");
  std::vector<NodeId> frontier{v}, next;
  std::set<NodeId> seen{v};
  for (std::size_t step = 0; step < r && !frontier.empty(); ++step) {
    next.clear();
    for (NodeId x : frontier) {
      auto visit = [&](NodeId y) {
        if (y != kNoNode && !removed.count(y) && seen.insert(y).second) next.push_back(y);
      };
      visit(t.parent(x));
      for (NodeId c : t.children(x)) visit(c);
    }
    std::swap(frontier, next);
  }
  return seen.size();
}

BallCheck check_major_neighborhood(const PlaneTree& t, const Epsilon& eps, std::size_t r) {
  auto majors = major_nodes(t, eps);
  std::vector<char> is_major(t.size(), 0);
  for (NodeId u : majors) is_major[u] = 1;
  // Component-wise BFS with a reusable distance array keeps this linear-ish.
  const auto n = static_cast<NodeId>(t.size());
  std::vector<int> stamp(n, -1);
  std::vector<std::pair<NodeId, std::size_t>> queue;
  BallCheck res;
  for (NodeId v = 0; v < n; ++v) {
    if (is_major[v]) continue;
    queue.assign(1, {v, 0});
    stamp[v] = v;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto [x, dist] = queue[h];
      if (dist == r) continue;
      auto visit = [&](NodeId y) {
        if (y != kNoNode && !is_major[y] && stamp[y] != v) {
          stamp[y] = v;
          queue.emplace_back(y, dist + 1);
        }
      };
      visit(t.parent(x));
      for (NodeId c : t.children(x)) visit(c);
    }
    res.worst = std::max(res.worst, queue.size());
  }
  const std::int64_t p = eps.numerator(), q = eps.denominator();
  const std::int64_t factor = (std::int64_t{1} << (r + 1)) + 1;
  res.pass = static_cast<std::int64_t>(res.worst) * q <= factor * p * static_cast<std::int64_t>(t.size());
  return res;
}

Annotation annotate_constants(const std::vector<PlaneTree>& seq, int stages) {
  if (stages < 0 || stages > 14) throw ValidationError("stages must be in 0..14");
  Annotation out;
  for (const PlaneTree& t : seq) {
    ConstantMap consts;
    std::vector<char> used(t.size(), 0);
    std::vector<int> skipped;
    const auto order = t.preorder();
    for (int k = 0; k <= stages && stages > 0; ++k) {
      const std::int64_t first = k == 0 ? 1 : (std::int64_t{1} << (2 * k - 1)) + 1;
      const std::int64_t last = std::int64_t{1} << (2 * k + 1);
      if (static_cast<std::int64_t>(t.size()) < last) {
        skipped.push_back(k);
        continue;
      }
      const Epsilon eps = k == 0 ? Epsilon(1) : stage_epsilon(k);
      std::int64_t next = first;
      for (NodeId u : major_nodes(t, eps)) {
        if (used[u]) continue;
        if (next > last) throw InternalError("more major nodes than constants in the stage block");
        consts[static_cast<int>(next++)] = u;
        used[u] = 1;
      }
      for (std::size_t i = 0; next <= last && i < order.size(); ++i) {
        if (used[order[i]]) continue;
        consts[static_cast<int>(next++)] = order[i];
        used[order[i]] = 1;
      }
    }
    out.trees.emplace_back(t, std::move(consts));
    out.skipped.push_back(std::move(skipped));
  }
  return out;
}

std::string major_csv(const std::vector<MajorReport>& reports) {
  std::ostringstream os;
  os << "tree_index,epsilon,major_count,bound,pass\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << i << ',' << r.eps.numerator() << '/' << r.eps.denominator() << ',' << r.majors.size() << ',' << r.bound
       << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace folim
