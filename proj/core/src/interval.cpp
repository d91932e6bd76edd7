#include "folim/interval.hpp"

#include <algorithm>
#include <numeric>

#include "folim/error.hpp"

namespace folim {

AIntervalGraph pd_to_interval(const SimpleGraph& g, const PathDecomposition& p) {
  p.validate(g);
  const int n = static_cast<int>(g.n);
  AIntervalGraph h;
  const int width = static_cast<int>(p.width());
  for (int c = 1; c <= width + 1; ++c) h.palette.push_back(c);
  h.vertices.resize(n);
  for (int v = 0; v < n; ++v) h.vertices[v] = {g.label(v), -1, -1, 0};
  for (int i = 0; i < static_cast<int>(p.bags.size()); ++i)
    for (int v : p.bags[i]) {
      if (h.vertices[v].lo < 0) h.vertices[v].lo = i;
      h.vertices[v].hi = i + 1;
    }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(h.vertices[a].lo, h.vertices[a].id) < std::tie(h.vertices[b].lo, h.vertices[b].id);
  });
  std::vector<int> done;
  for (int v : order) {
    std::vector<char> taken(width + 2, 0);
    for (int u : done)
      if (h.intersects(u, v)) taken[h.vertices[u].color] = 1;
    int c = 1;
    while (taken[c]) ++c;
    if (c > width + 1) throw InternalError("greedy interval coloring exceeded width + 1");
    h.vertices[v].color = c;
    done.push_back(v);
  }
  h.edges = g.edges;
  h.validate();
  return h;
}

PathDecomposition interval_to_pd(const AIntervalGraph& h) {
  PathDecomposition p;
  if (h.vertices.empty()) return p;
  const int first = h.first_segment(), last = h.last_segment();
  for (int s = first; s <= last; ++s) {
    std::vector<int> bag;
    for (int v = 0; v < static_cast<int>(h.vertices.size()); ++v)
      if (h.vertices[v].lo <= s && s < h.vertices[v].hi) bag.push_back(v);
    p.bags.push_back(std::move(bag));
  }
  return p;
}

}  // namespace folim
