#include "folim/pw_codec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "folim/error.hpp"

namespace folim {
namespace {

struct Iv {
  int v;  // vertex index in the original graph
  int lo, hi, color, id;
};

struct Sub {
  std::vector<std::vector<int>> ch{{}};
  std::vector<ColorTriple> col{ColorTriple{}};
  std::vector<int> assoc{-1};
};

bool has_edge(const std::set<std::pair<int, int>>& e, int a, int b) { return e.count({std::min(a, b), std::max(a, b)}) > 0; }

Sub encode(const std::vector<Iv>& g, const std::set<std::pair<int, int>>& edges, const std::vector<int>& palette,
           Rng* rng) {
  if (g.empty()) return Sub{};
  int first = g[0].lo;
  for (const auto& i : g) first = std::min(first, i.lo);
  std::vector<int> cand;
  int best_hi = -1;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    if (g[i].lo != first) continue;
    if (g[i].hi > best_hi) {
      best_hi = g[i].hi;
      cand.clear();
    }
    if (g[i].hi == best_hi) cand.push_back(i);
  }
  int pick = cand[0];
  if (rng) {
    pick = cand[uniform_below(*rng, cand.size())];
  } else {
    for (int c : cand)
      if (g[c].id < g[pick].id) pick = c;
  }
  const Iv v = g[pick];
  const int x = v.color;

  std::vector<Iv> g1, g2;
  std::set<int> in1, in2;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    if (i == pick) continue;
    Iv w = g[i];
    if (w.lo < v.hi) {
      g1.push_back({w.v, w.lo - v.lo, std::min(w.hi, v.hi) - v.lo, w.color, w.id});
      in1.insert(w.v);
    }
    if (w.hi > v.hi) {
      g2.push_back({w.v, std::max(w.lo, v.hi) - v.hi, w.hi - v.hi, w.color, w.id});
      in2.insert(w.v);
    }
  }
  std::set<std::pair<int, int>> e1, e2;
  for (auto [a, b] : edges) {
    if (in1.count(a) && in1.count(b))
      e1.insert({a, b});
    else if (in2.count(a) && in2.count(b))
      e2.insert({a, b});
  }
  std::vector<int> pal1;
  for (int a : palette)
    if (a != x) pal1.push_back(a);

  Sub t1 = encode(g1, e1, pal1, rng);
  Sub t2 = encode(g2, e2, palette, rng);

  t1.col[0] = ColorTriple{x, 0, 0};
  t1.assoc[0] = v.v;
  for (std::size_t u = 1; u < t1.col.size(); ++u) {
    int a = t1.assoc[u];
    if (has_edge(edges, a, v.v) && !(t1.col[u].Z & kLeftMark)) t1.col[u].X |= 1u << x;
    if (in2.count(a)) t1.col[u].Z |= kRightMark;
  }
  for (std::size_t u = 1; u < t2.col.size(); ++u)
    if (in1.count(t2.assoc[u])) t2.col[u].Z |= kLeftMark;

  // Graft t1 as the first child of t2's root.
  const int off = static_cast<int>(t2.ch.size());
  for (auto& kids : t1.ch)
    for (auto& c : kids) c += off;
  t2.ch[0].insert(t2.ch[0].begin(), off);
  t2.ch.insert(t2.ch.end(), t1.ch.begin(), t1.ch.end());
  t2.col.insert(t2.col.end(), t1.col.begin(), t1.col.end());
  t2.assoc.insert(t2.assoc.end(), t1.assoc.begin(), t1.assoc.end());
  return t2;
}

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

PwTree pw_encode(const AIntervalGraph& h, Rng* tie_rng) {
  h.validate();
  for (int a : h.palette)
    if (a < 0 || a > 30) throw ValidationError("palette colors must lie in 0..30");
  std::vector<Iv> g;
  for (int i = 0; i < static_cast<int>(h.vertices.size()); ++i) {
    const auto& w = h.vertices[i];
    g.push_back({i, w.lo, w.hi, w.color, w.id});
  }
  Sub s = encode(g, h.edges, h.palette, tie_rng);
  // Renumber in preorder so files and ids agree.
  PlaneTree raw = PlaneTree::from_children(std::vector<std::vector<NodeId>>(s.ch.begin(), s.ch.end()));
  std::vector<NodeId> map;
  PwTree t;
  t.tree = raw.renumbered_preorder(&map);
  t.color.resize(raw.size());
  t.assoc.resize(raw.size());
  for (std::size_t u = 0; u < raw.size(); ++u) {
    t.color[map[u]] = s.col[u];
    t.assoc[map[u]] = s.assoc[u];
  }
  t.palette = h.palette;
  return t;
}

std::vector<int> infer_palette(const PwTree& t) {
  std::set<int> p;
  for (NodeId u = 0; u < static_cast<NodeId>(t.tree.size()); ++u) {
    if (u == t.tree.root()) continue;
    p.insert(t.color[u].x);
    for (int b = 0; b < 32; ++b)
      if (t.color[u].X >> b & 1) p.insert(b);
  }
  return {p.begin(), p.end()};
}

void validate_pw_tree(const PwTree& t, const std::vector<int>& palette) {
  const PlaneTree& tr = t.tree;
  if (t.color.size() != tr.size()) throw DecodeError("color table size mismatch");
  std::uint32_t mask = 0;
  for (int a : palette) {
    if (a < 0 || a > 30) throw DecodeError("palette colors must lie in 0..30");
    mask |= 1u << a;
  }
  if (tr.height() > palette.size()) throw DecodeError("tree deeper than the palette size");
  for (NodeId u = 0; u < static_cast<NodeId>(tr.size()); ++u) {
    if (u == tr.root()) continue;
    const auto& c = t.color[u];
    if (c.x < 0 || c.x > 30 || !(mask >> c.x & 1)) throw DecodeError("node " + std::to_string(u) + " has x outside the palette");
    if (c.X & ~mask) throw DecodeError("node " + std::to_string(u) + " has X outside the palette");
    for (NodeId a = tr.parent(u); a != tr.root(); a = tr.parent(a))
      if (t.color[a].x == c.x) throw DecodeError("x repeats along a root path at node " + std::to_string(u));
  }
}

PwDecoded pw_decode_direct(const PwTree& t) {
  const PlaneTree& tr = t.tree;
  validate_pw_tree(t, infer_palette(t));
  const auto n = static_cast<NodeId>(tr.size());
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::vector<char> linked(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    if (u == tr.root() || !(t.color[u].Z & kRightMark)) continue;
    NodeId match = kNoNode;
    for (NodeId w = u; w != tr.root() && match == kNoNode; w = tr.parent(w)) {
      for (NodeId s = tr.next_sibling(w); s != kNoNode; s = tr.first_child(s)) {
        if ((t.color[s].Z & kLeftMark) && t.color[s].x == t.color[u].x) {
          if (match != kNoNode) throw DecodeError("ambiguous <- match for node " + std::to_string(u));
          match = s;
        }
      }
    }
    if (match == kNoNode) throw DecodeError("unmatched -> marker at node " + std::to_string(u));
    linked[match] = 1;
    uf[find(uf, u)] = find(uf, match);
  }
  for (NodeId u = 0; u < n; ++u)
    if (u != tr.root() && (t.color[u].Z & kLeftMark) && !linked[u])
      throw DecodeError("unmatched <- marker at node " + std::to_string(u));

  PwDecoded d;
  d.node_vertex.assign(n, -1);
  std::map<int, int> class_vertex;
  for (NodeId u : tr.preorder()) {
    if (u == tr.root() || (t.color[u].Z & kLeftMark)) continue;
    int c = find(uf, u);
    if (class_vertex.count(c)) throw DecodeError("two <--free nodes for one vertex (node " + std::to_string(u) + ")");
    class_vertex[c] = static_cast<int>(d.graph.labels.size());
    d.graph.labels.push_back(u);
  }
  d.graph.n = d.graph.labels.size();
  for (NodeId u = 0; u < n; ++u) {
    if (u == tr.root()) continue;
    auto it = class_vertex.find(find(uf, u));
    if (it == class_vertex.end()) throw DecodeError("node " + std::to_string(u) + " has no <--free representative");
    d.node_vertex[u] = it->second;
  }
  for (NodeId u = 0; u < n; ++u) {
    if (u == tr.root()) continue;
    for (NodeId a = tr.parent(u); a != tr.root(); a = tr.parent(a))
      if (t.color[u].X >> t.color[a].x & 1) {
        int p = d.node_vertex[u], q = d.node_vertex[a];
        if (p != q) d.graph.add_edge(p, q);
      }
  }
  return d;
}

std::size_t palette_color_count(std::size_t k) { return k << (k + 2); }

int triple_color(const ColorTriple& c, const std::vector<int>& palette) {
  const int k = static_cast<int>(palette.size());
  auto idx = [&](int a) {
    auto it = std::lower_bound(palette.begin(), palette.end(), a);
    if (it == palette.end() || *it != a) throw DecodeError("color " + std::to_string(a) + " outside the palette");
    return static_cast<int>(it - palette.begin());
  };
  int xs = 0;
  for (int b = 0; b < 32; ++b)
    if (c.X >> b & 1) xs |= 1 << idx(b);
  return 1 + ((((idx(c.x) << k) | xs) << 2) | static_cast<int>(c.Z));
}

PlaneCTree pw_colored_tree(const PwTree& t, const std::vector<int>& palette) {
  std::vector<int> colors(t.tree.size(), 0);
  for (NodeId u = 0; u < static_cast<NodeId>(t.tree.size()); ++u)
    if (u != t.tree.root()) colors[u] = triple_color(t.color[u], palette);
  return PlaneCTree(t.tree, {}, std::move(colors));
}

std::vector<std::string> check_pw_lemma(const AIntervalGraph& h, const PwTree& t) {
  std::vector<std::string> bad;
  const PlaneTree& tr = t.tree;
  const int nv = static_cast<int>(h.vertices.size());
  const std::size_t A = h.palette.size();
  std::vector<std::vector<NodeId>> nodes(nv);
  for (NodeId u = 0; u < static_cast<NodeId>(tr.size()); ++u)
    if (u != tr.root()) nodes.at(t.assoc[u]).push_back(u);
  if (tr.size() > A * static_cast<std::size_t>(nv) + 1)
    bad.push_back("size " + std::to_string(tr.size()) + " exceeds (p+1)|G|+1");
  if (tr.height() > A) bad.push_back("depth " + std::to_string(tr.height()) + " exceeds |A|");
  std::set<NodeId> spine;
  for (NodeId u = tr.first_child(tr.root()); u != kNoNode; u = tr.first_child(u)) spine.insert(u);
  const int first = nv ? h.first_segment() : 0, last = nv ? h.last_segment() : 0;
  for (int v = 0; v < nv; ++v) {
    const auto& iv = h.vertices[v];
    const std::string name = "vertex " + std::to_string(iv.id);
    if (iv.lo == first && (nodes[v].size() != 1 || !spine.count(nodes[v][0])))
      bad.push_back(name + ": first-segment vertex not a single first-child-path node");
    if (iv.hi - 1 == last && nodes[v].size() > A) bad.push_back(name + ": more than |A| nodes on the last segment");
    if (nodes[v].size() > A + 1) bad.push_back(name + ": more than |A|+1 nodes");
    if (nodes[v].empty()) bad.push_back(name + ": no node");
    std::size_t free = 0;
    for (NodeId u : nodes[v]) free += !(t.color[u].Z & kLeftMark);
    if (free != 1) bad.push_back(name + ": " + std::to_string(free) + " nodes without <-");
  }
  std::map<std::pair<int, int>, int> witnesses;
  for (NodeId u = 0; u < static_cast<NodeId>(tr.size()); ++u) {
    if (u == tr.root()) continue;
    for (NodeId a = tr.parent(u); a != tr.root(); a = tr.parent(a))
      if (t.color[u].X >> t.color[a].x & 1) {
        int p = t.assoc[u], q = t.assoc[a];
        ++witnesses[{std::min(p, q), std::max(p, q)}];
      }
  }
  for (auto [e, c] : witnesses)
    if (!h.edges.count(e)) bad.push_back("witness for a non-edge");
  for (auto e : h.edges) {
    auto it = witnesses.find(e);
    int c = it == witnesses.end() ? 0 : it->second;
    if (c != 1)
      bad.push_back("edge " + std::to_string(h.vertices[e.first].id) + "-" + std::to_string(h.vertices[e.second].id) + " has " +
                    std::to_string(c) + " witnesses");
  }
  return bad;
}

}  // namespace folim
