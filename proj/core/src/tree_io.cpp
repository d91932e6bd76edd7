#include "folim/tree_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "folim/error.hpp"
#include "folim/sexpr.hpp"

namespace folim {
namespace {

long long to_int(std::string_view s, std::string_view what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ValidationError("bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

ColorTriple parse_triple(std::string_view s) {
  auto a = s.find(':');
  auto b = a == std::string_view::npos ? a : s.find(':', a + 1);
  if (b == std::string_view::npos) throw ValidationError("ctriple must be x:X:Z");
  ColorTriple c;
  c.x = static_cast<int>(to_int(s.substr(0, a), "ctriple"));
  c.X = static_cast<std::uint32_t>(to_int(s.substr(a + 1, b - a - 1), "ctriple"));
  c.Z = static_cast<std::uint32_t>(to_int(s.substr(b + 1), "ctriple"));
  if (c.Z > 3) throw ValidationError("ctriple Z bits out of range");
  return c;
}

struct RawNode {
  long long id = 0;
  int color = 0;
  int constant = 0;
  bool has_triple = false;
  ColorTriple triple;
  std::vector<std::size_t> kids;  // indices into the raw node list
};

std::size_t collect(const SExpr& e, std::vector<RawNode>& out) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list)
    throw ValidationError("tree node must be (id attrs child*) at offset " + std::to_string(e.offset));
  std::size_t me = out.size();
  out.emplace_back();
  out[me].id = to_int(e.items[0].atom, "node id");
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& it = e.items[i];
    if (it.is_list) {
      std::size_t c = collect(it, out);
      out[me].kids.push_back(c);
      continue;
    }
    std::string_view a = it.atom;
    auto eq = a.find('=');
    if (eq == std::string_view::npos) throw ValidationError("unknown node attribute '" + std::string(a) + "'");
    auto key = a.substr(0, eq), val = a.substr(eq + 1);
    if (key == "color") {
      out[me].color = static_cast<int>(to_int(val, "color"));
      if (out[me].color < 0) throw ValidationError("negative color");
    } else if (key == "const") {
      out[me].constant = static_cast<int>(to_int(val, "const"));
      if (out[me].constant < 1) throw ValidationError("constant index must be >= 1");
    } else if (key == "ctriple") {
      out[me].has_triple = true;
      out[me].triple = parse_triple(val);
    } else {
      throw ValidationError("unknown node attribute '" + std::string(key) + "'");
    }
  }
  return me;
}

TreeDocument build_document(const std::vector<RawNode>& raw, bool dense_ids) {
  const std::size_t n = raw.size();
  std::vector<NodeId> idx(n);  // raw index -> node id
  if (dense_ids) {
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].id < 0 || static_cast<std::size_t>(raw[i].id) >= n)
        throw ValidationError("node id " + std::to_string(raw[i].id) + " outside 0.." + std::to_string(n - 1));
      if (seen[raw[i].id]) throw ValidationError("duplicate node id " + std::to_string(raw[i].id));
      seen[raw[i].id] = 1;
      idx[i] = static_cast<NodeId>(raw[i].id);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<NodeId>(i);  // raw order is preorder
  }
  std::vector<std::vector<NodeId>> ch(n);
  std::vector<int> colors(n, 0);
  bool any_color = false, any_triple = false;
  ConstantMap consts;
  std::vector<ColorTriple> triples(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeId v = idx[i];
    for (auto k : raw[i].kids) ch[v].push_back(idx[k]);
    colors[v] = raw[i].color;
    any_color |= raw[i].color != 0;
    if (raw[i].constant) {
      if (consts.count(raw[i].constant))
        throw ValidationError("constants not injective: c_" + std::to_string(raw[i].constant) + " assigned twice");
      consts[raw[i].constant] = v;
    }
    if (raw[i].has_triple) {
      any_triple = true;
      triples[v] = raw[i].triple;
    }
  }
  TreeDocument d;
  d.ctree = PlaneCTree(PlaneTree::from_children(std::move(ch)), std::move(consts),
                       any_color ? std::move(colors) : std::vector<int>{});
  if (any_triple) d.triples = std::move(triples);
  return d;
}

void write_node(std::ostringstream& os, const PlaneTree& t, NodeId v, const std::vector<NodeId>& num,
                const std::vector<int>& colors, const std::map<NodeId, int>& consts,
                const std::vector<ColorTriple>* triples, NodeId root, int indent) {
  os << std::string(indent, ' ') << '(' << num[v];
  if (!colors.empty() && colors[v] != 0) os << " color=" << colors[v];
  if (auto it = consts.find(v); it != consts.end()) os << " const=" << it->second;
  if (triples && v != root) {
    const ColorTriple& c = (*triples)[v];
    os << " ctriple=" << c.x << ':' << c.X << ':' << c.Z;
  }
  for (NodeId c : t.children(v)) {
    os << '\n';
    write_node(os, t, c, num, colors, consts, triples, root, indent + 1);
  }
  os << ')';
}

std::string write_tree(const PlaneTree& t, const std::vector<int>& colors, const ConstantMap& cm,
                       const std::vector<ColorTriple>* triples) {
  std::vector<NodeId> num;
  t.renumbered_preorder(&num);
  std::map<NodeId, int> consts;
  for (auto [i, v] : cm) consts[v] = i;
  std::ostringstream os;
  write_node(os, t, t.root(), num, colors, consts, triples, t.root(), 0);
  os << '\n';
  return os.str();
}

std::vector<std::vector<std::string>> split_lines(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string w; ls >> w;) toks.push_back(w);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

}  // namespace

TreeDocument read_tree_document(std::string_view text) {
  SExpr e = parse_sexpr(text);
  std::vector<RawNode> raw;
  collect(e, raw);
  return build_document(raw, true);
}

PlaneCTree read_ctree(std::string_view text) { return read_tree_document(text).ctree; }

PwTree read_pw_tree(std::string_view text) {
  TreeDocument d = read_tree_document(text);
  if (!d.ctree.constants.empty()) throw ValidationError("path-width trees carry no constants");
  PwTree t;
  t.tree = std::move(d.ctree.tree);
  t.color = d.triples.empty() ? std::vector<ColorTriple>(t.tree.size()) : std::move(d.triples);
  return t;
}

std::string write_ctree(const PlaneCTree& t) { return write_tree(t.tree, t.colors, t.constants, nullptr); }

std::string write_pw_tree(const PwTree& t) { return write_tree(t.tree, {}, {}, &t.color); }

ColoredPlaneForest read_forest(std::string_view text) {
  SExpr e = parse_sexpr(text);
  if (!e.is_list || e.items.empty() || !e.items[0].is_atom("forest"))
    throw ValidationError("forest file must start with (forest");
  ColoredPlaneForest f;
  int k = 0, max_color = 0;
  std::map<long long, int> ids;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& it = e.items[i];
    if (!it.is_list) {
      if (it.atom.rfind("k=", 0) != 0) throw ValidationError("unknown forest attribute '" + it.atom + "'");
      k = static_cast<int>(to_int(std::string_view(it.atom).substr(2), "k"));
      continue;
    }
    std::vector<RawNode> raw;
    collect(it, raw);
    for (const auto& r : raw) {
      if (r.constant || r.has_triple) throw ValidationError("forest nodes carry only color=");
      if (r.color < 1) throw ValidationError("forest node " + std::to_string(r.id) + " has no color");
      if (ids[r.id]++) throw ValidationError("duplicate node id " + std::to_string(r.id));
      max_color = std::max(max_color, r.color);
    }
    TreeDocument d = build_document(raw, false);
    f.trees.push_back(std::move(d.ctree.tree));
    f.colors.push_back(std::move(d.ctree.colors));
  }
  f.k = k > 0 ? k : std::max(1, max_color);
  f.validate();
  return f;
}

std::string write_forest(const ColoredPlaneForest& f) {
  std::ostringstream os;
  os << "(forest k=" << f.k;
  NodeId offset = 0;
  for (std::size_t j = 0; j < f.trees.size(); ++j) {
    std::vector<NodeId> num;
    f.trees[j].renumbered_preorder(&num);
    for (auto& x : num) x += offset;
    os << '\n';
    write_node(os, f.trees[j], f.trees[j].root(), num, f.colors[j], {}, nullptr, f.trees[j].root(), 1);
    offset += static_cast<NodeId>(f.trees[j].size());
  }
  os << ")\n";
  return os.str();
}

AIntervalGraph read_interval_graph(std::string_view text) {
  AIntervalGraph h;
  std::map<long long, int> index;
  std::vector<std::pair<long long, long long>> raw_edges;
  bool have_palette = false;
  for (const auto& t : split_lines(text)) {
    if (t[0] == "palette") {
      for (std::size_t i = 1; i < t.size(); ++i) h.palette.push_back(static_cast<int>(to_int(t[i], "palette")));
      std::sort(h.palette.begin(), h.palette.end());
      have_palette = true;
    } else if (t[0] == "v") {
      if (t.size() != 5) throw ValidationError("vertex line needs: v id lo hi color");
      IntervalVertex v{static_cast<int>(to_int(t[1], "v")), static_cast<int>(to_int(t[2], "v")),
                       static_cast<int>(to_int(t[3], "v")), static_cast<int>(to_int(t[4], "v"))};
      if (index.count(v.id)) throw ValidationError("duplicate vertex id " + t[1]);
      index[v.id] = static_cast<int>(h.vertices.size());
      h.vertices.push_back(v);
    } else if (t[0] == "e") {
      if (t.size() != 3) throw ValidationError("edge line needs: e id id");
      raw_edges.emplace_back(to_int(t[1], "e"), to_int(t[2], "e"));
    } else {
      throw ValidationError("unknown line kind '" + t[0] + "'");
    }
  }
  if (!have_palette) throw ValidationError("missing palette line");
  for (auto [a, b] : raw_edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) throw ValidationError("edge names unknown vertex");
    if (a == b) throw ValidationError("loop at vertex " + std::to_string(a));
    h.edges.emplace(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
  }
  h.validate();
  return h;
}

std::string write_interval_graph(const AIntervalGraph& h) {
  std::ostringstream os;
  os << "palette";
  for (int a : h.palette) os << ' ' << a;
  os << '\n';
  for (const auto& v : h.vertices) os << "v " << v.id << ' ' << v.lo << ' ' << v.hi << ' ' << v.color << '\n';
  for (auto [a, b] : h.edges) os << "e " << h.vertices[a].id << ' ' << h.vertices[b].id << '\n';
  return os.str();
}

SimpleGraph read_simple_graph(std::string_view text) {
  SimpleGraph g;
  std::vector<std::pair<long long, long long>> raw_edges;
  for (const auto& t : split_lines(text)) {
    if (t[0] == "v" && t.size() == 2) {
      int id = static_cast<int>(to_int(t[1], "v"));
      if (std::find(g.labels.begin(), g.labels.end(), id) != g.labels.end())
        throw ValidationError("duplicate vertex id " + t[1]);
      g.labels.push_back(id);
    } else if (t[0] == "e" && t.size() == 3) {
      raw_edges.emplace_back(to_int(t[1], "e"), to_int(t[2], "e"));
    } else {
      throw ValidationError("graph lines are 'v id' or 'e id id'");
    }
  }
  g.n = g.labels.size();
  for (auto [a, b] : raw_edges) g.add_edge(g.index_of(static_cast<int>(a)), g.index_of(static_cast<int>(b)));
  return g;
}

std::string write_simple_graph(const SimpleGraph& g) {
  std::ostringstream os;
  for (std::size_t v = 0; v < g.n; ++v) os << "v " << g.label(static_cast<int>(v)) << '\n';
  for (auto [a, b] : g.edges) os << "e " << g.label(a) << ' ' << g.label(b) << '\n';
  return os.str();
}

PathDecomposition read_path_decomposition(std::string_view text, const SimpleGraph& g) {
  PathDecomposition p;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<int> bag;
    bool any = false;
    for (std::string w; ls >> w;) {
      any = true;
      bag.push_back(g.index_of(static_cast<int>(to_int(w, "bag"))));
    }
    if (any) p.bags.push_back(std::move(bag));
  }
  p.validate(g);
  return p;
}

std::string write_path_decomposition(const PathDecomposition& p, const SimpleGraph& g) {
  std::ostringstream os;
  for (const auto& b : p.bags) {
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << g.label(b[i]);
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + p.string());
  out << content;
}

}  // namespace folim
