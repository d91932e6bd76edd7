#include "folim/limit_sampler.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "folim/error.hpp"

namespace folim {
namespace {

std::string nu_str(const TypeNode& n) { return n.infinite ? "inf" : std::to_string(n.nu); }

std::string tid(TypeId id) { return "T" + std::to_string(id); }

}  // namespace

const TypeNode& TypeTree::at(TypeId id) const {
  auto it = types.find(id);
  if (it == types.end()) throw ValidationError("unknown type " + tid(id));
  return it->second;
}

std::vector<std::pair<TypeId, double>> TypeTree::infinite_types() const {
  std::vector<std::pair<TypeId, double>> out;
  for (auto& [id, n] : types)
    if (n.depth == depth && n.infinite && n.mu > 0) out.emplace_back(id, n.mu);
  return out;
}

TypeTree build_type_tree(const std::vector<StoneMeasureEstimate>& est, const PlaneCTree& reference,
                         std::size_t m_threshold, TypeTable& tab) {
  if (est.empty()) throw ValidationError("no estimates");
  TypeTree M;
  M.depth = static_cast<int>(est.size()) - 1;
  M.m_threshold = m_threshold;
  const auto& t = reference.tree;
  std::vector<std::vector<TypeId>> rt;
  for (int q = 0; q <= M.depth; ++q) {
    if (est[q].depth != q) throw ValidationError("estimate at position " + std::to_string(q) + " has depth " +
                                                 std::to_string(est[q].depth));
    rt.push_back(local_types(reference, q, tab));
  }

  for (int q = 0; q <= M.depth; ++q) {
    std::map<TypeId, std::size_t> refcount;
    for (TypeId id : rt[q]) ++refcount[id];
    for (auto& [id, tm] : est[q].types) {
      if (!refcount.count(id)) {
        if (tm.kind == NuKind::Unstable) {
          M.report.push_back("dropped unstable type " + tid(id) + " absent from the reference");
          continue;
        }
        throw ValidationError("reference structure lacks a node of type " + tid(id));
      }
      TypeNode n;
      n.id = id;
      n.depth = q;
      n.infinite = tm.kind != NuKind::Finite;
      n.nu = tm.nu;
      n.mu = tm.mu;
      if (tm.kind == NuKind::Unstable) M.report.push_back("type " + tid(id) + " has unstable counts; treated as inf");
      if (q > 0) n.refines = restrict_type(id, q - 1, tab);
      M.types[id] = n;
    }
    for (auto& [id, c] : refcount)
      if (!est[q].types.count(id)) throw ValidationError("reference type " + tid(id) + " missing from the estimate");
  }

  for (int q = 1; q <= M.depth; ++q) {
    std::map<TypeId, std::set<std::size_t>> mult;
    std::set<TypeId> seen;
    for (NodeId v = 0; v < static_cast<NodeId>(t.size()); ++v) {
      auto& n = M.types.at(rt[q][v]);
      NodeId p = t.parent(v), nx = t.next_sibling(v);
      bool root = p == kNoNode;
      std::optional<TypeId> pl = root ? std::nullopt : std::optional<TypeId>(rt[q - 1][p]);
      std::optional<TypeId> sl = nx == kNoNode ? std::nullopt : std::optional<TypeId>(rt[q - 1][nx]);
      if (seen.insert(n.id).second) {
        n.links_known = true;
        n.is_root = root;
        n.parent = pl;
        n.successor = sl;
      } else if (n.is_root != root || n.parent != pl || n.successor != sl) {
        M.report.push_back("links of " + tid(n.id) + " not determined by the type");
      }
      if (!root) {
        std::size_t c = 0;
        for (NodeId w : t.children(p)) c += rt[q][w] == n.id;
        mult[n.id].insert(c);
      }
    }
    for (auto& [id, counts] : mult) {
      auto& n = M.types.at(id);
      std::size_t mx = *counts.rbegin();
      n.m = mx >= m_threshold ? kInfinite : mx;
      if (counts.size() > 1 && n.m != kInfinite)
        M.report.push_back("child multiplicity of " + tid(id) + " varies across parents; using " + std::to_string(mx));
    }
  }

  for (auto& [i, v] : reference.constants)
    if (i <= M.depth) M.types.at(rt[M.depth][v]).constant = i;

  // Consistency at the truncation depth. A finite type linked to an
  // infinite one sits on the truncation frontier and is only noted.
  for (auto& [id, n] : M.types) {
    if (n.depth != M.depth || !n.links_known) continue;
    if (n.parent) {
      const auto& P = M.at(*n.parent);
      if (!n.infinite && P.infinite)
        M.report.push_back("frontier: finite " + tid(id) + " has infinite parent type " + tid(P.id));
      else if (!n.infinite && !P.infinite && (P.nu == 0 || n.nu % P.nu != 0))
        M.report.push_back("inconsistency: nu(" + tid(P.id) + ")=" + nu_str(P) + " does not divide nu(" + tid(id) +
                           ")=" + nu_str(n));
    }
    if (n.successor) {
      const auto& S = M.at(*n.successor);
      if (!n.infinite && S.infinite)
        M.report.push_back("frontier: finite " + tid(id) + " has infinite successor type " + tid(S.id));
      else if (n.infinite != S.infinite || n.nu != S.nu)
        M.report.push_back("inconsistency: nu(" + tid(id) + ")=" + nu_str(n) + " differs from successor nu(" +
                           tid(S.id) + ")=" + nu_str(S));
    }
    if (n.constant && (n.infinite || n.nu != 1))
      M.report.push_back("inconsistency: constant c" + std::to_string(*n.constant) + " type " + tid(id) +
                         " has nu=" + nu_str(n));
  }
  return M;
}

std::string to_string(const ModelingNode& n) {
  char buf[128];
  if (n.finite)
    std::snprintf(buf, sizeof buf, "Finite(T%u,%zu)", n.type, n.index);
  else
    std::snprintf(buf, sizeof buf, "Continuum(T%u,%016llx,%016llx,%016llx)", n.type,
                  static_cast<unsigned long long>(n.h), static_cast<unsigned long long>(n.s),
                  static_cast<unsigned long long>(n.t));
  return buf;
}

ModelingNode sample_node(const TypeTree& m, Rng& rng) {
  auto inf = m.infinite_types();
  if (inf.empty()) throw ValidationError("no type with infinite nu to sample from");
  double total = 0;
  for (auto& [id, mu] : inf) total += mu;
  double u = to_double(rng()) * total;
  ModelingNode n;
  n.type = inf.back().first;
  for (auto& [id, mu] : inf) {
    if (u < mu) {
      n.type = id;
      break;
    }
    u -= mu;
  }
  n.h = rng();
  n.s = rng();
  n.t = rng();
  return n;
}

ModelingNode sample_node(const TypeTree& m, std::uint64_t seed) {
  Rng rng(seed);
  return sample_node(m, rng);
}

std::optional<ModelingNode> constant_node(const TypeTree& m, int i) {
  for (auto& [id, n] : m.types)
    if (n.depth == m.depth && n.constant == i && !n.infinite && n.nu >= 1) return ModelingNode{true, id, 1};
  return std::nullopt;
}

namespace {

const TypeNode& checked(const TypeTree& m, const ModelingNode& n) {
  const auto& T = m.at(n.type);
  if (n.finite && (T.infinite || n.index < 1 || n.index > T.nu))
    throw ValidationError("malformed node " + to_string(n));
  if (!n.finite && !T.infinite) throw ValidationError("continuum node of finite type " + to_string(n));
  if (!T.links_known) throw TruncationBoundary("no links recorded for " + tid(T.id) + " at depth " + std::to_string(T.depth));
  return T;
}

}  // namespace

std::optional<ModelingNode> parent_of(const TypeTree& m, const ModelingNode& n) {
  const auto& T = checked(m, n);
  if (T.is_root || !T.parent) return std::nullopt;
  const auto& P = m.at(*T.parent);
  if (n.finite) {
    if (P.infinite) throw TruncationBoundary("finite " + tid(T.id) + " has infinite parent type at this depth");
    return ModelingNode{true, P.id, (n.index * P.nu + T.nu - 1) / T.nu};
  }
  if (!P.infinite) return ModelingNode{true, P.id, floor_times(n.t, P.nu) + 1};
  if (T.m != kInfinite) return ModelingNode{false, P.id, 0, rotate(n.h), scale_mod1(T.m, n.s), n.t};
  auto [z1, z2] = zeta(n.t);
  return ModelingNode{false, P.id, 0, rotate(n.h), z1, z2};
}

std::optional<ModelingNode> successor_of(const TypeTree& m, const ModelingNode& n) {
  const auto& T = checked(m, n);
  if (!T.successor) return std::nullopt;
  const auto& S = m.at(*T.successor);
  if (n.finite) {
    if (S.infinite) throw TruncationBoundary("finite " + tid(T.id) + " has infinite successor type at this depth");
    if (n.index > S.nu) throw ValidationError("successor type " + tid(S.id) + " has smaller nu");
    return ModelingNode{true, S.id, n.index};
  }
  if (!S.infinite) throw ValidationError("infinite " + tid(T.id) + " has finite successor type " + tid(S.id));
  bool finitary = T.parent && m.at(*T.parent).infinite && T.m != kInfinite;
  return ModelingNode{false, S.id, 0, n.h, finitary ? n.s : rotate(n.s), n.t};
}

std::map<TypeId, double> empirical_type_distribution(const TypeTree& m, int d_prime, std::size_t samples,
                                                     std::uint64_t seed, TypeTable& tab) {
  if (d_prime < 0 || d_prime >= m.depth) throw ValidationError("d' must lie below the truncation depth");
  if (samples == 0) throw ValidationError("samples must be positive");
  Rng rng(seed);
  std::map<TypeId, std::size_t> counts;
  std::map<TypeId, TypeId> cache;
  for (std::size_t i = 0; i < samples; ++i) {
    TypeId id = sample_node(m, rng).type;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, restrict_type(id, d_prime, tab)).first;
    ++counts[it->second];
  }
  std::map<TypeId, double> out;
  for (auto& [id, c] : counts) out[id] = static_cast<double>(c) / static_cast<double>(samples);
  return out;
}

bool h_orbit_collision(Frac h1, Frac h2, int r) {
  Frac diff = h2 - h1;
  for (int k = -r; k <= r; ++k)
    if (diff == static_cast<Frac>(static_cast<std::int64_t>(k)) * kSqrt2Frac) return true;
  return false;
}

}  // namespace folim
