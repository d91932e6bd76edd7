#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folim/fixed_point.hpp"
#include "folim/hintikka.hpp"
#include "folim/rng.hpp"
#include "folim/structures.hpp"

namespace folim {

inline constexpr std::size_t kInfinite = SIZE_MAX;

struct TypeNode {
  TypeId id = 0;
  int depth = 0;
  bool infinite = false;  // unstable estimates count as infinite
  std::size_t nu = 0;     // when finite
  double mu = 0;
  std::optional<TypeId> refines;  // depth-1 restriction; none at depth 0
  bool is_root = false;           // reference nodes of this type are roots
  // Links to depth-1 types; unset at depth 0 (truncation boundary).
  std::optional<TypeId> parent;
  std::optional<TypeId> successor;
  bool links_known = false;
  std::size_t m = 0;  // children of this type per parent; kInfinite above threshold
  std::optional<int> constant;  // c_i realized by this type
};

class TypeTree {
 public:
  int depth = 0;
  std::size_t m_threshold = 0;
  std::map<TypeId, TypeNode> types;
  std::vector<std::string> report;  // estimate inconsistencies and notes

  const TypeNode& at(TypeId id) const;
  /// Depth-d types with infinite ν and their μ.
  std::vector<std::pair<TypeId, double>> infinite_types() const;
};

/// `est[q]` is the estimate at depth q for q = 0..d, all from one sequence;
/// `reference` is its last structure.
TypeTree build_type_tree(const std::vector<StoneMeasureEstimate>& est, const PlaneCTree& reference,
                         std::size_t m_threshold, TypeTable& tab = TypeTable::global());

struct ModelingNode {
  bool finite = false;
  TypeId type = 0;
  std::size_t index = 0;  // 1-based, finite nodes
  Frac h = 0, s = 0, t = 0;
  bool operator==(const ModelingNode&) const = default;
};

std::string to_string(const ModelingNode& n);

/// Continuum node with type drawn from μ on the infinite depth-d types.
ModelingNode sample_node(const TypeTree& m, Rng& rng);
ModelingNode sample_node(const TypeTree& m, std::uint64_t seed);

/// Finite node (Ψ, 1) of the type realizing c_i, if any.
std::optional<ModelingNode> constant_node(const TypeTree& m, int i);

/// nullopt means "none" (root / no successor). Throws TruncationBoundary
/// when the type has no recorded links.
std::optional<ModelingNode> parent_of(const TypeTree& m, const ModelingNode& n);
std::optional<ModelingNode> successor_of(const TypeTree& m, const ModelingNode& n);

/// Frequencies of depth-d' restrictions of sampled types.
std::map<TypeId, double> empirical_type_distribution(const TypeTree& m, int d_prime, std::size_t samples,
                                                     std::uint64_t seed, TypeTable& tab = TypeTable::global());

/// Whether h2 - h1 = k * sqrt(2) mod 1 for some |k| <= r.
bool h_orbit_collision(Frac h1, Frac h2, int r);

}  // namespace folim
