#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "folim/structures.hpp"

namespace folim {

using TypeId = std::uint32_t;
using TypeKey = std::vector<std::uint64_t>;

/// Hash-consing table for type fingerprints. Interning is atomic: equal keys
/// always receive the same id, also under concurrent use.
class TypeTable {
 public:
  TypeId intern(TypeKey key);
  TypeKey key(TypeId id) const;
  std::size_t size() const;
  /// Process-wide default table.
  static TypeTable& global();

 private:
  struct Hash {
    std::size_t operator()(const TypeKey& k) const noexcept;
  };
  mutable std::shared_mutex mu_;
  std::unordered_map<TypeKey, TypeId, Hash> ids_;
  std::vector<TypeKey> keys_;
};

/// Largest supported depth (tuple and constant bits must fit one word).
inline constexpr int kMaxTypeDepth = 6;

/// Local d-Hintikka type of v: atomic data of the pebbled tuple against
/// c_1..c_d plus the set of types of one-neighbor extensions, recursively.
TypeId local_type(const PlaneCTree& t, NodeId v, int d, TypeTable& tab = TypeTable::global());

/// Local types of all nodes.
std::vector<TypeId> local_types(const PlaneCTree& t, int d, TypeTable& tab = TypeTable::global());

/// Depth stored in a type id.
int type_depth(TypeId id, const TypeTable& tab = TypeTable::global());

/// The depth-q restriction of a local type (q <= its depth).
TypeId restrict_type(TypeId id, int q, TypeTable& tab = TypeTable::global());

/// Nested S-expression of the fingerprint recursion; stable across runs.
std::string dump_type(TypeId id, const TypeTable& tab = TypeTable::global());

struct TypeCensus {
  int depth = 0;
  std::map<TypeId, std::size_t> counts;
  std::optional<std::size_t> gamma;  // counts >= gamma are reported as ">= gamma"

  std::size_t total() const;
  bool truncated(TypeId id) const { return gamma && counts.at(id) >= *gamma; }
};

TypeCensus type_census(const PlaneCTree& t, int d, std::optional<std::size_t> gamma = std::nullopt,
                       TypeTable& tab = TypeTable::global());

/// CSV with header type_id,depth,count,truncated_flag.
std::string census_csv(const TypeCensus& c);

enum class Step { Up, Down, Left, Right };
using StepWord = std::vector<Step>;

/// Word of the shortest strongly canonical path from v to w of length <= k,
/// else of a weakly canonical one, else nullopt. up = to the parent;
/// left = to the next sibling.
std::optional<StepWord> k_position(const PlaneTree& t, NodeId v, NodeId w, std::size_t k);
std::string to_string(const StepWord& w);

/// Whether S and S' satisfy the same sentences of quantifier depth d
/// (constants c_1..c_d included). Throws BudgetExceeded when the recursion
/// would visit more than `budget` tuples.
bool structure_equivalent_d(const PlaneCTree& s, const PlaneCTree& s2, int d, std::uint64_t budget = 50'000'000,
                            TypeTable& tab = TypeTable::global());

/// True iff every depth-D local type occurs equally often in S and S', or
/// at least gamma times in both.
bool hanf_predict(const PlaneCTree& s, const PlaneCTree& s2, int D, std::size_t gamma,
                  TypeTable& tab = TypeTable::global());

/// (10d+12)^(d-l+1) as a double (inf on overflow). Documentation only.
double beta_bound(int d, int l);

enum class NuKind { Finite, Infinite, Unstable };

struct TypeMeasure {
  NuKind kind = NuKind::Finite;
  std::size_t nu = 0;  // common tail count when Finite
  double mu = 0;       // fraction in the last structure
  std::vector<std::size_t> tail_counts;
};

struct StoneMeasureEstimate {
  int depth = 0;
  std::size_t threshold = 0;
  std::size_t tail_begin = 0, tail_end = 0;  // sequence indices used
  std::map<TypeId, TypeMeasure> types;
};

/// ν̂/μ̂ over the tail half [floor(L/2), L) of the sequence.
StoneMeasureEstimate estimate_stone_measures(const std::vector<PlaneCTree>& seq, int d, std::size_t threshold,
                                             TypeTable& tab = TypeTable::global());

}  // namespace folim
