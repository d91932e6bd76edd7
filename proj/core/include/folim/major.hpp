#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "folim/structures.hpp"

namespace folim {

using Epsilon = boost::rational<std::int64_t>;

/// Nodes u whose two largest components of T - u sum to at most (1-eps)|T|.
std::vector<NodeId> major_nodes(const PlaneTree& t, const Epsilon& eps);

/// ceil(eps^-2).
std::int64_t major_bound(const Epsilon& eps);

struct MajorReport {
  Epsilon eps;
  std::vector<NodeId> majors;
  std::int64_t bound = 0;
  bool pass = false;
};

MajorReport major_report(const PlaneTree& t, const Epsilon& eps);
/// |major_nodes(T, eps)| <= eps^-2.
bool verify_major_bound(const PlaneTree& t, const Epsilon& eps);

/// Nodes within distance r of v in T - U (parent edges). Throws
/// ValidationError when v is in U.
std::size_t pruned_ball(const PlaneTree& t, const std::set<NodeId>& removed, NodeId v, std::size_t r);

/// Largest pruned ball over all v outside major_nodes(T, eps), checked
/// against (2^(r+1)+1) eps |T|.
struct BallCheck {
  std::size_t worst = 0;
  bool pass = true;
};
BallCheck check_major_neighborhood(const PlaneTree& t, const Epsilon& eps, std::size_t r);

/// eps used at annotation stage k.
inline Epsilon stage_epsilon(int k) { return Epsilon(1, std::int64_t{1} << k); }

struct Annotation {
  std::vector<PlaneCTree> trees;
  /// skipped[i] lists the stages tree i was too small for.
  std::vector<std::vector<int>> skipped;
};

/// Runs stage 0 (block c_1..c_2, eps = 1) and stages k = 1..stages (block
/// c_{2^(2k-1)+1}..c_{2^(2k+1)}, eps = 2^-k). Each stage first places the
/// eps-major nodes that are not constants yet, then fills the rest of the
/// block in preorder. A stage needs 2^(2k+1) nodes; smaller trees skip it.
/// stages = 0 returns the trees without constants.
Annotation annotate_constants(const std::vector<PlaneTree>& seq, int stages);

/// CSV header tree_index,epsilon,major_count,bound,pass.
std::string major_csv(const std::vector<MajorReport>& reports);

}  // namespace folim
