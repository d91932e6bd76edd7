#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "folim/structures.hpp"

namespace folim {

/// Everything a tree file can carry. Node ids in the file must be exactly
/// 0..n-1 and are kept; children keep file order.
struct TreeDocument {
  PlaneCTree ctree;
  std::vector<ColorTriple> triples;  // empty unless some node has ctriple=
};

TreeDocument read_tree_document(std::string_view text);
PlaneCTree read_ctree(std::string_view text);
PwTree read_pw_tree(std::string_view text);

/// Writes nodes renumbered in preorder.
std::string write_ctree(const PlaneCTree& t);
std::string write_pw_tree(const PwTree& t);

/// "(forest [k=K] tree+)". Ids must be distinct across the forest; each tree
/// is renumbered in preorder. k defaults to the largest color present.
ColoredPlaneForest read_forest(std::string_view text);
std::string write_forest(const ColoredPlaneForest& f);

/// Line format: "palette a1 a2 ...", "v id lo hi color", "e id id".
AIntervalGraph read_interval_graph(std::string_view text);
std::string write_interval_graph(const AIntervalGraph& h);

/// Line format: "v id" and "e id id".
SimpleGraph read_simple_graph(std::string_view text);
std::string write_simple_graph(const SimpleGraph& g);

/// One bag per line, whitespace-separated external vertex ids, resolved
/// through `g`.
PathDecomposition read_path_decomposition(std::string_view text, const SimpleGraph& g);
std::string write_path_decomposition(const PathDecomposition& p, const SimpleGraph& g);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view content);

}  // namespace folim
