// On-disk formats: the versioned sapling store, tree JSON/DOT exports, and
// metrics JSON. All writers emit canonical forms (sorted keys, sorted
// children) so identical inputs produce identical bytes.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "folkweave/eval.hpp"
#include "folkweave/model.hpp"
#include "folkweave/tree.hpp"

namespace folkweave {

inline constexpr const char* kSaplingFormat = "folkweave.saplings";
inline constexpr int kSaplingVersion = 1;

void save_saplings(const std::string& path, const std::vector<Sapling>& saplings);
// Rejects files whose format tag or version differs from this build's.
std::vector<Sapling> load_saplings(const std::string& path);

nlohmann::json tree_to_json(const FolksonomyTree& tree);
std::string tree_to_dot(const FolksonomyTree& tree);
void save_tree(const std::string& path, const FolksonomyTree& tree);
// Rebuilds a tree (structure, aliases, users; tags are not persisted).
FolksonomyTree load_tree(const std::string& path);

nlohmann::json metrics_to_json(const Metrics& m);
void save_metrics(const std::string& path, const Metrics& m);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace folkweave
