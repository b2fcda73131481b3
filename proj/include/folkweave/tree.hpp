// FolksonomyTree: the deep tree assembled by iterative growth. Nodes live in
// a flat arena; removal marks subtrees dead instead of erasing, so NodeIds
// stay stable for the whole growth run.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "folkweave/tag_stats.hpp"

namespace folkweave {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

struct TreeNode {
    std::string stem;
    std::string raw_name;
    std::set<std::string> aliases;  // stems folded in by synonym merges
    TagStats tags;
    std::set<std::string> users;
    int depth = 0;
    NodeId parent = kNoNode;
    std::vector<NodeId> children;
    bool alive = true;
};

class FolksonomyTree {
public:
    FolksonomyTree(std::string root_stem, std::string raw_name, TagStats tags,
                   std::set<std::string> users);

    NodeId root() const { return 0; }
    const TreeNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    TreeNode& node(NodeId id) { return nodes_.at(static_cast<std::size_t>(id)); }

    NodeId add_child(NodeId parent, const std::string& stem, const std::string& raw_name,
                     const TagStats& tags, const std::set<std::string>& users);

    // Marks `id` and its descendants dead and detaches it from its parent.
    // The root cannot be removed.
    void remove_subtree(NodeId id);

    // Folds tags/users (and optionally an alias) into an existing node.
    void absorb(NodeId id, const TagStats& tags, const std::set<std::string>& users);
    void add_alias(NodeId id, const std::string& alias);

    // Child of `parent` whose stem or alias equals `stem`, or kNoNode.
    NodeId find_child(NodeId parent, const std::string& stem) const;

    // Node ids from `id` up to the root, inclusive.
    std::vector<NodeId> path_to_root(NodeId id) const;
    // Stems root..id joined with '/', for reporting.
    std::string path_string(NodeId id) const;

    std::vector<NodeId> nodes_at_depth(int depth) const;     // alive, ascending id
    std::vector<NodeId> alive_nodes() const;                 // preorder from root
    std::size_t node_count() const;                          // alive nodes
    int deepest_level() const;
    // Alive node count per depth, index 0 = root level.
    std::vector<std::size_t> level_counts() const;

    // Full structural audit; throws InvariantViolation on any breach.
    void validate() const;

private:
    bool stem_or_alias(const TreeNode& n, const std::string& stem) const;
    std::vector<TreeNode> nodes_;
};

}  // namespace folkweave
