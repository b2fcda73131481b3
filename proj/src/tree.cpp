#include "folkweave/tree.hpp"

#include <algorithm>

#include "folkweave/errors.hpp"

namespace folkweave {

FolksonomyTree::FolksonomyTree(std::string root_stem, std::string raw_name, TagStats tags,
                               std::set<std::string> users) {
    if (root_stem.empty()) throw InvariantViolation("tree: empty root stem");
    TreeNode root;
    root.stem = std::move(root_stem);
    root.raw_name = std::move(raw_name);
    root.tags = std::move(tags);
    root.users = std::move(users);
    nodes_.push_back(std::move(root));
}

NodeId FolksonomyTree::add_child(NodeId parent, const std::string& stem,
                                 const std::string& raw_name, const TagStats& tags,
                                 const std::set<std::string>& users) {
    TreeNode& p = node(parent);
    if (!p.alive) throw GateViolation("add_child: parent is dead");
    if (stem.empty()) throw InvariantViolation("add_child: empty stem");
    TreeNode child;
    child.stem = stem;
    child.raw_name = raw_name;
    child.tags = tags;
    child.users = users;
    child.depth = p.depth + 1;
    child.parent = parent;
    NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(std::move(child));
    node(parent).children.push_back(id);
    return id;
}

void FolksonomyTree::remove_subtree(NodeId id) {
    if (id == root()) throw GateViolation("remove_subtree: cannot remove the root");
    TreeNode& n = node(id);
    if (!n.alive) return;
    TreeNode& p = node(n.parent);
    p.children.erase(std::remove(p.children.begin(), p.children.end(), id), p.children.end());
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
        NodeId cur = stack.back();
        stack.pop_back();
        TreeNode& c = node(cur);
        c.alive = false;
        for (NodeId ch : c.children) stack.push_back(ch);
    }
}

void FolksonomyTree::absorb(NodeId id, const TagStats& tags, const std::set<std::string>& users) {
    TreeNode& n = node(id);
    if (!n.alive) throw GateViolation("absorb: node is dead");
    n.tags.merge(tags);
    n.users.insert(users.begin(), users.end());
}

void FolksonomyTree::add_alias(NodeId id, const std::string& alias) {
    TreeNode& n = node(id);
    if (alias.empty()) throw InvariantViolation("add_alias: empty alias");
    if (alias != n.stem) n.aliases.insert(alias);
}

bool FolksonomyTree::stem_or_alias(const TreeNode& n, const std::string& stem) const {
    return n.stem == stem || n.aliases.count(stem) > 0;
}

NodeId FolksonomyTree::find_child(NodeId parent, const std::string& stem) const {
    for (NodeId ch : node(parent).children)
        if (stem_or_alias(node(ch), stem)) return ch;
    return kNoNode;
}

std::vector<NodeId> FolksonomyTree::path_to_root(NodeId id) const {
    std::vector<NodeId> out;
    NodeId cur = id;
    while (cur != kNoNode) {
        out.push_back(cur);
        if (out.size() > nodes_.size()) throw InvariantViolation("path_to_root: parent cycle");
        cur = node(cur).parent;
    }
    return out;
}

std::string FolksonomyTree::path_string(NodeId id) const {
    std::vector<NodeId> up = path_to_root(id);
    std::string out;
    for (auto it = up.rbegin(); it != up.rend(); ++it) {
        if (!out.empty()) out += '/';
        out += node(*it).stem;
    }
    return out;
}

std::vector<NodeId> FolksonomyTree::nodes_at_depth(int depth) const {
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].alive && nodes_[i].depth == depth) out.push_back(static_cast<NodeId>(i));
    return out;
}

std::vector<NodeId> FolksonomyTree::alive_nodes() const {
    std::vector<NodeId> out;
    std::vector<NodeId> stack{root()};
    while (!stack.empty()) {
        NodeId cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        const TreeNode& n = node(cur);
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::size_t FolksonomyTree::node_count() const { return alive_nodes().size(); }

int FolksonomyTree::deepest_level() const {
    int deepest = 0;
    for (NodeId id : alive_nodes()) deepest = std::max(deepest, node(id).depth);
    return deepest;
}

std::vector<std::size_t> FolksonomyTree::level_counts() const {
    std::vector<std::size_t> counts;
    for (NodeId id : alive_nodes()) {
        std::size_t d = static_cast<std::size_t>(node(id).depth);
        if (counts.size() <= d) counts.resize(d + 1, 0);
        ++counts[d];
    }
    return counts;
}

void FolksonomyTree::validate() const {
    if (nodes_.empty() || !nodes_[0].alive || nodes_[0].parent != kNoNode || nodes_[0].depth != 0)
        throw InvariantViolation("tree: malformed root");
    std::size_t seen = 0;
    // (node, names on the path above it) in DFS order.
    std::vector<std::pair<NodeId, std::set<std::string>>> stack;
    stack.push_back({root(), {}});
    while (!stack.empty()) {
        auto [id, above] = std::move(stack.back());
        stack.pop_back();
        ++seen;
        if (seen > nodes_.size()) throw InvariantViolation("tree: cycle detected");
        const TreeNode& n = node(id);
        if (!n.alive) throw InvariantViolation("tree: dead node reachable from root");
        if (id != root()) {
            const TreeNode& p = node(n.parent);
            if (!p.alive) throw InvariantViolation("tree: alive node under dead parent");
            if (n.depth != p.depth + 1) throw InvariantViolation("tree: depth mismatch");
            if (std::count(p.children.begin(), p.children.end(), id) != 1)
                throw InvariantViolation("tree: parent/child link mismatch");
        }
        std::set<std::string> names = n.aliases;
        names.insert(n.stem);
        for (const auto& name : names)
            if (above.count(name))
                throw InvariantViolation("tree: name '" + name + "' repeats along a path");
        std::set<std::string> below = above;
        below.insert(names.begin(), names.end());
        std::set<std::string> sibling_stems;
        for (NodeId ch : n.children) {
            if (!sibling_stems.insert(node(ch).stem).second)
                throw InvariantViolation("tree: duplicate sibling stem '" + node(ch).stem + "'");
            stack.push_back({ch, below});
        }
    }
}

}  // namespace folkweave
