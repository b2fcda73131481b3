#include "folkweave/eval.hpp"

#include <algorithm>
#include <fstream>

#include "folkweave/errors.hpp"
#include "folkweave/tokenize.hpp"

namespace folkweave {

void ReferenceTaxonomy::add_edge(const std::string& parent, const std::string& child) {
    if (parent.empty() || child.empty())
        throw InputError("reference edge with empty endpoint");
    if (parent == child) throw InputError("reference self-edge at '" + parent + "'");
    nodes.insert(parent);
    nodes.insert(child);
    children[parent].push_back(child);
}

void ReferenceTaxonomy::finalize() {
    std::set<std::string> child_set;
    for (auto& [parent, kids] : children) {
        std::sort(kids.begin(), kids.end());
        kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        for (const auto& c : kids) child_set.insert(c);
    }
    roots.clear();
    for (const auto& n : nodes)
        if (!child_set.count(n)) roots.insert(n);

    // Kahn's algorithm; leftovers mean a cycle.
    std::map<std::string, int> indegree;
    for (const auto& n : nodes) indegree[n] = 0;
    for (const auto& [parent, kids] : children)
        for (const auto& c : kids) ++indegree[c];
    std::vector<std::string> queue(roots.begin(), roots.end());
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::string cur = std::move(queue.back());
        queue.pop_back();
        ++seen;
        auto it = children.find(cur);
        if (it == children.end()) continue;
        for (const auto& c : it->second)
            if (--indegree[c] == 0) queue.push_back(c);
    }
    if (seen != nodes.size()) throw InputError("reference taxonomy contains a cycle");
}

ReferenceTaxonomy ReferenceTaxonomy::load_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open reference file '" + path + "'");
    ReferenceTaxonomy ref;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("reference line has no tab separator", line_no);
        std::string parent = stem_term(line.substr(0, tab));
        std::string child = stem_term(line.substr(tab + 1));
        if (parent.empty() || child.empty())
            throw ParseError("reference line with empty endpoint", line_no);
        ref.add_edge(parent, child);
    }
    ref.finalize();
    return ref;
}

double aut(const FolksonomyTree& tree) {
    std::vector<std::size_t> levels = tree.level_counts();
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k)
        total += 0.5 * static_cast<double>(levels[k] + levels[k + 1]);
    return total;
}

namespace {

// All paths seed -> target in the reference, as stem sequences including
// both endpoints. The reference is acyclic, so plain DFS terminates.
void enumerate_paths(const ReferenceTaxonomy& ref, const std::string& cur,
                     const std::string& target, std::vector<std::string>& prefix,
                     std::vector<std::vector<std::string>>& out) {
    prefix.push_back(cur);
    if (cur == target) {
        out.push_back(prefix);
    } else {
        auto it = ref.children.find(cur);
        if (it != ref.children.end())
            for (const auto& c : it->second) enumerate_paths(ref, c, target, prefix, out);
    }
    prefix.pop_back();
}

// Learned-tree nodes that contributed stems to LC, i.e. depth-2 nodes plus
// stalled depth-1 nodes.
std::vector<NodeId> carve_nodes(const FolksonomyTree& tree) {
    std::vector<NodeId> out = tree.nodes_at_depth(2);
    for (NodeId id : tree.nodes_at_depth(1))
        if (tree.node(id).children.empty()) out.push_back(id);
    return out;
}

std::vector<std::string> learned_path_stems(const FolksonomyTree& tree, NodeId node) {
    std::vector<NodeId> up = tree.path_to_root(node);
    std::vector<std::string> stems;
    for (auto it = up.rbegin(); it != up.rend(); ++it) stems.push_back(tree.node(*it).stem);
    return stems;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::size_t inter = 0;
    for (const auto& x : a) inter += b.count(x);
    std::size_t uni = a.size() + b.size() - inter;
    if (uni == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

EvalSetup carve_reference(const FolksonomyTree& tree, const ReferenceTaxonomy& ref) {
    EvalSetup setup;
    setup.seed = tree.node(tree.root()).stem;
    if (!ref.has_node(setup.seed)) throw SeedNotInReference(setup.seed);
    for (NodeId id : carve_nodes(tree)) setup.leaf_candidates.insert(tree.node(id).stem);
    for (const auto& stem : setup.leaf_candidates) {
        if (!ref.has_node(stem)) continue;
        setup.matched.insert(stem);
        std::vector<std::vector<std::string>> paths;
        std::vector<std::string> prefix;
        enumerate_paths(ref, setup.seed, stem, prefix, paths);
        setup.reference_paths[stem] = std::move(paths);
    }
    return setup;
}

std::optional<double> lexical_recall(const FolksonomyTree& tree, const EvalSetup& setup) {
    std::set<std::string> ref_vocab;
    for (const auto& [stem, paths] : setup.reference_paths)
        for (const auto& path : paths) ref_vocab.insert(path.begin(), path.end());
    if (ref_vocab.empty()) return std::nullopt;

    std::set<std::string> tree_vocab;
    for (NodeId id : tree.alive_nodes()) {
        const TreeNode& n = tree.node(id);
        tree_vocab.insert(n.stem);
        tree_vocab.insert(n.aliases.begin(), n.aliases.end());
    }
    std::size_t hit = 0;
    for (const auto& stem : ref_vocab) hit += tree_vocab.count(stem);
    return static_cast<double>(hit) / static_cast<double>(ref_vocab.size());
}

std::optional<double> fmto(const FolksonomyTree& tree, const EvalSetup& setup) {
    // Lexicographically smallest learned path per carved stem.
    std::map<std::string, std::vector<std::string>> learned;
    for (NodeId id : carve_nodes(tree)) {
        std::vector<std::string> path = learned_path_stems(tree, id);
        const std::string& stem = tree.node(id).stem;
        auto [it, inserted] = learned.emplace(stem, path);
        if (!inserted && path < it->second) it->second = path;
    }

    double lr_sum = 0.0, rl_sum = 0.0;
    std::size_t compared = 0;
    for (const auto& stem : setup.matched) {
        auto ref_it = setup.reference_paths.find(stem);
        if (ref_it == setup.reference_paths.end() || ref_it->second.empty()) continue;
        auto learn_it = learned.find(stem);
        if (learn_it == learned.end()) continue;
        std::set<std::string> pl(learn_it->second.begin(), learn_it->second.end());

        const std::vector<std::string>* best = nullptr;
        double best_j = -1.0;
        for (const auto& candidate : ref_it->second) {
            std::set<std::string> pr(candidate.begin(), candidate.end());
            double j = jaccard(pl, pr);
            if (j > best_j || (j == best_j && best && candidate < *best)) {
                best_j = j;
                best = &candidate;
            }
        }
        std::set<std::string> pr(best->begin(), best->end());
        std::size_t inter = 0;
        for (const auto& x : pl) inter += pr.count(x);
        lr_sum += static_cast<double>(inter) / static_cast<double>(pl.size());
        rl_sum += static_cast<double>(inter) / static_cast<double>(pr.size());
        ++compared;
    }
    if (compared == 0) return std::nullopt;
    double mto_lr = lr_sum / static_cast<double>(compared);
    double mto_rl = rl_sum / static_cast<double>(compared);
    if (mto_lr + mto_rl == 0.0) return 0.0;
    return 2.0 * mto_lr * mto_rl / (mto_lr + mto_rl);
}

Metrics compute_metrics(const FolksonomyTree& tree, const ReferenceTaxonomy& ref) {
    EvalSetup setup = carve_reference(tree, ref);
    Metrics m;
    m.leaves = setup.leaf_candidates.size();
    m.aut = aut(tree);
    m.overlap_leaves = setup.matched.size();
    m.lexical_recall = lexical_recall(tree, setup);
    m.fmto = fmto(tree, setup);

    std::size_t leaf_nodes = 0;
    std::size_t depth_sum = 0;
    for (NodeId id : tree.alive_nodes()) {
        if (!tree.node(id).children.empty()) continue;
        ++leaf_nodes;
        depth_sum += static_cast<std::size_t>(tree.node(id).depth);
    }
    m.avg_depth = leaf_nodes == 0 ? 0.0
                                  : static_cast<double>(depth_sum) / static_cast<double>(leaf_nodes);
    return m;
}

}  // namespace folkweave
