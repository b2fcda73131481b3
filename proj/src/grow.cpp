#include "folkweave/grow.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "folkweave/errors.hpp"
#include "folkweave/similarity.hpp"

namespace folkweave {

namespace {

// (stem, tags) views of a node's alive children.
std::vector<NodeRef> child_refs(const FolksonomyTree& tree, NodeId parent) {
    std::vector<NodeRef> out;
    for (NodeId ch : tree.node(parent).children) {
        const TreeNode& n = tree.node(ch);
        out.push_back(NodeRef{&n.stem, &n.tags});
    }
    return out;
}

// Similarity of a candidate sense to an established tree node standing in as
// a root: local tag overlap blended with root-vs-root structure over the
// node's children, at the root-root alpha.
double sim_to_node(const FolksonomyTree& tree, NodeId node, const MergedSense& sense,
                   const Params& p) {
    double local = tag_sim(tree.node(node).tags, sense.root_tags, p);
    std::vector<NodeRef> ctx = child_refs(tree, node);
    if (ctx.empty() || sense.leaves.empty()) return local;
    double structural = struct_sim_rr(ctx, refs_of(sense.leaves), p).total;
    return node_sim(local, structural, p.alpha_rr);
}

int env_threads() {
    const char* raw = std::getenv("FOLKWEAVE_THREADS");
    if (!raw) return 1;
    char* end = nullptr;
    long n = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || n < 1) return 1;
    return static_cast<int>(n);
}

// Folds a synonym sense into the ancestor it matched: alias + tag/user
// merge, then the sense's surviving leaves become children of the ancestor
// (merged by stem with existing ones). Leaves colliding with the ancestor's
// own path are dropped rather than re-judged.
void fold_into_ancestor(FolksonomyTree& tree, NodeId target, MergedSense sense, const Params& p,
                        GrowStats* stats) {
    tree.add_alias(target, sense.stem);
    tree.absorb(target, sense.root_tags, sense.users);

    std::set<std::string> blocked;
    for (NodeId pn : tree.path_to_root(target)) {
        const TreeNode& n = tree.node(pn);
        blocked.insert(n.stem);
        blocked.insert(n.aliases.begin(), n.aliases.end());
    }
    if (tree.node(target).depth >= p.max_depth) return;
    for (const SaplingNode& l : sense.leaves) {
        if (blocked.count(l.stem)) {
            if (stats) ++stats->loop_deletions;
            continue;
        }
        NodeId existing = tree.find_child(target, l.stem);
        if (existing != kNoNode)
            tree.absorb(existing, l.tags, l.users);
        else
            tree.add_child(target, l.stem, l.raw_name, l.tags, l.users);
    }
}

class Grower {
public:
    Grower(SenseIndex& index, const Params& p, GrowStats* stats)
        : index_(index), p_(p), stats_(stats) {}

    FolksonomyTree run(const std::string& seed_stem) {
        MergedSense seed = pick_seed(seed_stem);
        std::size_t pruned = 0;
        seed = prune_noise(std::move(seed), p_, &pruned);
        note_pruned(pruned);

        FolksonomyTree tree(seed.stem, seed.stem, seed.root_tags, seed.users);
        for (const SaplingNode& leaf : seed.leaves) {
            if (leaf.stem == seed.stem) continue;  // self-reference adds nothing
            tree.add_child(tree.root(), leaf.stem, leaf.raw_name, leaf.tags, leaf.users);
        }

        std::set<NodeId> visited;
        for (int depth = 1; depth < p_.max_depth; ++depth) {
            auto started = std::chrono::steady_clock::now();
            // Synonym folds can drop fresh leaves at depths already swept,
            // so keep sweeping every unexpanded leaf at or above this depth
            // until none remain before moving deeper.
            bool worked = true;
            bool any = false;
            while (worked) {
                worked = false;
                std::vector<NodeId> frontier;
                for (int d = 1; d <= depth; ++d)
                    for (NodeId id : tree.nodes_at_depth(d))
                        if (tree.node(id).children.empty() && !visited.count(id))
                            frontier.push_back(id);
                if (frontier.empty()) break;
                std::sort(frontier.begin(), frontier.end(), [&](NodeId a, NodeId b) {
                    return tree.path_string(a) < tree.path_string(b);
                });
                expand_frontier(tree, frontier, visited);
                worked = true;
                any = true;
            }
            if (stats_) {
                std::chrono::duration<double, std::milli> el =
                    std::chrono::steady_clock::now() - started;
                stats_->level_ms.push_back(el.count());
                if (any) ++stats_->levels;
            }
        }
        tree.validate();
        return tree;
    }

private:
    MergedSense pick_seed(const std::string& seed_stem) {
        const std::vector<MergedSense>& senses = index_.senses(seed_stem);
        if (senses.empty()) throw SeedNotFound(seed_stem);
        const MergedSense* best = &senses[0];
        for (const MergedSense& s : senses) {
            if (s.users.size() > best->users.size() ||
                (s.users.size() == best->users.size() &&
                 (s.members.size() > best->members.size() ||
                  (s.members.size() == best->members.size() && s.id < best->id))))
                best = &s;
        }
        return *best;
    }

    void expand_frontier(FolksonomyTree& tree, const std::vector<NodeId>& frontier,
                         std::set<NodeId>& visited) {
        std::vector<std::string> stems;
        stems.reserve(frontier.size());
        for (NodeId id : frontier) stems.push_back(tree.node(id).stem);
        index_.precluster(stems, env_threads());

        // Gather candidates for the whole frontier before touching the
        // tree, so mutual shortcuts among siblings are arbitrated with full
        // knowledge.
        std::map<NodeId, std::vector<LeafCandidate>> by_parent;
        for (NodeId leaf : frontier) {
            visited.insert(leaf);
            if (stats_) ++stats_->leaves_examined;
            LeafCandidate cand = match_leaf(tree, leaf);
            if (cand.leaf == kNoNode) {
                if (stats_) {
                    ++stats_->skips;
                    stats_->decisions.push_back(AttachDecision{
                        tree.path_string(leaf), AttachDecision::Action::skip, 0.0, {}});
                }
                continue;
            }
            by_parent[tree.node(leaf).parent].push_back(std::move(cand));
        }

        std::vector<LeafCandidate> ready;
        for (auto& [parent, cands] : by_parent) {
            auto kept = resolve_mutual_shortcuts(tree, parent, std::move(cands), p_, stats_);
            for (auto& c : kept) ready.push_back(std::move(c));
        }
        std::sort(ready.begin(), ready.end(), [&](const LeafCandidate& a, const LeafCandidate& b) {
            return tree.path_string(a.leaf) < tree.path_string(b.leaf);
        });

        for (LeafCandidate& cand : ready) {
            if (!tree.node(cand.leaf).alive) {
                // Removed meanwhile by a sibling's shortcut resolution; the
                // branch will resurface deeper through that sibling.
                if (stats_)
                    stats_->decisions.push_back(AttachDecision{tree.path_string(cand.leaf),
                                                               AttachDecision::Action::defer,
                                                               cand.similarity,
                                                               {cand.sense.id}});
                continue;
            }
            attach(tree, cand);
        }
    }

    // Retrieves senses for the leaf's stem, scores each against the leaf,
    // and merges everything above tau into a single candidate.
    LeafCandidate match_leaf(FolksonomyTree& tree, NodeId leaf) {
        const std::vector<MergedSense>& senses = index_.senses(tree.node(leaf).stem);
        if (senses.empty()) return {};

        NodeId parent = tree.node(leaf).parent;
        const std::vector<NodeId>& kids = tree.node(parent).children;
        std::size_t leaf_index = static_cast<std::size_t>(
            std::find(kids.begin(), kids.end(), leaf) - kids.begin());
        std::vector<NodeRef> siblings = child_refs(tree, parent);

        std::vector<const MergedSense*> passing;
        double best_sim = 0.0;
        for (const MergedSense& sense : senses) {
            double local = tag_sim(tree.node(leaf).tags, sense.root_tags, p_);
            std::optional<StructSim> structural = struct_sim_lr(siblings, leaf_index, sense, p_);
            double sim = node_sim(
                local, structural ? std::optional<double>(structural->total) : std::nullopt,
                p_.alpha_lr);
            if (sim > p_.tau) {
                passing.push_back(&sense);
                best_sim = std::max(best_sim, sim);
            }
        }
        if (passing.empty()) return {};

        std::sort(passing.begin(), passing.end(),
                  [](const MergedSense* a, const MergedSense* b) { return a->id < b->id; });
        MergedSense merged = *passing[0];
        for (std::size_t i = 1; i < passing.size(); ++i)
            merged = merge_by_root(merged, *passing[i]);
        return LeafCandidate{leaf, std::move(merged), best_sim};
    }

    void attach(FolksonomyTree& tree, LeafCandidate& cand) {
        std::string path = tree.path_string(cand.leaf);
        std::vector<std::string> ids{cand.sense.id};

        std::size_t pruned = 0;
        cand.sense = prune_noise(std::move(cand.sense), p_, &pruned);
        note_pruned(pruned);

        if (!handle_loop(tree, cand.leaf, cand.sense, p_, stats_)) {
            if (stats_)
                stats_->decisions.push_back(AttachDecision{
                    path, AttachDecision::Action::synonym, cand.similarity, std::move(ids)});
            return;
        }

        NodeId leaf = cand.leaf;
        tree.absorb(leaf, cand.sense.root_tags, cand.sense.users);
        if (tree.node(leaf).depth < p_.max_depth) {
            for (const SaplingNode& l : cand.sense.leaves)
                tree.add_child(leaf, l.stem, l.raw_name, l.tags, l.users);
        }
        std::size_t cuts = resolve_shortcut(tree, leaf);
        if (stats_) {
            stats_->shortcut_removals += cuts;
            ++stats_->attaches;
            stats_->decisions.push_back(AttachDecision{path, AttachDecision::Action::attach,
                                                       cand.similarity, std::move(ids)});
        }
    }

    void note_pruned(std::size_t n) {
        if (stats_) stats_->pruned_leaves += n;
    }

    SenseIndex& index_;
    const Params& p_;
    GrowStats* stats_;
};

}  // namespace

MergedSense prune_noise(MergedSense sense, const Params& p, std::size_t* removed) {
    if (removed) *removed = 0;
    if (sense.users.size() <= 1) return sense;
    double cut =
        std::max(2.0, std::ceil(p.noise_fraction * static_cast<double>(sense.users.size())));
    std::vector<SaplingNode> kept;
    kept.reserve(sense.leaves.size());
    for (SaplingNode& leaf : sense.leaves) {
        if (static_cast<double>(leaf.users.size()) >= cut)
            kept.push_back(std::move(leaf));
        else if (removed)
            ++*removed;
    }
    sense.leaves = std::move(kept);
    return sense;
}

std::size_t resolve_shortcut(FolksonomyTree& tree, NodeId attached) {
    NodeId parent = tree.node(attached).parent;
    if (parent == kNoNode) return 0;
    std::set<std::string> child_stems;
    for (NodeId ch : tree.node(attached).children) child_stems.insert(tree.node(ch).stem);
    if (child_stems.empty()) return 0;
    std::vector<NodeId> doomed;
    for (NodeId sib : tree.node(parent).children) {
        if (sib == attached) continue;
        if (child_stems.count(tree.node(sib).stem)) doomed.push_back(sib);
    }
    for (NodeId sib : doomed) tree.remove_subtree(sib);
    return doomed.size();
}

std::vector<LeafCandidate> resolve_mutual_shortcuts(FolksonomyTree& tree, NodeId parent,
                                                    std::vector<LeafCandidate> candidates,
                                                    const Params& p, GrowStats* stats) {
    if (candidates.size() < 2) return candidates;

    // Rank by similarity to the shared parent; the better-matching side of
    // each mutual pair keeps its branch.
    std::vector<std::size_t> order(candidates.size());
    std::vector<double> parent_sim(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
        parent_sim[i] = sim_to_node(tree, parent, candidates[i].sense, p);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (parent_sim[a] != parent_sim[b]) return parent_sim[a] > parent_sim[b];
        return tree.node(candidates[a].leaf).stem < tree.node(candidates[b].leaf).stem;
    });

    std::vector<bool> dropped(candidates.size(), false);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        std::size_t w = order[oi];
        if (dropped[w]) continue;
        const std::string& w_stem = tree.node(candidates[w].leaf).stem;
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            std::size_t l = order[oj];
            if (dropped[l]) continue;
            const std::string& l_stem = tree.node(candidates[l].leaf).stem;
            if (candidates[w].sense.has_leaf(l_stem) && candidates[l].sense.has_leaf(w_stem)) {
                dropped[l] = true;
                tree.remove_subtree(candidates[l].leaf);
                if (stats) {
                    ++stats->mutual_shortcut_drops;
                    stats->decisions.push_back(AttachDecision{tree.path_string(candidates[l].leaf),
                                                              AttachDecision::Action::defer,
                                                              candidates[l].similarity,
                                                              {candidates[l].sense.id}});
                }
            }
        }
    }

    std::vector<LeafCandidate> kept;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (!dropped[i]) kept.push_back(std::move(candidates[i]));
    return kept;
}

bool handle_loop(FolksonomyTree& tree, NodeId leaf, MergedSense& sense, const Params& p,
                 GrowStats* stats) {
    std::vector<NodeId> path = tree.path_to_root(leaf);

    // Sense leaves echoing a name already on the path, in stem order (the
    // leaves are stem-sorted). A path holds each name at most once.
    std::vector<std::pair<std::string, NodeId>> collisions;
    for (const SaplingNode& l : sense.leaves) {
        for (NodeId pn : path) {
            const TreeNode& n = tree.node(pn);
            if (n.stem == l.stem || n.aliases.count(l.stem)) {
                collisions.emplace_back(l.stem, pn);
                break;
            }
        }
    }

    auto erase_leaf = [&](const std::string& stem) {
        auto it = std::find_if(sense.leaves.begin(), sense.leaves.end(),
                               [&](const SaplingNode& l) { return l.stem == stem; });
        if (it != sense.leaves.end()) sense.leaves.erase(it);
    };

    for (const auto& [stem, pn] : collisions) {
        if (pn == leaf) {
            // The sense repeats its own root term; drop the echo.
            erase_leaf(stem);
            if (stats) ++stats->loop_deletions;
            continue;
        }
        // Judge the synonym with the looping pair itself left out: the
        // offending leaf on the sense side, the branch toward the
        // attachment leaf on the ancestor side.
        const TreeNode& anc = tree.node(pn);
        NodeId branch_child = kNoNode;
        for (std::size_t i = 1; i < path.size(); ++i)
            if (path[i] == pn) branch_child = path[i - 1];
        std::vector<NodeRef> sense_side;
        for (const SaplingNode& l : sense.leaves)
            if (l.stem != stem) sense_side.push_back(ref_of(l));
        std::vector<NodeRef> anc_side;
        for (NodeId ch : anc.children) {
            if (ch == branch_child) continue;
            const TreeNode& n = tree.node(ch);
            anc_side.push_back(NodeRef{&n.stem, &n.tags});
        }
        double syn_local = tag_sim_syn(sense.root_tags, anc.tags, p);
        double syn_struct = struct_sim_syn(sense_side, anc_side);
        double sim = node_sim(syn_local, syn_struct, p.alpha_rr);
        if (sim > p.tau_syn) {
            erase_leaf(stem);
            tree.remove_subtree(leaf);  // its name now lives on as the ancestor's alias
            if (stats) ++stats->synonym_merges;
            fold_into_ancestor(tree, pn, std::move(sense), p, stats);
            return false;
        }
        erase_leaf(stem);
        if (stats) ++stats->loop_deletions;
    }
    return true;
}

FolksonomyTree grow_tree(const std::string& seed_stem, SenseIndex& index, GrowStats* stats) {
    Grower grower(index, index.params(), stats);
    return grower.run(seed_stem);
}

}  // namespace folkweave
