// Tree growth: starting from a seed sense, unlinked leaves are expanded
// level by level by attaching matching senses, with shortcut removal,
// mutual-shortcut arbitration, loop/synonym resolution and noise pruning
// applied along the way.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "folkweave/model.hpp"
#include "folkweave/sense_index.hpp"
#include "folkweave/tree.hpp"

namespace folkweave {

struct AttachDecision {
    enum class Action { attach, skip, defer, synonym };
    std::string leaf_path;
    Action action = Action::skip;
    double similarity = 0.0;
    std::vector<std::string> sense_ids;
};

struct GrowStats {
    int levels = 0;
    std::size_t leaves_examined = 0;
    std::size_t attaches = 0;
    std::size_t skips = 0;
    std::size_t pruned_leaves = 0;
    std::size_t shortcut_removals = 0;
    std::size_t mutual_shortcut_drops = 0;
    std::size_t loop_deletions = 0;
    std::size_t synonym_merges = 0;
    std::vector<double> level_ms;  // wall time spent expanding each depth
    std::vector<AttachDecision> decisions;
};

// Removes leaves whose user support is below max(2, ceil(noise_fraction *
// |sense users|)). Senses with a single user are left untouched.
MergedSense prune_noise(MergedSense sense, const Params& p, std::size_t* removed = nullptr);

// After `attached` has received children, drops any of its siblings whose
// stem duplicates one of the new children (the shallower copy of a shortcut
// edge). Returns the number of removed siblings.
std::size_t resolve_shortcut(FolksonomyTree& tree, NodeId attached);

struct LeafCandidate {
    NodeId leaf = kNoNode;
    MergedSense sense;
    double similarity = 0.0;
};

// Arbitration for sibling leaves whose senses each contain the other: only
// the one more similar to the shared parent keeps its subtree; the others
// are removed here and will reappear deeper via the winner.
std::vector<LeafCandidate> resolve_mutual_shortcuts(FolksonomyTree& tree, NodeId parent,
                                                    std::vector<LeafCandidate> candidates,
                                                    const Params& p, GrowStats* stats = nullptr);

// Resolves collisions between the sense's leaves and the stems/aliases on
// the path above `leaf`: a colliding leaf is deleted from the sense unless
// the sense passes the synonym check against the matched ancestor, in which
// case the whole sense folds into that ancestor (alias added, tags merged,
// remaining leaves re-attached there) and false is returned to signal that
// `leaf` itself was consumed.
bool handle_loop(FolksonomyTree& tree, NodeId leaf, MergedSense& sense, const Params& p,
                 GrowStats* stats = nullptr);

// Full growth loop. Throws SeedNotFound when the seed stem has no saplings.
FolksonomyTree grow_tree(const std::string& seed_stem, SenseIndex& index,
                         GrowStats* stats = nullptr);

}  // namespace folkweave
