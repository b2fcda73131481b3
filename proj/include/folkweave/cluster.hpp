// Sense clustering: saplings with the same root stem are grouped into senses
// by a bounded-queue scan over a canonical ordering, so near-duplicates meet
// without quadratic comparisons. Repeated passes run until the sense count
// stops changing.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "folkweave/model.hpp"

namespace folkweave {

// Global tag codebook: ids assigned by descending corpus frequency, ties
// broken lexicographically; id 0 is the most frequent tag.
using TagCodebook = std::map<std::string, int>;

TagCodebook build_tag_codebook(const std::vector<Sapling>& corpus);

inline constexpr int kBlockKeyWidth = 5;

// Sort key: ascending codebook ids of the node's most frequent tags.
// Unknown tags are skipped; fewer than `width` known tags is fine.
std::vector<int> block_key(const TagStats& tags, const TagCodebook& codebook,
                           int width = kBlockKeyWidth);

// Merges b into a copy of a. Stems must match; member lists are unioned,
// tags summed, same-stem leaves combined. The result keeps a's id.
MergedSense merge_by_root(const MergedSense& a, const MergedSense& b);

struct ClusterStats {
    int passes = 0;
    std::size_t comparisons = 0;
    std::size_t merges = 0;
};

// Clusters same-stem saplings into senses. Output is independent of input
// order and sorted by smallest member id. Throws GateViolation when the
// input mixes stems.
std::vector<MergedSense> cluster_senses(const std::vector<Sapling>& same_stem, const Params& p,
                                        const TagCodebook& codebook,
                                        ClusterStats* stats = nullptr);

}  // namespace folkweave
