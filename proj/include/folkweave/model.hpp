// Core value types: sapling fragments extracted from one user's collections,
// merged senses produced by clustering, and the tunable parameter set.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "folkweave/tag_stats.hpp"

namespace folkweave {

// One named node of a sapling: the surface form it was seen under, its
// normalized stem (the comparison key everywhere), accumulated tags, and the
// users whose data contributed to it.
struct SaplingNode {
    std::string raw_name;
    std::string stem;
    TagStats tags;
    std::set<std::string> users;
};

// A two-level root+leaves fragment mined from a single user's collection.
// Leaf stems are unique and sorted; root tags equal the sum of leaf tags.
struct Sapling {
    std::string id;
    std::string user;
    SaplingNode root;
    std::vector<SaplingNode> leaves;

    // Throws InvariantViolation when the structure is malformed.
    void check() const;
};

// A cluster of same-stem saplings that describe one sense of a term.
// Leaves are unique by stem and kept sorted by stem.
struct MergedSense {
    std::string id;
    std::string stem;
    std::vector<std::string> members;  // sapling ids, sorted
    TagStats root_tags;
    std::vector<SaplingNode> leaves;
    std::set<std::string> users;

    static MergedSense from_sapling(const Sapling& s);
    const SaplingNode* find_leaf(const std::string& stem) const;
    bool has_leaf(const std::string& stem) const { return find_leaf(stem) != nullptr; }

    void check() const;
};

// Tunables. Defaults follow the reference configuration; beta is kept for
// completeness but has no effect while the equal-stem gate is in force.
struct Params {
    int k_top_tags = 40;
    int j_common_tags = 4;
    double alpha_rr = 0.1;
    double alpha_lr = 0.8;
    double beta = 0.5;
    double tau = 0.5;
    double tau_syn = 0.6;
    int max_depth = 4;
    double noise_fraction = 0.01;
    int queue_size = 50;
    int max_cluster_iters = 10;

    // Throws RangeError naming the offending field.
    void check() const;
};

}  // namespace folkweave
