#include "folkweave/model.hpp"

#include <algorithm>

#include "folkweave/errors.hpp"

namespace folkweave {

namespace {

void check_node(const SaplingNode& n, const char* what) {
    if (n.stem.empty()) throw InvariantViolation(std::string(what) + ": empty stem");
}

void check_leaves_sorted_unique(const std::vector<SaplingNode>& leaves, const char* what) {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        check_node(leaves[i], what);
        if (i > 0 && !(leaves[i - 1].stem < leaves[i].stem))
            throw InvariantViolation(std::string(what) + ": leaf stems not sorted/unique at '" +
                                     leaves[i].stem + "'");
    }
}

}  // namespace

void Sapling::check() const {
    if (id.empty()) throw InvariantViolation("sapling: empty id");
    if (user.empty()) throw InvariantViolation("sapling: empty user");
    check_node(root, "sapling root");
    if (leaves.empty()) throw InvariantViolation("sapling '" + id + "': no leaves");
    check_leaves_sorted_unique(leaves, "sapling leaf");
    std::int64_t leaf_total = 0;
    for (const auto& l : leaves) leaf_total += l.tags.total();
    if (leaf_total != root.tags.total())
        throw InvariantViolation("sapling '" + id + "': root tag mass " +
                                 std::to_string(root.tags.total()) + " != leaf tag mass " +
                                 std::to_string(leaf_total));
}

MergedSense MergedSense::from_sapling(const Sapling& s) {
    MergedSense out;
    out.id = s.id;
    out.stem = s.root.stem;
    out.members = {s.id};
    out.root_tags = s.root.tags;
    out.leaves = s.leaves;
    out.users = {s.user};
    return out;
}

const SaplingNode* MergedSense::find_leaf(const std::string& leaf_stem) const {
    auto it = std::lower_bound(leaves.begin(), leaves.end(), leaf_stem,
                               [](const SaplingNode& n, const std::string& st) { return n.stem < st; });
    if (it == leaves.end() || it->stem != leaf_stem) return nullptr;
    return &*it;
}

void MergedSense::check() const {
    if (stem.empty()) throw InvariantViolation("sense: empty stem");
    if (members.empty()) throw InvariantViolation("sense '" + id + "': no members");
    if (!std::is_sorted(members.begin(), members.end()))
        throw InvariantViolation("sense '" + id + "': members not sorted");
    check_leaves_sorted_unique(leaves, "sense leaf");
}

void Params::check() const {
    if (k_top_tags < 1) throw RangeError("k_top_tags", "must be >= 1");
    if (j_common_tags < 1) throw RangeError("j_common_tags", "must be >= 1");
    if (j_common_tags > k_top_tags) throw RangeError("j_common_tags", "must be <= k_top_tags");
    if (alpha_rr < 0.0 || alpha_rr > 1.0) throw RangeError("alpha_rr", "must be in [0,1]");
    if (alpha_lr < 0.0 || alpha_lr > 1.0) throw RangeError("alpha_lr", "must be in [0,1]");
    if (beta < 0.0 || beta > 1.0) throw RangeError("beta", "must be in [0,1]");
    if (tau < 0.0 || tau > 1.0) throw RangeError("tau", "must be in [0,1]");
    if (tau_syn < 0.0 || tau_syn > 1.0) throw RangeError("tau_syn", "must be in [0,1]");
    if (max_depth < 1) throw RangeError("max_depth", "must be >= 1");
    if (noise_fraction < 0.0 || noise_fraction > 1.0)
        throw RangeError("noise_fraction", "must be in [0,1]");
    if (queue_size < 1) throw RangeError("queue_size", "must be >= 1");
    if (max_cluster_iters < 1) throw RangeError("max_cluster_iters", "must be >= 1");
}

}  // namespace folkweave
