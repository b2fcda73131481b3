// Node similarity measures. Two nodes are only ever scored when their stems
// match (the equal-stem gate), so the local part reduces to tag overlap. The
// structural part compares leaf sets; in the leaf-vs-root case it is only
// defined when a shortcut (a shared sibling stem) exists.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folkweave/model.hpp"
#include "folkweave/tag_stats.hpp"

namespace folkweave {

// Non-owning (stem, tags) view used to compare leaf sets from saplings,
// senses and tree nodes uniformly.
struct NodeRef {
    const std::string* stem;
    const TagStats* tags;
};

NodeRef ref_of(const SaplingNode& n);
std::vector<NodeRef> refs_of(const std::vector<SaplingNode>& leaves);

struct StructSim {
    double common_leaves = 0.0;  // matched / min(|A|,|B|)
    int matches = 0;
    int z = 0;                   // min(|A|,|B|)
    double tag_component = 0.0;  // tag overlap of the non-matching remainders
    double total = 0.0;          // common_leaves + (1-common_leaves) * tag_component
};

// Fraction of the smaller top-k list's budget covered by shared top tags:
// 1 when the lists share at least j tags, n/j otherwise.
double tag_sim(const TagStats& a, const TagStats& b, const Params& p);

// Local similarity under the equal-stem gate: tag overlap when the stems
// match, GateViolation otherwise.
double local_sim(const std::string& stem_a, const TagStats& a, const std::string& stem_b,
                 const TagStats& b, const Params& p);

// Root-vs-root structural similarity over two leaf sets (each unique by
// stem). Either side empty -> GateViolation.
StructSim struct_sim_rr(std::span<const NodeRef> leaves_a, std::span<const NodeRef> leaves_b,
                        const Params& p);
StructSim struct_sim_rr(const MergedSense& a, const MergedSense& b, const Params& p);

// Leaf-vs-root structural similarity: defined only when one of the leaf's
// siblings shares a stem with the candidate's leaves (a shortcut). Returns
// nullopt when no shortcut exists; node_sim then falls back to local alone.
std::optional<StructSim> struct_sim_lr(std::span<const NodeRef> parent_leaves,
                                       std::size_t leaf_index, const MergedSense& candidate,
                                       const Params& p);

// Blend: (1-alpha)*local + alpha*structural, or plain local when the
// structural part is undefined.
double node_sim(double local, std::optional<double> structural, double alpha);

// Synonym-flavoured variants used for loop resolution between different
// stems: overlap of the top-k lists relative to the smaller list, and the
// common-leaves fraction alone.
double tag_sim_syn(const TagStats& a, const TagStats& b, const Params& p);
double struct_sim_syn(std::span<const NodeRef> leaves_a, std::span<const NodeRef> leaves_b);

}  // namespace folkweave
