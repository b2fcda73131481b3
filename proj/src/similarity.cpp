#include "folkweave/similarity.hpp"

#include <algorithm>
#include <set>

#include "folkweave/errors.hpp"

namespace folkweave {

namespace {

std::size_t shared_top_tags(const TagStats& a, const TagStats& b, int k) {
    std::vector<std::string> ta = a.top_k(static_cast<std::size_t>(k));
    std::vector<std::string> tb = b.top_k(static_cast<std::size_t>(k));
    std::set<std::string> sa(ta.begin(), ta.end());
    std::size_t n = 0;
    for (const auto& t : tb) n += sa.count(t);
    return n;
}

}  // namespace

NodeRef ref_of(const SaplingNode& n) { return NodeRef{&n.stem, &n.tags}; }

std::vector<NodeRef> refs_of(const std::vector<SaplingNode>& leaves) {
    std::vector<NodeRef> out;
    out.reserve(leaves.size());
    for (const auto& l : leaves) out.push_back(ref_of(l));
    return out;
}

double tag_sim(const TagStats& a, const TagStats& b, const Params& p) {
    std::size_t n = shared_top_tags(a, b, p.k_top_tags);
    if (n >= static_cast<std::size_t>(p.j_common_tags)) return 1.0;
    return static_cast<double>(n) / static_cast<double>(p.j_common_tags);
}

double local_sim(const std::string& stem_a, const TagStats& a, const std::string& stem_b,
                 const TagStats& b, const Params& p) {
    if (stem_a != stem_b)
        throw GateViolation("local_sim: stems differ ('" + stem_a + "' vs '" + stem_b + "')");
    return tag_sim(a, b, p);
}

StructSim struct_sim_rr(std::span<const NodeRef> leaves_a, std::span<const NodeRef> leaves_b,
                        const Params& p) {
    if (leaves_a.empty() || leaves_b.empty())
        throw GateViolation("struct_sim_rr: empty leaf set");
    std::set<std::string> stems_b;
    for (const NodeRef& l : leaves_b) stems_b.insert(*l.stem);

    StructSim out;
    out.z = static_cast<int>(std::min(leaves_a.size(), leaves_b.size()));
    TagStats rest_a, rest_b;
    std::set<std::string> matched;
    for (const NodeRef& l : leaves_a) {
        if (stems_b.count(*l.stem)) {
            ++out.matches;
            matched.insert(*l.stem);
        } else {
            rest_a.merge(*l.tags);
        }
    }
    for (const NodeRef& l : leaves_b)
        if (!matched.count(*l.stem)) rest_b.merge(*l.tags);

    out.common_leaves = static_cast<double>(out.matches) / static_cast<double>(out.z);
    out.tag_component = tag_sim(rest_a, rest_b, p);
    out.total = out.common_leaves + (1.0 - out.common_leaves) * out.tag_component;
    return out;
}

StructSim struct_sim_rr(const MergedSense& a, const MergedSense& b, const Params& p) {
    std::vector<NodeRef> ra = refs_of(a.leaves);
    std::vector<NodeRef> rb = refs_of(b.leaves);
    return struct_sim_rr(ra, rb, p);
}

std::optional<StructSim> struct_sim_lr(std::span<const NodeRef> parent_leaves,
                                       std::size_t leaf_index, const MergedSense& candidate,
                                       const Params& p) {
    if (leaf_index >= parent_leaves.size())
        throw GateViolation("struct_sim_lr: leaf index out of range");
    bool shortcut = false;
    for (std::size_t i = 0; i < parent_leaves.size() && !shortcut; ++i) {
        if (i == leaf_index) continue;
        shortcut = candidate.has_leaf(*parent_leaves[i].stem);
    }
    if (!shortcut) return std::nullopt;
    std::vector<NodeRef> rb = refs_of(candidate.leaves);
    return struct_sim_rr(parent_leaves, rb, p);
}

double node_sim(double local, std::optional<double> structural, double alpha) {
    if (!structural) return local;
    return (1.0 - alpha) * local + alpha * *structural;
}

double tag_sim_syn(const TagStats& a, const TagStats& b, const Params& p) {
    std::vector<std::string> ta = a.top_k(static_cast<std::size_t>(p.k_top_tags));
    std::vector<std::string> tb = b.top_k(static_cast<std::size_t>(p.k_top_tags));
    if (ta.empty() || tb.empty()) return 0.0;
    std::set<std::string> sa(ta.begin(), ta.end());
    std::size_t n = 0;
    for (const auto& t : tb) n += sa.count(t);
    return static_cast<double>(n) / static_cast<double>(std::min(ta.size(), tb.size()));
}

double struct_sim_syn(std::span<const NodeRef> leaves_a, std::span<const NodeRef> leaves_b) {
    if (leaves_a.empty() || leaves_b.empty()) return 0.0;
    std::set<std::string> stems_b;
    for (const NodeRef& l : leaves_b) stems_b.insert(*l.stem);
    int matches = 0;
    for (const NodeRef& l : leaves_a) matches += stems_b.count(*l.stem) ? 1 : 0;
    std::size_t z = std::min(leaves_a.size(), leaves_b.size());
    return static_cast<double>(matches) / static_cast<double>(z);
}

}  // namespace folkweave
