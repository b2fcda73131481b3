#include "folkweave/cluster.hpp"

#include <algorithm>
#include <deque>

#include "folkweave/errors.hpp"
#include "folkweave/similarity.hpp"

namespace folkweave {

TagCodebook build_tag_codebook(const std::vector<Sapling>& corpus) {
    std::map<std::string, std::int64_t> freq;
    for (const auto& s : corpus)
        for (const auto& [tag, n] : s.root.tags.entries()) freq[tag] += n;
    std::vector<std::pair<std::string, std::int64_t>> items(freq.begin(), freq.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    TagCodebook out;
    for (std::size_t i = 0; i < items.size(); ++i) out[items[i].first] = static_cast<int>(i);
    return out;
}

std::vector<int> block_key(const TagStats& tags, const TagCodebook& codebook, int width) {
    std::vector<int> codes;
    for (const auto& tag : tags.top_k(static_cast<std::size_t>(width))) {
        auto it = codebook.find(tag);
        if (it != codebook.end()) codes.push_back(it->second);
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

MergedSense merge_by_root(const MergedSense& a, const MergedSense& b) {
    if (a.stem != b.stem)
        throw GateViolation("merge_by_root: stems differ ('" + a.stem + "' vs '" + b.stem + "')");
    MergedSense out;
    out.id = a.id;
    out.stem = a.stem;
    out.members.reserve(a.members.size() + b.members.size());
    std::merge(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
               std::back_inserter(out.members));
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    out.root_tags = sum_tags(a.root_tags, b.root_tags);
    std::size_t i = 0, j = 0;
    while (i < a.leaves.size() || j < b.leaves.size()) {
        if (j == b.leaves.size() || (i < a.leaves.size() && a.leaves[i].stem < b.leaves[j].stem)) {
            out.leaves.push_back(a.leaves[i++]);
        } else if (i == a.leaves.size() || b.leaves[j].stem < a.leaves[i].stem) {
            out.leaves.push_back(b.leaves[j++]);
        } else {
            SaplingNode merged = a.leaves[i++];
            const SaplingNode& other = b.leaves[j++];
            merged.tags.merge(other.tags);
            merged.users.insert(other.users.begin(), other.users.end());
            out.leaves.push_back(std::move(merged));
        }
    }
    out.users = a.users;
    out.users.insert(b.users.begin(), b.users.end());
    return out;
}

namespace {

struct QueueEntry {
    MergedSense sense;
    std::vector<int> key;
};

// One bounded-queue scan over canonically ordered items. Each item either
// joins its best matching queued sense (which then moves to the queue head)
// or opens a new sense at the head; the least recently touched sense falls
// off the tail once the queue is full.
std::vector<MergedSense> scan_pass(std::vector<QueueEntry> items, const Params& p,
                                   ClusterStats* stats, std::size_t& merges) {
    std::sort(items.begin(), items.end(), [](const QueueEntry& a, const QueueEntry& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.sense.id < b.sense.id;
    });

    std::deque<MergedSense> queue;
    std::vector<MergedSense> closed;
    for (QueueEntry& item : items) {
        std::size_t best = queue.size();
        double best_sim = 0.0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const MergedSense& sense = queue[qi];
            if (stats) ++stats->comparisons;
            double local = local_sim(item.sense.stem, item.sense.root_tags, sense.stem,
                                     sense.root_tags, p);
            double structural = struct_sim_rr(item.sense, sense, p).total;
            double sim = node_sim(local, structural, p.alpha_rr);
            if (sim <= p.tau) continue;
            if (best == queue.size()) {
                best = qi;
                best_sim = sim;
                continue;
            }
            const MergedSense& incumbent = queue[best];
            bool better = sim > best_sim ||
                          (sim == best_sim &&
                           (sense.members.size() > incumbent.members.size() ||
                            (sense.members.size() == incumbent.members.size() &&
                             sense.id < incumbent.id)));
            if (better) {
                best = qi;
                best_sim = sim;
            }
        }
        if (best < queue.size()) {
            MergedSense winner = merge_by_root(queue[best], item.sense);
            queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
            queue.push_front(std::move(winner));
            ++merges;
        } else {
            queue.push_front(std::move(item.sense));
            if (queue.size() > static_cast<std::size_t>(p.queue_size)) {
                closed.push_back(std::move(queue.back()));
                queue.pop_back();
            }
        }
    }
    for (MergedSense& s : queue) closed.push_back(std::move(s));
    return closed;
}

}  // namespace

std::vector<MergedSense> cluster_senses(const std::vector<Sapling>& same_stem, const Params& p,
                                        const TagCodebook& codebook, ClusterStats* stats) {
    std::vector<MergedSense> current;
    current.reserve(same_stem.size());
    for (const auto& s : same_stem) {
        if (!current.empty() && current.front().stem != s.root.stem)
            throw GateViolation("cluster_senses: mixed stems ('" + current.front().stem +
                                "' vs '" + s.root.stem + "')");
        current.push_back(MergedSense::from_sapling(s));
    }
    if (current.empty()) return current;

    // Repeat the scan until a pass stops reducing the sense count; a first
    // pass that merges nothing still proves stability.
    for (int pass = 0; pass < p.max_cluster_iters; ++pass) {
        std::size_t before = current.size();
        std::vector<QueueEntry> items;
        items.reserve(current.size());
        for (MergedSense& s : current) {
            std::vector<int> key = block_key(s.root_tags, codebook);
            items.push_back(QueueEntry{std::move(s), std::move(key)});
        }
        std::size_t merges = 0;
        current = scan_pass(std::move(items), p, stats, merges);
        if (stats) {
            ++stats->passes;
            stats->merges += merges;
        }
        if (current.size() == before) break;
    }

    for (MergedSense& s : current) {
        std::sort(s.members.begin(), s.members.end());
        s.check();
    }
    std::sort(current.begin(), current.end(), [](const MergedSense& a, const MergedSense& b) {
        return a.members.front() < b.members.front();
    });
    return current;
}

}  // namespace folkweave
