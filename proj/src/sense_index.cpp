#include "folkweave/sense_index.hpp"

#include <future>

namespace folkweave {

SenseIndex::SenseIndex(std::vector<Sapling> corpus, Params params)
    : corpus_(std::move(corpus)), params_(std::move(params)) {
    params_.check();
    codebook_ = build_tag_codebook(corpus_);
    for (std::size_t i = 0; i < corpus_.size(); ++i)
        by_stem_[corpus_[i].root.stem].push_back(i);
}

std::vector<MergedSense> SenseIndex::cluster_stem(const std::string& stem,
                                                  ClusterStats& stats) const {
    auto it = by_stem_.find(stem);
    if (it == by_stem_.end()) return {};
    std::vector<Sapling> group;
    group.reserve(it->second.size());
    for (std::size_t idx : it->second) group.push_back(corpus_[idx]);
    return cluster_senses(group, params_, codebook_, &stats);
}

const std::vector<MergedSense>& SenseIndex::senses(const std::string& stem) {
    auto cached = cache_.find(stem);
    if (cached != cache_.end()) return cached->second;
    if (!has_stem(stem)) return empty_;
    auto result = cluster_stem(stem, stats_);
    return cache_.emplace(stem, std::move(result)).first->second;
}

void SenseIndex::precluster(const std::vector<std::string>& stems, int threads) {
    std::vector<std::string> todo;
    for (const auto& stem : stems)
        if (has_stem(stem) && !cache_.count(stem)) todo.push_back(stem);
    if (todo.empty()) return;

    if (threads <= 1 || todo.size() == 1) {
        for (const auto& stem : todo) senses(stem);
        return;
    }

    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), todo.size());
    std::vector<ClusterStats> worker_stats(workers);
    std::vector<std::vector<std::pair<std::string, std::vector<MergedSense>>>> results(workers);
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = w; i < todo.size(); i += workers)
                results[w].emplace_back(todo[i], cluster_stem(todo[i], worker_stats[w]));
        }));
    }
    for (auto& f : futures) f.get();
    for (std::size_t w = 0; w < workers; ++w) {
        stats_.passes += worker_stats[w].passes;
        stats_.comparisons += worker_stats[w].comparisons;
        stats_.merges += worker_stats[w].merges;
        for (auto& [stem, senses] : results[w]) cache_.emplace(stem, std::move(senses));
    }
}

}  // namespace folkweave
