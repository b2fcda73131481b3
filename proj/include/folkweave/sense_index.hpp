// SenseIndex: owns the sapling corpus, groups it by root stem and serves
// clustered senses on demand, caching results. Distinct stems can be
// preclustered in parallel; results are identical either way.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "folkweave/cluster.hpp"
#include "folkweave/model.hpp"

namespace folkweave {

class SenseIndex {
public:
    SenseIndex(std::vector<Sapling> corpus, Params params);

    bool has_stem(const std::string& stem) const { return by_stem_.count(stem) > 0; }
    std::size_t sapling_count() const { return corpus_.size(); }
    std::size_t stem_count() const { return by_stem_.size(); }
    const Params& params() const { return params_; }
    const TagCodebook& codebook() const { return codebook_; }

    // Clusters on first use; unknown stems yield an empty list.
    const std::vector<MergedSense>& senses(const std::string& stem);

    // Clusters the given stems with up to `threads` workers.
    void precluster(const std::vector<std::string>& stems, int threads);

    const ClusterStats& stats() const { return stats_; }

private:
    std::vector<MergedSense> cluster_stem(const std::string& stem, ClusterStats& stats) const;

    std::vector<Sapling> corpus_;
    Params params_;
    TagCodebook codebook_;
    std::map<std::string, std::vector<std::size_t>> by_stem_;  // indices into corpus_
    std::map<std::string, std::vector<MergedSense>> cache_;
    ClusterStats stats_;
    std::vector<MergedSense> empty_;
};

}  // namespace folkweave
