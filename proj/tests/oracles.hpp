// Independent reference implementations used to cross-check the engine:
// an exhaustive greedy agglomerative clusterer (no blocking, no queue) and a
// brute-force path-enumeration scorer for the tree metrics. Both are written
// against the raw definitions, sharing no code with the library internals.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folkweave/eval.hpp"
#include "folkweave/model.hpp"
#include "folkweave/tree.hpp"

namespace oracles {

using Partition = std::set<std::vector<std::string>>;

// Greedy agglomerative clustering over all pairs: repeatedly merge the most
// similar pair above tau until none remains. Returns the partition of
// sapling ids (each block sorted).
Partition agglomerative_partition(const std::vector<folkweave::Sapling>& input,
                                  const folkweave::Params& p);

// Partition induced by a sense list, in the same canonical form.
Partition partition_of(const std::vector<folkweave::MergedSense>& senses);

struct MetricPair {
    std::optional<double> lexical_recall;
    std::optional<double> fmto;
};

// Recomputes lexical recall and the harmonic path-overlap score from
// scratch: full path enumeration through the reference, lexicographic
// learned-path choice, max-Jaccard reference-path choice.
MetricPair brute_force_metrics(const folkweave::FolksonomyTree& tree,
                               const folkweave::ReferenceTaxonomy& ref);

// Deterministic margin-separated clustering fixture: `groups` families of
// saplings (all one root stem) whose within-family similarity is >= tau+0.05
// and across-family similarity is <= tau-0.05 for every merge state, so any
// correct clusterer must produce exactly the family partition.
struct MarginFixture {
    std::vector<folkweave::Sapling> saplings;
    Partition expected;  // ids grouped by family
};

MarginFixture make_margin_fixture(std::uint64_t seed, int groups, int count);

}  // namespace oracles
