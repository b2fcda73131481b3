// Synthetic corpus generation: simulated users tag a planted ground-truth
// taxonomy, with optional injection of the classic failure modes (homonyms,
// inverted relations, grandchild shortcuts, idiosyncratic leaves).
// Deterministic for a fixed (taxonomy, users, noise, seed) tuple.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folkweave/eval.hpp"
#include "folkweave/ingest.hpp"

namespace folkweave {

struct NoiseSpec {
    double invert_fraction = 0.0;         // child-over-parent saplings
    double shortcut_fraction = 0.0;       // grandchild sets under grandparents
    double idiosyncratic_fraction = 0.0;  // single-user junk leaves
    int homonym_count = 0;                // planted same-name foreign nodes

    // InputError on out-of-range values.
    void check() const;
    // Flat key=value file, same conventions as the main config.
    static NoiseSpec load(const std::string& path);
};

std::vector<RawRecord> synth_corpus(const ReferenceTaxonomy& ground_truth, int n_users,
                                    const NoiseSpec& noise, std::uint64_t rng_seed);

}  // namespace folkweave
