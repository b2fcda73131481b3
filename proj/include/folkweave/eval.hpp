// Tree quality metrics against a reference taxonomy: area under the tree
// (level-count trapezoids), lexical recall of the carved reference
// vocabulary, and fmTO, a harmonic mean of directional path overlaps.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folkweave/tree.hpp"

namespace folkweave {

// Parent->children edges over normalized stems. Loaded from TSV
// ("parent<TAB>child" per line, '#' comments); names are normalized with the
// same stemming as ingest.
struct ReferenceTaxonomy {
    std::set<std::string> nodes;
    std::map<std::string, std::vector<std::string>> children;  // sorted, unique
    std::set<std::string> roots;

    void add_edge(const std::string& parent, const std::string& child);
    // Sorts child lists and verifies acyclicity; InputError on a cycle.
    void finalize();
    bool has_node(const std::string& stem) const { return nodes.count(stem) > 0; }

    static ReferenceTaxonomy load_tsv(const std::string& path);
};

// The carved comparison frame for one learned tree: the tree's comparison
// leaves (grandchildren of the seed plus children whose expansion stalled),
// the subset known to the reference, and every reference path from the seed
// to each known leaf.
struct EvalSetup {
    std::string seed;
    std::set<std::string> leaf_candidates;
    std::set<std::string> matched;
    std::map<std::string, std::vector<std::vector<std::string>>> reference_paths;
};

// Sum of level-count trapezoids: 0.5 * (n_k + n_{k+1}) over consecutive
// depths. A single-level tree scores 0.
double aut(const FolksonomyTree& tree);

// Throws SeedNotInReference when the tree's root stem is unknown.
EvalSetup carve_reference(const FolksonomyTree& tree, const ReferenceTaxonomy& ref);

// Fraction of the reference-path vocabulary present in the tree (stems and
// aliases both count as recovered). nullopt when the reference is empty.
std::optional<double> lexical_recall(const FolksonomyTree& tree, const EvalSetup& setup);

// For each matched leaf, the learned root path is compared with the
// reference path of highest Jaccard overlap; the two directional means are
// combined harmonically. nullopt when no leaf has a reference path.
std::optional<double> fmto(const FolksonomyTree& tree, const EvalSetup& setup);

struct Metrics {
    std::size_t leaves = 0;          // |LC|
    double aut = 0.0;
    std::size_t overlap_leaves = 0;  // |LCD|
    std::optional<double> lexical_recall;
    std::optional<double> fmto;
    double avg_depth = 0.0;          // mean depth of childless nodes
};

Metrics compute_metrics(const FolksonomyTree& tree, const ReferenceTaxonomy& ref);

}  // namespace folkweave
