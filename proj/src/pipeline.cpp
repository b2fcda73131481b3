#include "folkweave/pipeline.hpp"

#include "folkweave/config.hpp"
#include "folkweave/errors.hpp"
#include "folkweave/eval.hpp"
#include "folkweave/grow.hpp"
#include "folkweave/ingest.hpp"
#include "folkweave/sense_index.hpp"
#include "folkweave/serialize.hpp"
#include "folkweave/synth.hpp"
#include "folkweave/tokenize.hpp"

namespace folkweave {

namespace {

using nlohmann::json;

Config load_opts(const CommonOptions& opts) {
    if (opts.config_path.empty()) return Config{};
    return load_config(opts.config_path);
}

Tokenizer make_tokenizer(const Config& cfg) {
    if (cfg.stoplist_path.empty()) return Tokenizer{};
    return Tokenizer::from_stoplist_file(cfg.stoplist_path);
}

json sense_to_json(const MergedSense& s) {
    json j;
    j["id"] = s.id;
    j["stem"] = s.stem;
    j["members"] = s.members;
    j["users"] = json::array();
    for (const auto& u : s.users) j["users"].push_back(u);
    j["leaves"] = json::array();
    for (const auto& l : s.leaves) {
        json jl;
        jl["stem"] = l.stem;
        jl["tag_total"] = l.tags.total();
        jl["users"] = l.users.size();
        j["leaves"].push_back(std::move(jl));
    }
    j["tag_total"] = s.root_tags.total();
    return j;
}

}  // namespace

json cmd_ingest(const std::string& input, const std::string& output, const CommonOptions& opts) {
    Config cfg = load_opts(opts);
    Tokenizer tok = make_tokenizer(cfg);
    IngestStats stats;
    std::vector<RawRecord> records = read_jsonl(input, stats);
    std::vector<Sapling> saplings = build_saplings(records, tok, &stats);
    save_saplings(output, saplings);
    json summary;
    summary["command"] = "ingest";
    summary["lines"] = stats.lines;
    summary["records"] = stats.records;
    summary["skipped_lines"] = stats.skipped_lines;
    summary["saplings"] = stats.saplings;
    summary["dropped_composite_roots"] = stats.dropped_composite_roots;
    summary["dropped_empty"] = stats.dropped_empty;
    summary["output"] = output;
    return summary;
}

json cmd_senses(const std::string& saplings_path, const std::string& stem,
                const std::string& output, const CommonOptions& opts) {
    Config cfg = load_opts(opts);
    SenseIndex index(load_saplings(saplings_path), cfg.params);
    const std::vector<MergedSense>& senses = index.senses(stem);
    json dump;
    dump["stem"] = stem;
    dump["senses"] = json::array();
    for (const auto& s : senses) dump["senses"].push_back(sense_to_json(s));
    if (!output.empty()) write_text_file(output, dump.dump(2) + "\n");

    json summary;
    summary["command"] = "senses";
    summary["stem"] = stem;
    summary["saplings"] = index.sapling_count();
    summary["senses"] = senses.size();
    summary["cluster_passes"] = index.stats().passes;
    summary["cluster_merges"] = index.stats().merges;
    if (output.empty()) summary["dump"] = std::move(dump);
    return summary;
}

json cmd_grow(const std::string& saplings_path, const std::string& seed,
              const std::string& output, const std::string& dot_output,
              const CommonOptions& opts) {
    Config cfg = load_opts(opts);
    SenseIndex index(load_saplings(saplings_path), cfg.params);
    std::string seed_stem = stem_term(seed);
    GrowStats stats;
    FolksonomyTree tree = grow_tree(seed_stem, index, &stats);
    save_tree(output, tree);
    if (!dot_output.empty()) write_text_file(dot_output, tree_to_dot(tree));

    json summary;
    summary["command"] = "grow";
    summary["seed"] = seed_stem;
    summary["nodes"] = tree.node_count();
    summary["depth"] = tree.deepest_level();
    summary["levels_expanded"] = stats.levels;
    summary["leaves_examined"] = stats.leaves_examined;
    summary["attaches"] = stats.attaches;
    summary["skips"] = stats.skips;
    summary["pruned_leaves"] = stats.pruned_leaves;
    summary["shortcut_removals"] = stats.shortcut_removals;
    summary["mutual_shortcut_drops"] = stats.mutual_shortcut_drops;
    summary["loop_deletions"] = stats.loop_deletions;
    summary["synonym_merges"] = stats.synonym_merges;
    summary["cluster_passes"] = index.stats().passes;
    summary["cluster_merges"] = index.stats().merges;
    summary["output"] = output;
    return summary;
}

json cmd_eval(const std::string& tree_path, const std::string& reference_path,
              const std::string& output) {
    FolksonomyTree tree = load_tree(tree_path);
    ReferenceTaxonomy ref = ReferenceTaxonomy::load_tsv(reference_path);
    Metrics m = compute_metrics(tree, ref);
    save_metrics(output, m);
    json summary = metrics_to_json(m);
    summary["command"] = "eval";
    summary["output"] = output;
    return summary;
}

json cmd_synth(const std::string& taxonomy_path, int users, const std::string& noise_path,
               std::uint64_t seed, const std::string& output) {
    ReferenceTaxonomy gt = ReferenceTaxonomy::load_tsv(taxonomy_path);
    NoiseSpec noise;
    if (!noise_path.empty()) noise = NoiseSpec::load(noise_path);
    std::vector<RawRecord> corpus = synth_corpus(gt, users, noise, seed);
    write_jsonl(output, corpus);
    json summary;
    summary["command"] = "synth";
    summary["users"] = users;
    summary["records"] = corpus.size();
    summary["seed"] = seed;
    summary["output"] = output;
    return summary;
}

}  // namespace folkweave
