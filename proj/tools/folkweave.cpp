// folkweave command line: ingest | senses | grow | eval | synth.
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "folkweave/errors.hpp"
#include "folkweave/pipeline.hpp"
#include "folkweave/serialize.hpp"

namespace {

void emit_summary(const nlohmann::json& summary, const std::string& summary_path) {
    std::cerr << summary.dump() << "\n";
    if (!summary_path.empty()) folkweave::write_text_file(summary_path, summary.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"folkweave: grow folksonomy trees from user tagging data"};
    app.require_subcommand(1);

    std::string summary_path;
    app.add_option("--summary", summary_path, "write the JSON run summary to this file too");

    folkweave::CommonOptions common;

    auto* ingest = app.add_subcommand("ingest", "read a JSONL corpus into a sapling store");
    std::string in_input, in_output;
    ingest->add_option("--input", in_input, "JSONL corpus")->required();
    ingest->add_option("--out", in_output, "sapling store to write")->required();
    ingest->add_option("--config", common.config_path, "key=value config file");

    auto* senses = app.add_subcommand("senses", "cluster and dump the senses of one stem");
    std::string se_saplings, se_stem, se_output;
    senses->add_option("--saplings", se_saplings, "sapling store")->required();
    senses->add_option("--stem", se_stem, "stem to cluster")->required();
    senses->add_option("--out", se_output, "write the sense dump here (default: summary)");
    senses->add_option("--config", common.config_path, "key=value config file");

    auto* grow = app.add_subcommand("grow", "grow a tree from a seed term");
    std::string gr_saplings, gr_seed, gr_output, gr_dot;
    grow->add_option("--saplings", gr_saplings, "sapling store")->required();
    grow->add_option("--seed", gr_seed, "seed term (normalized like ingest)")->required();
    grow->add_option("--out", gr_output, "tree JSON to write")->required();
    grow->add_option("--dot", gr_dot, "also write a DOT rendering");
    grow->add_option("--config", common.config_path, "key=value config file");

    auto* eval = app.add_subcommand("eval", "score a tree against a reference taxonomy");
    std::string ev_tree, ev_ref, ev_output;
    eval->add_option("--tree", ev_tree, "tree JSON")->required();
    eval->add_option("--reference", ev_ref, "reference TSV (parent<TAB>child)")->required();
    eval->add_option("--out", ev_output, "metrics JSON to write")->required();

    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus from a taxonomy");
    std::string sy_taxonomy, sy_noise, sy_output;
    int sy_users = 0;
    std::uint64_t sy_seed = 0;
    synth->add_option("--taxonomy", sy_taxonomy, "ground-truth TSV")->required();
    synth->add_option("--users", sy_users, "number of simulated users")->required();
    synth->add_option("--noise", sy_noise, "noise spec file (key=value)");
    synth->add_option("--seed", sy_seed, "rng seed")->required();
    synth->add_option("--out", sy_output, "JSONL corpus to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        nlohmann::json summary;
        if (*ingest) {
            summary = folkweave::cmd_ingest(in_input, in_output, common);
        } else if (*senses) {
            summary = folkweave::cmd_senses(se_saplings, se_stem, se_output, common);
        } else if (*grow) {
            summary = folkweave::cmd_grow(gr_saplings, gr_seed, gr_output, gr_dot, common);
        } else if (*eval) {
            summary = folkweave::cmd_eval(ev_tree, ev_ref, ev_output);
        } else if (*synth) {
            summary = folkweave::cmd_synth(sy_taxonomy, sy_users, sy_noise, sy_seed, sy_output);
        }
        emit_summary(summary, summary_path);
        return 0;
    } catch (const folkweave::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
