// Pipeline orchestration shared by the CLI and by tests: each function is
// one subcommand's work, file in / file out, returning a JSON summary.
// Errors surface as exceptions; the CLI maps them to exit codes.
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace folkweave {

struct CommonOptions {
    std::string config_path;  // empty -> defaults
};

nlohmann::json cmd_ingest(const std::string& input, const std::string& output,
                          const CommonOptions& opts);

nlohmann::json cmd_senses(const std::string& saplings_path, const std::string& stem,
                          const std::string& output, const CommonOptions& opts);

nlohmann::json cmd_grow(const std::string& saplings_path, const std::string& seed,
                        const std::string& output, const std::string& dot_output,
                        const CommonOptions& opts);

nlohmann::json cmd_eval(const std::string& tree_path, const std::string& reference_path,
                        const std::string& output);

nlohmann::json cmd_synth(const std::string& taxonomy_path, int users,
                         const std::string& noise_path, std::uint64_t seed,
                         const std::string& output);

}  // namespace folkweave
