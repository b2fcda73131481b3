// Flat key=value configuration for the engine parameters plus optional
// paths. Unknown keys are rejected; values are validated against the
// parameter bounds.
#pragma once

#include <iosfwd>
#include <string>

#include "folkweave/model.hpp"

namespace folkweave {

struct Config {
    Params params;
    std::string stoplist_path;
    std::string codebook_cache_path;
};

Config parse_config(std::istream& in);
// File must exist; an empty file yields all defaults.
Config load_config(const std::string& path);

}  // namespace folkweave
