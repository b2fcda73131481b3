#include "folkweave/config.hpp"

#include <fstream>
#include <sstream>

#include "folkweave/errors.hpp"

namespace folkweave {

namespace {

std::string trim(const std::string& s) {
    auto from = s.find_first_not_of(" \t\r");
    if (from == std::string::npos) return "";
    auto to = s.find_last_not_of(" \t\r");
    return s.substr(from, to - from + 1);
}

int parse_int(const std::string& key, const std::string& value, long line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer for '" + key + "': '" + value + "'", line_no);
    }
}

double parse_real(const std::string& key, const std::string& value, long line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad number for '" + key + "': '" + value + "'", line_no);
    }
}

}  // namespace

Config parse_config(std::istream& in) {
    Config cfg;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no);

        Params& p = cfg.params;
        if (key == "k_top_tags") p.k_top_tags = parse_int(key, value, line_no);
        else if (key == "j_common_tags") p.j_common_tags = parse_int(key, value, line_no);
        else if (key == "alpha_rr") p.alpha_rr = parse_real(key, value, line_no);
        else if (key == "alpha_lr") p.alpha_lr = parse_real(key, value, line_no);
        else if (key == "beta") p.beta = parse_real(key, value, line_no);
        else if (key == "tau") p.tau = parse_real(key, value, line_no);
        else if (key == "tau_syn") p.tau_syn = parse_real(key, value, line_no);
        else if (key == "max_depth") p.max_depth = parse_int(key, value, line_no);
        else if (key == "noise_fraction") p.noise_fraction = parse_real(key, value, line_no);
        else if (key == "queue_size") p.queue_size = parse_int(key, value, line_no);
        else if (key == "max_cluster_iters") p.max_cluster_iters = parse_int(key, value, line_no);
        else if (key == "stoplist") cfg.stoplist_path = value;
        else if (key == "codebook_cache") cfg.codebook_cache_path = value;
        else throw ParseError("unknown key '" + key + "'", line_no);
    }
    cfg.params.check();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace folkweave
