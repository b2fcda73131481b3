#include "folkweave/synth.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <set>

#include "folkweave/errors.hpp"

namespace folkweave {

namespace {

// Uniform draws mapped from the raw engine by hand so the byte stream never
// depends on the standard library's distribution implementations.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr double kCollectionCoverage = 0.8;  // user describes an internal node
constexpr double kSetCoverage = 0.9;         // child appears as a set
constexpr int kVocabSize = 8;                // own tags per node
constexpr double kHomonymCoverage = 0.4;     // user describes a planted homonym

std::string zero_pad(std::uint64_t n, int width) {
    std::string digits = std::to_string(n);
    if (static_cast<int>(digits.size()) < width)
        digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
    return digits;
}

// Stable breadth-first order over the taxonomy: sorted roots, then sorted
// children.
std::vector<std::string> topo_nodes(const ReferenceTaxonomy& gt) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    std::vector<std::string> frontier(gt.roots.begin(), gt.roots.end());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const std::string cur = frontier[i];
        if (!seen.insert(cur).second) continue;
        order.push_back(cur);
        auto it = gt.children.find(cur);
        if (it == gt.children.end()) continue;
        for (const auto& c : it->second) frontier.push_back(c);
    }
    return order;
}

std::map<std::string, std::int64_t> own_tags(const std::string& node, const std::string& prefix) {
    std::map<std::string, std::int64_t> out;
    for (int i = 0; i < kVocabSize; ++i) out[prefix + node + ".t" + std::to_string(i)] = 1;
    return out;
}

struct Homonym {
    std::string stem;  // duplicated name
    std::string host;  // foreign parent it is planted under
};

}  // namespace

void NoiseSpec::check() const {
    auto fraction = [](double v, const char* name) {
        if (v < 0.0 || v > 1.0)
            throw InputError(std::string("noise field '") + name + "' must be in [0,1]");
    };
    fraction(invert_fraction, "invert_fraction");
    fraction(shortcut_fraction, "shortcut_fraction");
    fraction(idiosyncratic_fraction, "idiosyncratic_fraction");
    if (homonym_count < 0) throw InputError("noise field 'homonym_count' must be >= 0");
}

NoiseSpec NoiseSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open noise file '" + path + "'");
    NoiseSpec spec;
    std::string line;
    long line_no = 0;
    auto trim = [](std::string s) {
        auto from = s.find_first_not_of(" \t");
        auto to = s.find_last_not_of(" \t");
        if (from == std::string::npos) return std::string();
        return s.substr(from, to - from + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            std::size_t used = 0;
            if (key == "invert_fraction") {
                spec.invert_fraction = std::stod(value, &used);
            } else if (key == "shortcut_fraction") {
                spec.shortcut_fraction = std::stod(value, &used);
            } else if (key == "idiosyncratic_fraction") {
                spec.idiosyncratic_fraction = std::stod(value, &used);
            } else if (key == "homonym_count") {
                spec.homonym_count = std::stoi(value, &used);
            } else {
                throw ParseError("unknown noise key '" + key + "'", line_no);
            }
            if (used != value.size()) throw ParseError("trailing junk after value", line_no);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad value for '" + key + "'", line_no);
        }
    }
    spec.check();
    return spec;
}

std::vector<RawRecord> synth_corpus(const ReferenceTaxonomy& ground_truth, int n_users,
                                    const NoiseSpec& noise, std::uint64_t rng_seed) {
    noise.check();
    if (n_users < 1) throw InputError("n_users must be >= 1");

    std::vector<std::string> nodes = topo_nodes(ground_truth);
    std::vector<std::string> internal;
    for (const auto& n : nodes)
        if (ground_truth.children.count(n)) internal.push_back(n);
    if (internal.empty()) throw InputError("ground truth has no internal nodes");

    std::map<std::string, std::string> parent_of;
    for (const auto& [p, kids] : ground_truth.children)
        for (const auto& c : kids) parent_of.emplace(c, p);

    std::mt19937_64 rng(rng_seed);

    // Plant homonyms: an existing non-root name re-used under an unrelated
    // internal host with its own disjoint vocabulary and children.
    std::vector<Homonym> homonyms;
    {
        std::vector<std::string> candidates;
        for (const auto& n : nodes)
            if (parent_of.count(n)) candidates.push_back(n);
        for (int h = 0; h < noise.homonym_count && !candidates.empty(); ++h) {
            const std::string stem = candidates[next_below(rng, candidates.size())];
            // Hosts: internal nodes outside the stem's own ancestry line.
            std::set<std::string> ancestry{stem};
            for (auto it = parent_of.find(stem); it != parent_of.end();
                 it = parent_of.find(it->second))
                ancestry.insert(it->second);
            std::vector<std::string> hosts;
            for (const auto& n : internal)
                if (!ancestry.count(n)) hosts.push_back(n);
            if (hosts.empty()) continue;
            homonyms.push_back(Homonym{stem, hosts[next_below(rng, hosts.size())]});
        }
    }

    std::vector<RawRecord> out;
    int pad = static_cast<int>(std::to_string(n_users).size());
    for (int u = 0; u < n_users; ++u) {
        std::string user = "u" + zero_pad(static_cast<std::uint64_t>(u), pad);
        std::uint64_t junk_counter = 0;
        for (const auto& node : internal) {
            if (next_unit(rng) >= kCollectionCoverage) continue;
            const std::vector<std::string>& kids = ground_truth.children.at(node);

            RawRecord rec;
            rec.user = user;
            rec.collection = node;
            for (const auto& child : kids) {
                if (next_unit(rng) >= kSetCoverage) continue;
                RawSet set;
                set.name = child;
                set.tags = own_tags(child, "");
                for (auto& [tag, n] : own_tags(node, "")) set.tags[tag] = n;
                rec.sets.push_back(std::move(set));
            }
            for (const Homonym& h : homonyms) {
                if (h.host != node) continue;
                if (next_unit(rng) >= kSetCoverage) continue;
                RawSet set;
                set.name = h.stem;
                set.tags = own_tags(h.stem, "hom.");
                for (auto& [tag, n] : own_tags(node, "")) set.tags[tag] = n;
                rec.sets.push_back(std::move(set));
            }
            if (noise.shortcut_fraction > 0.0 && next_unit(rng) < noise.shortcut_fraction) {
                // A set that skips one level: a random grandchild directly
                // under this node.
                std::vector<std::string> grandchildren;
                for (const auto& child : kids) {
                    auto it = ground_truth.children.find(child);
                    if (it == ground_truth.children.end()) continue;
                    grandchildren.insert(grandchildren.end(), it->second.begin(),
                                         it->second.end());
                }
                if (!grandchildren.empty()) {
                    const std::string& gc = grandchildren[next_below(rng, grandchildren.size())];
                    RawSet set;
                    set.name = gc;
                    set.tags = own_tags(gc, "");
                    for (auto& [tag, n] : own_tags(node, "")) set.tags[tag] = n;
                    rec.sets.push_back(std::move(set));
                }
            }
            if (noise.idiosyncratic_fraction > 0.0 &&
                next_unit(rng) < noise.idiosyncratic_fraction) {
                RawSet set;
                set.name = "zz" + user + "q" + std::to_string(junk_counter);
                for (int i = 0; i < 3; ++i)
                    set.tags["junk." + user + "." + std::to_string(junk_counter) + ".t" +
                             std::to_string(i)] = 1;
                ++junk_counter;
                rec.sets.push_back(std::move(set));
            }
            if (!rec.sets.empty()) out.push_back(std::move(rec));

            if (noise.invert_fraction > 0.0 && next_unit(rng) < noise.invert_fraction) {
                // An upside-down fragment: the child is the collection and
                // the parent appears inside it as a set.
                const std::string& child = kids[next_below(rng, kids.size())];
                RawRecord inv;
                inv.user = user;
                inv.collection = child;
                RawSet set;
                set.name = node;
                set.tags = own_tags(node, "");
                int picked = 0;
                for (auto& [tag, n] : own_tags(child, "")) {
                    if (picked >= 4) break;
                    set.tags[tag] = n;
                    ++picked;
                }
                inv.sets.push_back(std::move(set));
                out.push_back(std::move(inv));
            }
        }
        for (const Homonym& h : homonyms) {
            if (next_unit(rng) >= kHomonymCoverage) continue;
            RawRecord rec;
            rec.user = user;
            rec.collection = h.stem;
            for (int i = 0; i < 2; ++i) {
                RawSet set;
                set.name = h.stem + "x" + std::to_string(i);
                set.tags = own_tags(set.name, "hom.");
                for (auto& [tag, n] : own_tags(h.stem, "hom.")) set.tags[tag] = n;
                rec.sets.push_back(std::move(set));
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace folkweave
