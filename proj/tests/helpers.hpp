// Shared fixture builders for the test suite: quick sapling/record
// construction and the small hand-built corpora (shortcut, mutual shortcut,
// synonym loop, ambiguous term) used by both the unit tests and the
// acceptance runner.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folkweave/ingest.hpp"
#include "folkweave/model.hpp"

namespace fixtures {

using TagMap = std::map<std::string, std::int64_t>;

// leaves: stem -> tags. Root tags become the sum, as the ingest layer would
// produce them.
inline folkweave::Sapling make_sapling(std::string id, std::string user, std::string stem,
                                       const std::map<std::string, TagMap>& leaves) {
    folkweave::Sapling s;
    s.id = std::move(id);
    s.user = std::move(user);
    s.root.stem = stem;
    s.root.raw_name = std::move(stem);
    s.root.users = {s.user};
    for (const auto& [leaf_stem, tags] : leaves) {
        folkweave::SaplingNode n;
        n.stem = leaf_stem;
        n.raw_name = leaf_stem;
        n.users = {s.user};
        for (const auto& [tag, count] : tags) n.tags.add(tag, count);
        s.root.tags.merge(n.tags);
        s.leaves.push_back(std::move(n));
    }
    s.check();
    return s;
}

inline folkweave::RawRecord make_record(std::string user, std::string collection,
                                        const std::vector<std::pair<std::string, TagMap>>& sets) {
    folkweave::RawRecord r;
    r.user = std::move(user);
    r.collection = std::move(collection);
    for (const auto& [name, tags] : sets) {
        folkweave::RawSet s;
        s.name = name;
        s.tags = tags;
        r.sets.push_back(std::move(s));
    }
    return r;
}

// Emits `n` users' worth of identical records so every leaf clears the
// two-contributor noise floor.
inline void repeat_users(std::vector<folkweave::RawRecord>& out, int n, const std::string& prefix,
                         const std::string& collection,
                         const std::vector<std::pair<std::string, TagMap>>& sets) {
    for (int i = 0; i < n; ++i)
        out.push_back(make_record(prefix + std::to_string(i), collection, sets));
}

// A country hierarchy where glasgow is reachable both directly and through
// scotland; growing from uk must keep only the longer path.
inline std::vector<folkweave::RawRecord> shortcut_corpus() {
    const TagMap sc{{"highlands", 1}, {"tartan", 1}, {"whisky", 1}, {"lochs", 1}};
    const TagMap gl{{"clyde", 1}, {"uni", 1}, {"museums", 1}, {"kelvin", 1}};
    std::vector<folkweave::RawRecord> out;
    repeat_users(out, 3, "uk_user", "uk",
                 {{"scotland", sc},
                  {"glasgow", gl},
                  {"edinburgh", {{"castle", 1}, {"fringe", 1}, {"mile", 1}, {"arthur", 1}}},
                  {"london", {{"thames", 1}, {"bigben", 1}, {"tube", 1}, {"westend", 1}}}});
    TagMap gl_sc = gl;
    for (const auto& [t, n] : sc) gl_sc[t] = n;
    TagMap sh_sc{{"puffins", 1}, {"ferry", 1}, {"wool", 1}, {"norse", 1}};
    for (const auto& [t, n] : sc) sh_sc[t] = n;
    repeat_users(out, 3, "sc_user", "scotland", {{"glasgow", gl_sc}, {"shetland", sh_sc}});
    return out;
}

// uk/england/london corpus where the london and england candidates each
// contain the other as a leaf; england is engineered to sit closer to uk.
inline std::vector<folkweave::RawRecord> mutual_shortcut_corpus() {
    const TagMap brit{{"royal", 1}, {"pound", 1}, {"queen", 1}, {"tea", 1}};
    const TagMap lon{{"thames", 1}, {"bigben", 1}, {"tube", 1}, {"westend", 1}};
    auto with = [](TagMap base, const TagMap& extra) {
        for (const auto& [t, n] : extra) base[t] = n;
        return base;
    };
    std::vector<folkweave::RawRecord> out;
    repeat_users(out, 3, "uk_user", "uk",
                 {{"england", brit},
                  {"london", lon},
                  {"edinburgh", with(brit, {{"castle", 1}, {"fringe", 1}})}});
    repeat_users(out, 3, "en_user", "england",
                 {{"london", with(brit, lon)},
                  {"camden", with(brit, {{"market", 1}})},
                  {"bristol", with(brit, {{"harbour", 1}})}});
    repeat_users(out, 3, "lo_user", "london",
                 {{"england", with(lon, {{"flag", 1}})},
                  {"soho", {{"jazz", 1}, {"clubs", 1}, {"neon", 1}, {"bars", 1}}}});
    return out;
}

// Users disagree on whether fauna nests under animals or the other way
// around; the tag vocabularies overlap enough for the stricter synonym
// check, so the two names should collapse into one aliased node.
inline std::vector<folkweave::RawRecord> synonym_corpus() {
    const TagMap core{{"wildlife", 1}, {"nature", 1}, {"outdoors", 1}, {"green", 1}};
    auto with = [&](const TagMap& extra) {
        TagMap m = core;
        for (const auto& [t, n] : extra) m[t] = n;
        return m;
    };
    std::vector<folkweave::RawRecord> out;
    repeat_users(out, 3, "an_user", "animals",
                 {{"fauna", with({{"flora", 1}})},
                  {"birds", with({{"feathers", 1}})},
                  {"insects", with({{"bugs", 1}})}});
    repeat_users(out, 3, "fa_user", "fauna",
                 {{"animals", with({{"zoo", 1}})},
                  {"birds", with({{"feathers", 1}})},
                  {"insects", with({{"bugs", 1}})}});
    return out;
}

// The classic two-meanings corpus: one term used for a bird and a country.
// Also carries bird collections so a tree can be grown around the bird
// sense only.
inline std::vector<folkweave::RawRecord> ambiguous_term_corpus() {
    const TagMap birdish{{"bird", 1}, {"feather", 1}, {"farm", 1}, {"poultry", 1}};
    const TagMap travel{{"travel", 1}, {"city", 1}, {"mosque", 1}, {"bosphorus", 1}};
    std::vector<folkweave::RawRecord> out;
    for (int i = 0; i < 10; ++i)
        out.push_back(make_record("bird_fan" + std::to_string(i), "turkey",
                                  {{"beaks", birdish}, {"feathers", birdish}}));
    for (int i = 0; i < 10; ++i)
        out.push_back(make_record("traveler" + std::to_string(i), "turkey",
                                  {{"istanbul", travel}, {"ankara", travel}}));
    for (int i = 0; i < 3; ++i)
        out.push_back(make_record("birder" + std::to_string(i), "birds",
                                  {{"turkey", birdish}, {"owl", birdish}}));
    return out;
}

}  // namespace fixtures
