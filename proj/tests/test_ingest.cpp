// Corpus parsing and sapling extraction: JSONL robustness, hierarchy
// decomposition, composite-name fan-out, same-stem leaf merging.
#include <doctest.h>

#include <sstream>

#include "folkweave/ingest.hpp"
#include "folkweave/tokenize.hpp"
#include "helpers.hpp"

using namespace folkweave;

namespace {

std::vector<Sapling> saplings_of(const std::vector<RawRecord>& records,
                                 IngestStats* stats = nullptr) {
    Tokenizer tok;
    return build_saplings(records, tok, stats);
}

const Sapling* by_root(const std::vector<Sapling>& all, const std::string& stem) {
    for (const auto& s : all)
        if (s.root.stem == stem) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("jsonl parsing keeps good lines and counts bad ones") {
    std::istringstream in(
        R"({"user":"alice","collection":"Travel","sets":[{"name":"Europe","tags":{"paris":2}}]})"
        "\n"
        "not json at all\n"
        "\n"
        R"({"collection":"orphaned","sets":[]})"
        "\n"
        R"({"user":"bob","collection":"Pets","sets":[{"name":"dogs","tags":{"bark":1}}]})"
        "\n");
    IngestStats stats;
    std::vector<RawRecord> records = parse_jsonl(in, stats);
    REQUIRE(records.size() == 2);
    CHECK(records[0].user == "alice");
    CHECK(records[0].sets.at(0).tags.at("paris") == 2);
    CHECK(records[1].user == "bob");
    CHECK(stats.lines == 5);
    CHECK(stats.records == 2);
    CHECK(stats.skipped_lines == 2);  // junk line + missing user; blanks are free
}

TEST_CASE("tag entries must be positive integers") {
    std::istringstream in(
        R"({"user":"u","collection":"c","sets":[{"name":"s","tags":{"x":0}}]})"
        "\n"
        R"({"user":"u","collection":"c","sets":[{"name":"s","tags":{"x":1.5}}]})"
        "\n");
    IngestStats stats;
    CHECK(parse_jsonl(in, stats).empty());
    CHECK(stats.skipped_lines == 2);
}

TEST_CASE("record json round trip") {
    RawRecord r = fixtures::make_record("alice", "Travel",
                                        {{"Europe", {{"paris", 2}, {"rome", 1}}}});
    RawRecord child = fixtures::make_record("alice", "Asia", {{"Japan", {{"tokyo", 3}}}});
    r.children.push_back(child);

    std::istringstream in(record_to_json_line(r) + "\n");
    IngestStats stats;
    std::vector<RawRecord> back = parse_jsonl(in, stats);
    REQUIRE(back.size() == 1);
    CHECK(back[0].user == "alice");
    CHECK(back[0].collection == "Travel");
    REQUIRE(back[0].children.size() == 1);
    CHECK(back[0].children[0].collection == "Asia");
    CHECK(back[0].children[0].sets.at(0).tags.at("tokyo") == 3);
}

TEST_CASE("a flat record yields one sapling with summed root tags") {
    std::vector<RawRecord> records{fixtures::make_record(
        "alice", "Travel",
        {{"Europe", {{"paris", 2}, {"rome", 1}}}, {"Asia", {{"tokyo", 3}}}})};
    IngestStats stats;
    std::vector<Sapling> all = saplings_of(records, &stats);
    REQUIRE(all.size() == 1);
    const Sapling& s = all[0];
    CHECK(s.id == "00000000");
    CHECK(s.user == "alice");
    CHECK(s.root.stem == "travel");
    REQUIRE(s.leaves.size() == 2);
    CHECK(s.leaves[0].stem == "asia");
    CHECK(s.leaves[1].stem == "europ");
    CHECK(s.root.tags.total() == 6);
    CHECK(s.root.tags.count("paris") == 2);
    CHECK(stats.saplings == 1);
}

TEST_CASE("nested collections emit one sapling per internal node") {
    RawRecord uk = fixtures::make_record("alice", "UK",
                                         {{"London", {{"thames", 1}}}});
    uk.children.push_back(fixtures::make_record(
        "alice", "Scotland", {{"Glasgow", {{"clyde", 2}}}, {"Shetland", {{"wool", 1}}}}));
    std::vector<Sapling> all = saplings_of({uk});
    REQUIRE(all.size() == 2);
    // Children are emitted before their parent, in walk order.
    CHECK(all[0].root.stem == "scotland");
    CHECK(all[0].id == "00000000");
    CHECK(all[1].root.stem == "uk");
    CHECK(all[1].id == "00000001");

    const Sapling* parent = by_root(all, "uk");
    REQUIRE(parent != nullptr);
    REQUIRE(parent->leaves.size() == 2);  // london + scotland
    CHECK(parent->leaves[0].stem == "london");
    CHECK(parent->leaves[1].stem == "scotland");
    // The scotland leaf inherits the child's aggregated tags.
    CHECK(parent->leaves[1].tags.count("clyde") == 2);
    CHECK(parent->leaves[1].tags.count("wool") == 1);
    CHECK(parent->root.tags.total() == 4);
}

TEST_CASE("composite names fan out into one leaf per term") {
    RawRecord scot = fixtures::make_record("alice", "Scotland", {});
    RawRecord composite = fixtures::make_record("alice", "Highlands & Islands",
                                                {{"Skye", {{"cuillin", 2}}}});
    scot.children.push_back(composite);
    IngestStats stats;
    std::vector<Sapling> all = saplings_of({scot}, &stats);

    // The composite node cannot name a sapling root of its own...
    CHECK(by_root(all, "highland") == nullptr);
    CHECK(stats.dropped_composite_roots == 1);
    REQUIRE(all.size() == 1);

    // ...but its terms become separate leaves of the parent, each carrying
    // the composite node's full tag aggregate.
    const Sapling* parent = by_root(all, "scotland");
    REQUIRE(parent != nullptr);
    REQUIRE(parent->leaves.size() == 2);
    CHECK(parent->leaves[0].stem == "highland");
    CHECK(parent->leaves[1].stem == "island");
    CHECK(parent->leaves[0].tags.count("cuillin") == 2);
    CHECK(parent->leaves[1].tags.count("cuillin") == 2);
    CHECK(parent->root.tags.count("cuillin") == 4);
}

TEST_CASE("same-stem leaves merge their tags") {
    std::vector<RawRecord> records{fixtures::make_record(
        "alice", "Hobbies", {{"Skiing", {{"snow", 1}}}, {"skies", {{"cloud", 2}}}})};
    std::vector<Sapling> all = saplings_of(records);
    REQUIRE(all.size() == 1);
    REQUIRE(all[0].leaves.size() == 1);
    const SaplingNode& leaf = all[0].leaves[0];
    CHECK(leaf.stem == "ski");
    CHECK(leaf.raw_name == "skiing");  // first surface form seen
    CHECK(leaf.tags.count("snow") == 1);
    CHECK(leaf.tags.count("cloud") == 2);
}

TEST_CASE("nodes with no usable leaves are dropped") {
    IngestStats stats;
    std::vector<Sapling> none = saplings_of(
        {fixtures::make_record("alice", "Archive", {{"misc", {{"x", 1}}}})}, &stats);
    CHECK(none.empty());
    CHECK(stats.dropped_empty == 1);

    IngestStats stats2;
    std::vector<Sapling> empty_record =
        saplings_of({fixtures::make_record("alice", "Empty", {})}, &stats2);
    CHECK(empty_record.empty());
    CHECK(stats2.dropped_empty == 1);
}

TEST_CASE("sapling ids are sequential across records") {
    std::vector<RawRecord> records;
    for (int i = 0; i < 3; ++i)
        records.push_back(fixtures::make_record("u" + std::to_string(i), "Pets",
                                                {{"dogs", {{"bark", 1}}}}));
    std::vector<Sapling> all = saplings_of(records);
    REQUIRE(all.size() == 3);
    CHECK(all[0].id == "00000000");
    CHECK(all[1].id == "00000001");
    CHECK(all[2].id == "00000002");
    CHECK(all[2].user == "u2");
}
