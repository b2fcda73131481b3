// JSONL corpus reading and sapling extraction. Each input line is one
// user-collection record, possibly with nested child collections; every
// internal node of such a hierarchy yields one root+leaves sapling.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "folkweave/model.hpp"
#include "folkweave/tokenize.hpp"

namespace folkweave {

struct RawSet {
    std::string name;
    std::map<std::string, std::int64_t> tags;
};

struct RawRecord {
    std::string user;
    std::string collection;
    std::vector<RawSet> sets;
    std::vector<RawRecord> children;
};

struct IngestStats {
    std::size_t lines = 0;
    std::size_t records = 0;
    std::size_t skipped_lines = 0;            // malformed JSONL lines
    std::size_t saplings = 0;
    std::size_t dropped_composite_roots = 0;  // roots tokenizing to != 1 term
    std::size_t dropped_empty = 0;            // nodes with no usable leaves
};

// Malformed lines are counted and skipped, with a warning on stderr.
std::vector<RawRecord> parse_jsonl(std::istream& in, IngestStats& stats);
std::vector<RawRecord> read_jsonl(const std::string& path, IngestStats& stats);

void write_jsonl(const std::string& path, const std::vector<RawRecord>& records);
std::string record_to_json_line(const RawRecord& record);

// Decomposes records level-by-level into saplings. Leaf terms inherit their
// set's full tag statistics; composite names fan out into one leaf per term;
// same-stem leaves of one sapling are merged; root tags are the sum over
// leaves. Sapling ids are zero-padded sequence numbers, so input order is
// reproducible from ids.
std::vector<Sapling> build_saplings(const std::vector<RawRecord>& records, const Tokenizer& tok,
                                    IngestStats* stats = nullptr);

}  // namespace folkweave
