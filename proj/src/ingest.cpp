#include "folkweave/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "folkweave/errors.hpp"

namespace folkweave {

namespace {

using nlohmann::json;

RawRecord record_from_json(const json& j);

std::vector<RawSet> sets_from_json(const json& j) {
    std::vector<RawSet> out;
    if (!j.is_array()) throw InputError("'sets' is not an array");
    for (const auto& js : j) {
        if (!js.is_object()) throw InputError("set entry is not an object");
        RawSet s;
        s.name = js.at("name").get<std::string>();
        if (s.name.empty()) throw InputError("set with empty name");
        if (js.contains("tags")) {
            const auto& jt = js.at("tags");
            if (!jt.is_object()) throw InputError("'tags' is not an object");
            for (auto it = jt.begin(); it != jt.end(); ++it) {
                if (!it.value().is_number_integer())
                    throw InputError("tag count for '" + it.key() + "' is not an integer");
                std::int64_t n = it.value().get<std::int64_t>();
                if (it.key().empty() || n < 1)
                    throw InputError("bad tag entry '" + it.key() + "'");
                s.tags[it.key()] = n;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

RawRecord record_from_json(const json& j) {
    if (!j.is_object()) throw InputError("record is not an object");
    RawRecord r;
    r.user = j.at("user").get<std::string>();
    r.collection = j.at("collection").get<std::string>();
    if (r.user.empty()) throw InputError("record with empty user");
    if (r.collection.empty()) throw InputError("record with empty collection");
    if (j.contains("sets")) r.sets = sets_from_json(j.at("sets"));
    if (j.contains("children")) {
        const auto& jc = j.at("children");
        if (!jc.is_array()) throw InputError("'children' is not an array");
        for (const auto& child : jc) r.children.push_back(record_from_json(child));
    }
    return r;
}

json record_to_json(const RawRecord& r) {
    json j;
    j["user"] = r.user;
    j["collection"] = r.collection;
    j["sets"] = json::array();
    for (const auto& s : r.sets) {
        json js;
        js["name"] = s.name;
        js["tags"] = json::object();
        for (const auto& [tag, n] : s.tags) js["tags"][tag] = n;
        j["sets"].push_back(std::move(js));
    }
    if (!r.children.empty()) {
        j["children"] = json::array();
        for (const auto& c : r.children) j["children"].push_back(record_to_json(c));
    }
    return j;
}

std::string zero_pad(std::size_t n, int width) {
    std::string digits = std::to_string(n);
    if (static_cast<int>(digits.size()) < width)
        digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
    return digits;
}

class SaplingBuilder {
public:
    SaplingBuilder(const Tokenizer& tok, IngestStats* stats) : tok_(tok), stats_(stats) {}

    std::vector<Sapling> out;

    // Returns the aggregated tag statistics of this node (the sum over its
    // expanded leaves), which the parent level treats as the node's tags.
    TagStats walk(const std::string& user, const std::string& name,
                  const std::vector<RawSet>& sets, const std::vector<RawRecord>& children) {
        // (term, tags) pairs; composite names contribute one leaf per term,
        // each inheriting the full tag statistics of its source.
        std::vector<std::pair<std::string, TagStats>> raw_leaves;
        auto expand = [&](const std::string& leaf_name, const TagStats& tags) {
            for (const auto& term : tok_.tokenize(leaf_name)) raw_leaves.emplace_back(term, tags);
        };
        for (const auto& s : sets) {
            TagStats tags;
            for (const auto& [tag, n] : s.tags) tags.add(tag, n);
            expand(s.name, tags);
        }
        for (const auto& c : children) {
            TagStats child_tags = walk(user, c.collection, c.sets, c.children);
            expand(c.collection, child_tags);
        }

        TagStats aggregate;
        for (const auto& [term, tags] : raw_leaves) aggregate.merge(tags);

        std::vector<std::string> root_terms = tok_.tokenize(name);
        if (raw_leaves.empty()) {
            if (stats_) ++stats_->dropped_empty;
        } else if (root_terms.size() != 1) {
            if (stats_) ++stats_->dropped_composite_roots;
        } else {
            emit(user, root_terms[0], raw_leaves, aggregate);
        }
        return aggregate;
    }

private:
    void emit(const std::string& user, const std::string& root_term,
              const std::vector<std::pair<std::string, TagStats>>& raw_leaves,
              const TagStats& aggregate) {
        Sapling s;
        s.id = zero_pad(out.size(), 8);
        s.user = user;
        s.root.raw_name = root_term;
        s.root.stem = stem_term(root_term);
        s.root.tags = aggregate;
        s.root.users = {user};
        std::map<std::string, SaplingNode> by_stem;
        for (const auto& [term, tags] : raw_leaves) {
            std::string stem = stem_term(term);
            auto [it, inserted] = by_stem.try_emplace(stem);
            if (inserted) {
                it->second.raw_name = term;
                it->second.stem = stem;
                it->second.users = {user};
            }
            it->second.tags.merge(tags);
        }
        s.leaves.reserve(by_stem.size());
        for (auto& [stem, node] : by_stem) s.leaves.push_back(std::move(node));
        s.check();
        out.push_back(std::move(s));
        if (stats_) ++stats_->saplings;
    }

    const Tokenizer& tok_;
    IngestStats* stats_;
};

}  // namespace

std::vector<RawRecord> parse_jsonl(std::istream& in, IngestStats& stats) {
    std::vector<RawRecord> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++stats.lines;
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        try {
            json j = json::parse(line);
            out.push_back(record_from_json(j));
            ++stats.records;
        } catch (const std::exception& e) {
            ++stats.skipped_lines;
            std::cerr << "warning: skipping malformed record at line " << line_no << ": "
                      << e.what() << "\n";
        }
    }
    return out;
}

std::vector<RawRecord> read_jsonl(const std::string& path, IngestStats& stats) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file '" + path + "'");
    return parse_jsonl(in, stats);
}

std::string record_to_json_line(const RawRecord& record) {
    return record_to_json(record).dump();
}

void write_jsonl(const std::string& path, const std::vector<RawRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file '" + path + "'");
    for (const auto& r : records) out << record_to_json_line(r) << "\n";
}

std::vector<Sapling> build_saplings(const std::vector<RawRecord>& records, const Tokenizer& tok,
                                    IngestStats* stats) {
    SaplingBuilder builder(tok, stats);
    for (const auto& r : records) builder.walk(r.user, r.collection, r.sets, r.children);
    return std::move(builder.out);
}

}  // namespace folkweave
