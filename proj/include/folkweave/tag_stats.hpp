// TagStats: a frequency-weighted multiset of tags. Map-backed so iteration is
// always in lexicographic tag order, which keeps every downstream computation
// deterministic.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace folkweave {

class TagStats {
public:
    TagStats() = default;

    // Adds `freq` occurrences of `tag`. Rejects empty tags and freq < 1.
    void add(const std::string& tag, std::int64_t freq = 1);

    // Sums another stat set into this one.
    void merge(const TagStats& other);

    const std::map<std::string, std::int64_t>& entries() const { return entries_; }
    std::int64_t total() const { return total_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::int64_t count(const std::string& tag) const;

    // The k most frequent tags, ties broken lexicographically. Returns
    // min(k, size()) tags, most frequent first.
    std::vector<std::string> top_k(std::size_t k) const;

    bool operator==(const TagStats& other) const { return entries_ == other.entries_; }

private:
    std::map<std::string, std::int64_t> entries_;
    std::int64_t total_ = 0;
};

TagStats sum_tags(const TagStats& a, const TagStats& b);

}  // namespace folkweave
