#include "folkweave/tag_stats.hpp"

#include <algorithm>

#include "folkweave/errors.hpp"

namespace folkweave {

void TagStats::add(const std::string& tag, std::int64_t freq) {
    if (tag.empty()) throw InvariantViolation("TagStats: empty tag");
    if (freq < 1) throw InvariantViolation("TagStats: frequency < 1 for tag '" + tag + "'");
    entries_[tag] += freq;
    total_ += freq;
}

void TagStats::merge(const TagStats& other) {
    for (const auto& [tag, freq] : other.entries_) {
        entries_[tag] += freq;
        total_ += freq;
    }
}

std::int64_t TagStats::count(const std::string& tag) const {
    auto it = entries_.find(tag);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<std::string> TagStats::top_k(std::size_t k) const {
    std::vector<std::pair<std::string, std::int64_t>> items(entries_.begin(), entries_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > k) items.resize(k);
    std::vector<std::string> out;
    out.reserve(items.size());
    for (auto& [tag, freq] : items) out.push_back(std::move(tag));
    return out;
}

TagStats sum_tags(const TagStats& a, const TagStats& b) {
    TagStats out = a;
    out.merge(b);
    return out;
}

}  // namespace folkweave
