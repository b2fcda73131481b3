// Collection/set name normalization: lowercasing, splitting on strong
// separator characters and bridging words, term-level stoplisting, and
// multiword-aware stemming. Whitespace inside a term is preserved, so
// "South Africa" stays a single two-word term.
#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace folkweave {

// Stems each whitespace-separated word of a term and rejoins with single
// spaces: "united states" -> "unit state".
std::string stem_term(std::string_view term);

class Tokenizer {
public:
    // Built-in stoplist: me, myself, my, misc, other, stuff, untitled.
    Tokenizer();
    explicit Tokenizer(std::set<std::string> stoplist);

    // One lowercase term per line; '#' starts a comment.
    static Tokenizer from_stoplist_file(const std::string& path);

    // Splits a raw name into terms. Separator characters & < > : / always
    // break terms; the words at/of/in/and/or break terms when they stand
    // alone between spaces. Purely non-alphanumeric words are dropped, and
    // whole terms found in the stoplist are dropped.
    std::vector<std::string> tokenize(std::string_view name) const;

    const std::set<std::string>& stoplist() const { return stoplist_; }

private:
    std::set<std::string> stoplist_;
};

}  // namespace folkweave
