#include "folkweave/tokenize.hpp"

#include <cctype>
#include <fstream>

#include "folkweave/errors.hpp"
#include "folkweave/porter.hpp"

namespace folkweave {

namespace {

const std::set<std::string> kDefaultStoplist = {"me", "myself", "my", "misc",
                                                "other", "stuff", "untitled"};

bool is_separator(char c) {
    return c == '&' || c == '<' || c == '>' || c == ':' || c == '/';
}

bool is_bridge(const std::string& word) {
    return word == "at" || word == "of" || word == "in" || word == "and" || word == "or";
}

bool has_alnum(const std::string& word) {
    for (unsigned char c : word)
        if (std::isalnum(c)) return true;
    return false;
}

}  // namespace

std::string stem_term(std::string_view term) {
    std::string out;
    std::size_t i = 0;
    while (i < term.size()) {
        while (i < term.size() && term[i] == ' ') ++i;
        std::size_t start = i;
        while (i < term.size() && term[i] != ' ') ++i;
        if (i > start) {
            if (!out.empty()) out += ' ';
            out += porter_stem(term.substr(start, i - start));
        }
    }
    return out;
}

Tokenizer::Tokenizer() : stoplist_(kDefaultStoplist) {}

Tokenizer::Tokenizer(std::set<std::string> stoplist) : stoplist_(std::move(stoplist)) {}

Tokenizer Tokenizer::from_stoplist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open stoplist file '" + path + "'");
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string word;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        if (!word.empty()) words.insert(word);
    }
    return Tokenizer(std::move(words));
}

std::vector<std::string> Tokenizer::tokenize(std::string_view name) const {
    std::vector<std::string> terms;
    std::vector<std::string> words;  // words of the term being assembled
    std::string word;

    auto flush_word = [&](bool bridge_breaks) {
        if (word.empty()) return false;
        bool broke = false;
        if (bridge_breaks && is_bridge(word)) {
            broke = true;
        } else if (has_alnum(word)) {
            words.push_back(word);
        }
        word.clear();
        return broke;
    };
    auto flush_term = [&]() {
        if (words.empty()) return;
        std::string term = words[0];
        for (std::size_t i = 1; i < words.size(); ++i) {
            term += ' ';
            term += words[i];
        }
        words.clear();
        if (!stoplist_.count(term)) terms.push_back(term);
    };

    for (char raw : name) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(raw)));
        if (is_separator(c)) {
            flush_word(true);
            flush_term();
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            if (flush_word(true)) flush_term();
        } else {
            word += c;
        }
    }
    if (flush_word(true)) flush_term();
    flush_term();
    return terms;
}

}  // namespace folkweave
