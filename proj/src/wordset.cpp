#include "monoidlab/wordset.hpp"
#include "monoidlab/errors.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace monoidlab {

WordSet::WordSet(std::vector<Word> words) : words_(std::move(words)) {
    for (const Word& w : words_)
        if (w.empty()) throw EmptyWordError{};
    std::sort(words_.begin(), words_.end(), LengthLexLess{});
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

WordSet::WordSet(std::initializer_list<Word> words) : WordSet(std::vector<Word>(words)) {}

WordSet WordSet::from_stream(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        words.push_back(line.substr(b, e - b + 1));
    }
    return WordSet(std::move(words));
}

WordSet WordSet::from_csv(const std::string& text) {
    std::vector<Word> words;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) words.push_back(item);
    return WordSet(std::move(words));
}

bool WordSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w, LengthLexLess{});
}

size_t WordSet::total_length() const {
    return std::accumulate(words_.begin(), words_.end(), size_t{0},
                           [](size_t acc, const Word& w) { return acc + w.size(); });
}

std::string WordSet::to_csv() const {
    std::string out;
    for (size_t i = 0; i < words_.size(); ++i) {
        if (i) out += ',';
        out += words_[i];
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const WordSet& s) {
    return os << '{' << s.to_csv() << '}';
}

} // namespace monoidlab
