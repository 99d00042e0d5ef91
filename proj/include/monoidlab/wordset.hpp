#pragma once

// Finite sets of distinct nonempty words in canonical (length, lex) order.

#include "monoidlab/words.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace monoidlab {

class WordSet {
public:
    WordSet() = default;
    // Deduplicates and sorts; rejects empty words.
    explicit WordSet(std::vector<Word> words);
    WordSet(std::initializer_list<Word> words);

    // One word per line, '#' comments, blank lines ignored.
    static WordSet from_stream(std::istream& in);
    // Comma-separated list, e.g. "a,bc".
    static WordSet from_csv(const std::string& text);

    size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const Word& operator[](size_t i) const { return words_[i]; }
    const std::vector<Word>& words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool contains(const Word& w) const;
    size_t total_length() const;
    Alphabet alphabet() const { return Alphabet::from_words(words_); }

    std::string to_csv() const;

    bool operator==(const WordSet&) const = default;
    bool operator<(const WordSet& other) const { return words_ < other.words_; }

private:
    std::vector<Word> words_;
};

std::ostream& operator<<(std::ostream& os, const WordSet& s);

} // namespace monoidlab
