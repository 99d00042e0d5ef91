#pragma once

// Elementary operations on words over a small printable alphabet.
// A word is stored as a plain std::string; alphabets are derived from the
// words in play unless declared explicitly.

#include <set>
#include <string>
#include <vector>

namespace monoidlab {

using Word = std::string;

// Ordered set of distinct printable symbols with dense indices 0..size-1.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols);

    static Alphabet from_words(const std::vector<Word>& words);

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int idx) const { return symbols_[static_cast<size_t>(idx)]; }
    int index(char c) const;       // -1 if absent
    bool contains(char c) const { return index(c) >= 0; }
    const std::string& symbols() const { return symbols_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;          // sorted, distinct
};

// Canonical order used throughout: length first, then lexicographic.
struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct WordRoot {
    Word root;
    int exponent;
};

// w is primitive iff it is not an internal factor of ww.
bool is_primitive(const Word& w);

// Unique (root, exponent) with w = root^exponent and root primitive.
WordRoot primitive_word_root(const Word& w);

// xy == yx, i.e. x and y are powers of a common primitive word.
bool commutes(const Word& x, const Word& y);

// All distinct factors of w, optionally with the empty word.
std::set<Word, LengthLexLess> factors(const Word& w, bool include_empty = false);

bool is_square_free(const Word& w);

} // namespace monoidlab
