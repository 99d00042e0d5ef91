#include "monoidlab/words.hpp"
#include "monoidlab/errors.hpp"

#include <algorithm>

namespace monoidlab {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

Alphabet Alphabet::from_words(const std::vector<Word>& words) {
    std::string all;
    for (const Word& w : words) all += w;
    return Alphabet(all);
}

int Alphabet::index(char c) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c) return -1;
    return static_cast<int>(it - symbols_.begin());
}

bool is_primitive(const Word& w) {
    if (w.empty()) throw EmptyWordError{};
    // search for w inside ww at start offsets 1..|w|-1
    const size_t n = w.size();
    Word ww = w + w;
    auto pos = ww.find(w, 1);
    return pos >= n;
}

WordRoot primitive_word_root(const Word& w) {
    if (w.empty()) throw EmptyWordError{};
    const size_t n = w.size();
    for (size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i)
            if (w[i] != w[i - d]) ok = false;
        if (ok) return {w.substr(0, d), static_cast<int>(n / d)};
    }
    return {w, 1}; // unreachable, d = n always matches
}

bool commutes(const Word& x, const Word& y) {
    if (x.empty() || y.empty()) throw EmptyWordError{};
    return x + y == y + x;
}

std::set<Word, LengthLexLess> factors(const Word& w, bool include_empty) {
    std::set<Word, LengthLexLess> out;
    if (include_empty) out.insert(Word{});
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t len = 1; i + len <= w.size(); ++len)
            out.insert(w.substr(i, len));
    return out;
}

bool is_square_free(const Word& w) {
    const size_t n = w.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t len = 1; i + 2 * len <= n; ++len)
            if (w.compare(i, len, w, i + len, len) == 0) return false;
    return true;
}

} // namespace monoidlab
