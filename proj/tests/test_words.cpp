#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoidlab/errors.hpp"
#include "monoidlab/words.hpp"
#include "monoidlab/wordset.hpp"

#include <sstream>

using namespace monoidlab;

namespace {

// every word over `alpha` with length in [1, maxlen], lexicographic by length
std::vector<Word> words_upto(const std::string& alpha, size_t maxlen) {
    std::vector<Word> out, layer{""};
    for (size_t len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (char c : alpha) next.push_back(w + c);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

bool primitive_oracle(const Word& w) {
    for (size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d != 0) continue;
        Word p;
        for (size_t i = 0; i < w.size() / d; ++i) p += w.substr(0, d);
        if (p == w) return false;
    }
    return true;
}

} // namespace

TEST_CASE("alphabet basics") {
    Alphabet a("cba");
    CHECK(a.symbols() == "abc");
    CHECK(a.size() == 3);
    CHECK(a.index('b') == 1);
    CHECK(a.index('z') == -1);
    CHECK(Alphabet::from_words({"ba", "ca"}) == Alphabet("abc"));
}

TEST_CASE("primitivity matches the exponent oracle") {
    for (const Word& w : words_upto("ab", 10)) {
        CAPTURE(w);
        CHECK(is_primitive(w) == primitive_oracle(w));
        auto [root, exp] = primitive_word_root(w);
        CHECK(is_primitive(root));
        CHECK(root.size() * exp == w.size());
        Word rebuilt;
        for (int i = 0; i < exp; ++i) rebuilt += root;
        CHECK(rebuilt == w);
    }
}

TEST_CASE("primitivity spot values") {
    CHECK(is_primitive("a"));
    CHECK(is_primitive("ab"));
    CHECK_FALSE(is_primitive("aa"));
    CHECK_FALSE(is_primitive("abab"));
    CHECK(is_primitive("abcabca"));
    auto r = primitive_word_root("abcabcabc");
    CHECK(r.root == "abc");
    CHECK(r.exponent == 3);
}

TEST_CASE("commutation iff common primitive root") {
    for (const Word& x : words_upto("ab", 5))
        for (const Word& y : words_upto("ab", 5)) {
            bool same_root = primitive_word_root(x).root == primitive_word_root(y).root;
            CHECK(commutes(x, y) == same_root);
        }
}

TEST_CASE("factors") {
    auto f = factors("aab");
    CHECK(f == std::set<Word, LengthLexLess>{"a", "b", "aa", "ab", "aab"});
    CHECK(factors("ab", true).count(""));
    CHECK(factors("aaaa").size() == 4);
}

TEST_CASE("square-freeness") {
    CHECK(is_square_free("abcacb"));
    CHECK_FALSE(is_square_free("abcbcd"));
    CHECK(is_square_free("a"));
    CHECK_FALSE(is_square_free("aa"));
}

TEST_CASE("word sets are canonical") {
    WordSet s{"bc", "a", "bc", "ab"};
    CHECK(s.size() == 3);
    CHECK(s[0] == "a");
    CHECK(s[1] == "ab");
    CHECK(s[2] == "bc");
    CHECK(s.contains("bc"));
    CHECK_FALSE(s.contains("b"));
    CHECK(s.total_length() == 5);
    CHECK(s.to_csv() == "a,ab,bc");
    CHECK(WordSet::from_csv("bc,a,ab") == s);
    CHECK_THROWS_AS(WordSet({"a", ""}), EmptyWordError);
}

TEST_CASE("word set stream format") {
    std::istringstream in("# heading\nab\n\n  bc  \na # trailing comment\n");
    WordSet s = WordSet::from_stream(in);
    CHECK(s == WordSet{"a", "ab", "bc"});
}
