#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoidlab/binary_root.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/primitive.hpp"
#include "monoidlab/words.hpp"

#include <set>

using namespace monoidlab;

namespace {

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

// exhaustive reference: every pair of factors, no shortcuts
std::set<WordSet> binary_roots_oracle(const Word& w) {
    std::set<WordSet> out;
    auto fs = factors(w);
    for (const Word& x : fs)
        for (const Word& y : fs) {
            if (x >= y) continue;
            if (!tiles_with_both(w, x, y)) continue;
            if (is_primitive_pair(x, y).primitive) out.insert(WordSet{x, y});
        }
    return out;
}

} // namespace

TEST_CASE("tiling with both components") {
    CHECK(tiles_with_both("abcbac", "ab", "cbac"));
    CHECK(tiles_with_both("abcaabcabc", "a", "bc"));
    CHECK_FALSE(tiles_with_both("aaa", "a", "b"));     // y unused
    CHECK_FALSE(tiles_with_both("ab", "ab", "b"));     // only one component fits
    CHECK_FALSE(tiles_with_both("abab", "ab", "abab")); // each tiling uses one component
}

TEST_CASE("tiling requires at least one copy of each") {
    // abab = ab.ab uses only x; x.y = ab.abab does not equal abab
    CHECK_FALSE(tiles_with_both("abab", "ab", "ababab"));
    CHECK(tiles_with_both("ababab", "ab", "abab"));
    // long-word path (>= 64 letters) matches the bitmask path
    Word big;
    for (int i = 0; i < 20; ++i) big += (i % 3 ? "ab" : "cba");
    CHECK(tiles_with_both(big, "ab", "cba"));
    CHECK_FALSE(tiles_with_both(big + "x", "ab", "cba"));
}

TEST_CASE("binary roots of the showcase words") {
    BinaryRootReport r = binary_roots("abcaabcabc");
    REQUIRE(r.small_root.has_value());
    CHECK(*r.small_root == WordSet{"a", "bc"});
    REQUIRE_FALSE(r.roots.empty());
    CHECK(r.roots.front().pair == WordSet{"a", "bc"});
    CHECK(r.roots.front().size == 3);

    BinaryRootReport s = binary_roots("abcbac");
    CHECK_FALSE(s.small_root.has_value());
    bool has_ab = false, has_abcb = false;
    for (const BinaryRoot& root : s.roots) {
        CHECK(root.size == 6); // every root of this word has full size
        if (root.pair == WordSet{"ab", "cbac"}) has_ab = true;
        if (root.pair == WordSet{"ac", "abcb"}) has_abcb = true;
    }
    CHECK(has_ab);
    CHECK(has_abcb);
}

TEST_CASE("words with all-distinct letters have |w|-1 roots of full size") {
    BinaryRootReport r = binary_roots("abc");
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].pair == WordSet{"a", "bc"});
    CHECK(r.roots[1].pair == WordSet{"c", "ab"});
    CHECK(r.roots[0].size == 3);
    CHECK(r.roots[1].size == 3);
    CHECK_FALSE(r.small_root.has_value());
    CHECK(binary_roots("abcd").roots.size() == 3);
}

TEST_CASE("roots carry their tiling") {
    for (const BinaryRoot& r : binary_roots("abcaabcabc").roots) {
        Word rebuilt;
        for (size_t i : r.tiling) rebuilt += r.pair[i];
        CHECK(rebuilt == "abcaabcabc");
        std::set<size_t> used(r.tiling.begin(), r.tiling.end());
        CHECK(used.size() == 2);
    }
}

TEST_CASE("non-primitive input is rejected") {
    CHECK_THROWS_AS(binary_roots("abab"), NotPrimitiveError);
    CHECK_THROWS_AS(small_binary_root("aa"), NotPrimitiveError);
    try {
        binary_roots("abcabc");
    } catch (const NotPrimitiveError& e) {
        CHECK(e.root == "abc");
        CHECK(e.exponent == 2);
    }
}

TEST_CASE("full enumeration matches the factor-pair oracle") {
    for (const Word& w : words_upto("ab", 8)) {
        if (!is_primitive(w)) continue;
        CAPTURE(w);
        auto expected = binary_roots_oracle(w);
        std::set<WordSet> got;
        for (const BinaryRoot& r : binary_roots(w).roots) got.insert(r.pair);
        CHECK(got == expected);
    }
    for (const Word& w : words_upto("abc", 6)) {
        if (!is_primitive(w)) continue;
        CAPTURE(w);
        auto expected = binary_roots_oracle(w);
        std::set<WordSet> got;
        for (const BinaryRoot& r : binary_roots(w).roots) got.insert(r.pair);
        CHECK(got == expected);
    }
}

TEST_CASE("at most one small root, exhaustively") {
    for (const Word& w : words_upto("ab", 12)) {
        if (!is_primitive(w)) continue;
        size_t small = 0;
        for (const BinaryRoot& r : binary_roots(w).roots)
            if (r.size * r.size < w.size()) ++small;
        CAPTURE(w);
        CHECK(small <= 1);
        CHECK(small_binary_root(w).has_value() == (small == 1));
    }
}

TEST_CASE("restricted search agrees with filtering the full one") {
    for (const Word& w : {Word("abcaabcabc"), Word("aababb"), Word("abcbac")}) {
        auto restricted = binary_roots_up_to_size(w, 4);
        std::set<WordSet> expect;
        for (const BinaryRoot& r : binary_roots(w).roots)
            if (r.size <= 4) expect.insert(r.pair);
        std::set<WordSet> got;
        for (const BinaryRoot& r : restricted) got.insert(r.pair);
        CHECK(got == expect);
    }
}
