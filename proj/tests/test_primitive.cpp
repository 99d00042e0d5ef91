#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoidlab/automata.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/factorization.hpp"
#include "monoidlab/primitive.hpp"

using namespace monoidlab;

TEST_CASE("primitive pair spot values") {
    CHECK(is_primitive_pair("a", "bc").primitive);
    CHECK(is_primitive_pair("abcab", "cb").primitive);
    CHECK(is_primitive_pair("abc", "bcb").primitive);
    CHECK(is_primitive_pair("a", "b").primitive);

    // {abca, bc} sits inside {a, bc}*
    PrimitivePairReport r = is_primitive_pair("abca", "bc");
    CHECK_FALSE(r.primitive);
    REQUIRE(r.counterexample.has_value());
    CHECK(*r.counterexample == WordSet{"a", "bc"});

    // primitive words do not make the pair primitive
    CHECK_FALSE(is_primitive_pair("abcabc", "bcabca").primitive);

    PrimitivePairReport s = is_primitive_pair("ab", "ba");
    CHECK_FALSE(s.primitive);
    CHECK(*s.counterexample == WordSet{"a", "b"});
}

TEST_CASE("commuting words collapse to a singleton root") {
    PrimitivePairReport r = is_primitive_pair("ab", "abab");
    CHECK_FALSE(r.primitive);
    REQUIRE(r.counterexample.has_value());
    CHECK(*r.counterexample == WordSet{"ab"});
}

TEST_CASE("counterexamples really contain the pair") {
    for (auto [x, y] : std::vector<std::pair<Word, Word>>{
             {"abca", "bc"}, {"abcabc", "bcabca"}, {"aab", "ab"}, {"ab", "ba"}}) {
        PrimitivePairReport r = is_primitive_pair(x, y);
        CAPTURE(x);
            CAPTURE(y);
        if (r.primitive) continue;
        REQUIRE(r.counterexample.has_value());
        CHECK(*r.counterexample != r.pair);
        CHECK(is_member(x, *r.counterexample));
        CHECK(is_member(y, *r.counterexample));
    }
}

TEST_CASE("degenerate pairs are rejected") {
    CHECK_THROWS_AS(is_primitive_pair("ab", "ab"), InvalidPairError);
    CHECK_THROWS_AS(is_primitive_pair("", "ab"), InvalidPairError);
}

TEST_CASE("k-maximality") {
    CHECK(is_k_maximal(WordSet{"a", "cbd", "dbd"}, 3).maximal);
    KMaximalityReport r = is_k_maximal(WordSet{"a", "cbd", "dcbd"}, 3);
    CHECK_FALSE(r.maximal);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == WordSet{"a", "d", "cb"});

    CHECK(is_k_maximal(WordSet{"a", "bc"}, 2).maximal);
    CHECK_FALSE(is_k_maximal(WordSet{"ab", "ba"}, 2).maximal);
    CHECK_FALSE(is_k_maximal(WordSet{"abca", "bc"}, 2).maximal);
}

TEST_CASE("pair primitivity is 2-maximality") {
    for (auto [x, y] : std::vector<std::pair<Word, Word>>{
             {"a", "bc"}, {"abcab", "cb"}, {"abca", "bc"}, {"ab", "ba"}, {"aab", "aba"}}) {
        CAPTURE(x);
            CAPTURE(y);
        CHECK(is_primitive_pair(x, y).primitive == is_k_maximal(WordSet{x, y}, 2).maximal);
    }
}

TEST_CASE("primitive pairs are non-commuting bifix codes") {
    // and every word with a power in the monoid is itself in it (purity)
    std::vector<Word> words, layer{""};
    for (size_t len = 1; len <= 4; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (char c : {'a', 'b', 'c'}) next.push_back(w + c);
        words.insert(words.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    for (const WordSet& X : {WordSet{"a", "bc"}, WordSet{"abcab", "cb"}, WordSet{"abc", "bcb"},
                             WordSet{"ab", "cb"}, WordSet{"a", "b"}}) {
        REQUIRE(is_primitive_pair(X[0], X[1]).primitive);
        CHECK(is_bifix_code(X));
        CHECK_FALSE(commutes(X[0], X[1]));
        for (const Word& w : words) {
            if (is_member(w, X)) continue;
            Word p = w;
            for (int n = 2; n <= 4; ++n) {
                p += w;
                CAPTURE(X);
                CAPTURE(w);
                CHECK_FALSE(is_member(p, X));
            }
        }
    }
}

TEST_CASE("unique primitive root of a rank-2 set") {
    CHECK(primitive_root_rank2(WordSet{"abcabc", "bcabca"}) == WordSet{"a", "bc"});
    CHECK(primitive_root_rank2(WordSet{"abca", "bc"}) == WordSet{"a", "bc"});
    // over a binary alphabet the only primitive pair is {a,b}
    CHECK(primitive_root_rank2(WordSet{"aab", "aba"}) == WordSet{"a", "b"});
    CHECK(primitive_root_rank2(WordSet{"aabca", "aa", "bcaaa"}) == WordSet{"a", "bc"});
    // rank-1 and rank->2 inputs are rejected
    CHECK_THROWS_AS(primitive_root_rank2(WordSet{"aa", "aaa"}), IsRankOneError);
    try {
        primitive_root_rank2(WordSet{"abab", "abababab"});
        FAIL("expected IsRankOneError");
    } catch (const IsRankOneError& e) {
        CHECK(e.root == "ab");
    }
    CHECK_THROWS_AS(primitive_root_rank2(WordSet{"a", "b", "c"}), NotRankTwoError);
}

TEST_CASE("roots of primitive pairs are themselves") {
    for (const WordSet& X : {WordSet{"a", "bc"}, WordSet{"abcab", "cb"}, WordSet{"abc", "bcb"}})
        CHECK(primitive_root_rank2(X) == X);
}

TEST_CASE("intersections of 2-maximal monoids") {
    IntersectionReport r = intersect_primitive_pairs(WordSet{"abcab", "cb"}, WordSet{"abc", "bcb"});
    REQUIRE(r.kind == IntersectionKind::SingleGenerator);
    CHECK(*r.z == "abcabcbcb");
    CHECK(*r.z_primitive);
    CHECK(*r.bound_ok); // 9 < 7 * 6

    IntersectionReport s = intersect_primitive_pairs(WordSet{"a", "bc"}, WordSet{"a", "cb"});
    REQUIRE(s.kind == IntersectionKind::SingleGenerator);
    CHECK(*s.z == "a");

    // bca lies in both {a,bc}* and {b,ca}*, so that intersection is not trivial
    IntersectionReport u = intersect_primitive_pairs(WordSet{"a", "bc"}, WordSet{"b", "ca"});
    REQUIRE(u.kind == IntersectionKind::SingleGenerator);
    CHECK(*u.z == "bca");

    // but no word can continue after a leading b in both {a,bc}* and {c,ba}*
    IntersectionReport t = intersect_primitive_pairs(WordSet{"a", "bc"}, WordSet{"c", "ba"});
    CHECK(t.kind == IntersectionKind::TrivialEpsilon);

    IntersectionReport self = intersect_primitive_pairs(WordSet{"a", "bc"}, WordSet{"a", "bc"});
    CHECK(self.kind == IntersectionKind::Other);
    CHECK(self.generators.kind == GeneratorResult::Kind::Finite);
    CHECK(self.generators.generators == WordSet{"a", "bc"});
}

TEST_CASE("non-2-maximal monoids may intersect in a pair or an infinite set") {
    IntersectionReport r = intersect_primitive_pairs(WordSet{"abca", "bc"}, WordSet{"a", "bcabc"});
    CHECK(r.kind == IntersectionKind::Other);
    REQUIRE(r.generators.kind == GeneratorResult::Kind::Finite);
    CHECK(r.generators.generators == WordSet{"abcabc", "bcabca"});

    IntersectionReport s = intersect_primitive_pairs(WordSet{"aab", "aba"}, WordSet{"a", "baaba"});
    CHECK(s.kind == IntersectionKind::Other);
    REQUIRE(s.generators.kind == GeneratorResult::Kind::Infinite);
    REQUIRE(s.generators.pump.has_value());
    CHECK(s.generators.pump->to_string() == "a(abaaba)*baaba");
}

TEST_CASE("cube occurrence check") {
    CHECK(cube_occurrence_check("a", "bc").clean);
    CHECK(cube_occurrence_check("abcab", "cb").clean);
    // non-primitive pair that is still clean: the converse fails
    CHECK(cube_occurrence_check("abcaa", "bc").clean);

    CubeReport r = cube_occurrence_check("abcabca", "bcaabcabc");
    CHECK_FALSE(r.clean);
    REQUIRE(r.occurrence.has_value());
    const CubeOccurrence& o = *r.occurrence;
    CHECK(o.pattern == "abcabca" + Word("bcaabcabc")); // xy
    Word host = o.host_triple[0] + o.host_triple[1] + o.host_triple[2];
    CHECK(o.host_triple == std::array<Word, 3>{"bcaabcabc", "abcabca", "abcabca"}); // yxx
    CHECK(o.offset >= 1);
    CHECK(o.offset + o.pattern.size() < host.size());
    CHECK(host.substr(o.offset, o.pattern.size()) == o.pattern);
}
