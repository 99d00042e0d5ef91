#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoidlab/errors.hpp"
#include "monoidlab/factorization.hpp"
#include "monoidlab/primitive.hpp"
#include "monoidlab/theta.hpp"

#include <functional>
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

// all words of t{t, theta(t)}* up to maxlen, by direct expansion
std::set<Word> theta_powers_oracle(const Word& t, const Involution& theta, size_t maxlen) {
    std::set<Word> out;
    Word tt = theta.apply(t);
    std::function<void(const Word&)> go = [&](const Word& w) {
        if (w.size() > maxlen || out.count(w)) return;
        out.insert(w);
        go(w + t);
        go(w + tt);
    };
    go(t);
    return out;
}

const Involution kSwap = Involution::parse(Alphabet("abc"), "a:b,b:a,c:c", InvolutionKind::Morphic);

} // namespace

TEST_CASE("involutions validate their letter maps") {
    CHECK_THROWS_AS(Involution::parse(Alphabet("abc"), "a:b,b:c,c:a", InvolutionKind::Morphic),
                    InvalidPairError);
    // the morphic identity is rejected; the antimorphic one (reversal) is fine
    CHECK_THROWS_AS(Involution::parse(Alphabet("ab"), "a:a,b:b", InvolutionKind::Morphic),
                    InvalidPairError);
    CHECK_NOTHROW(Involution::reversal(Alphabet("ab")));
    CHECK_THROWS_AS(Involution::parse(Alphabet("ab"), "a;b", InvolutionKind::Morphic),
                    InvalidPairError);
}

TEST_CASE("applying involutions") {
    CHECK(kSwap.apply("abcabcbac") == "bacbacabc");
    CHECK(kSwap.apply(kSwap.apply("abcacb")) == "abcacb");
    Involution rev = Involution::reversal(Alphabet("abc"));
    CHECK(rev.apply("abc") == "cba");
    CHECK(rev.apply("") == "");
    Involution mixed = Involution::parse(Alphabet("ab"), "a:b,b:a", InvolutionKind::Antimorphic);
    CHECK(mixed.apply("aab") == "abb");
}

TEST_CASE("theta powers match direct expansion") {
    std::vector<Involution> thetas = {kSwap, Involution::reversal(Alphabet("abc"))};
    for (const Involution& theta : thetas)
        for (const Word& t : words_upto("abc", 2)) {
            auto powers = theta_powers_oracle(t, theta, 6);
            for (const Word& w : words_upto("abc", 6)) {
                CAPTURE(t);
            CAPTURE(w);
                CHECK(is_theta_power(w, t, theta) == (powers.count(w) > 0));
            }
        }
}

TEST_CASE("theta powers anchor the first block") {
    // bacabc is in {abc, bac}* but its first block is theta(t), not t
    CHECK(is_theta_power("abcabcbac", "abc", kSwap));
    CHECK_FALSE(is_theta_power("bacabc", "abc", kSwap));
    CHECK(is_theta_power("abc", "abc", kSwap)); // zero trailing blocks
    CHECK_THROWS_AS(is_theta_power("abc", "", kSwap), EmptyWordError);
}

TEST_CASE("theta root of the showcase word") {
    CHECK(theta_root("abcabcbac", kSwap) == "abc");
    CHECK(is_theta_primitive("abc", kSwap));
    CHECK_FALSE(is_theta_primitive("abcbac", kSwap));
    CHECK(theta_root("abcbac", kSwap) == "abc");
}

TEST_CASE("theta root is the unique theta-primitive generator") {
    std::vector<Involution> thetas = {
        Involution::parse(Alphabet("ab"), "a:b,b:a", InvolutionKind::Morphic),
        Involution::reversal(Alphabet("ab")),
        Involution::parse(Alphabet("ab"), "a:b,b:a", InvolutionKind::Antimorphic)};
    for (const Involution& theta : thetas)
        for (const Word& w : words_upto("ab", 9)) {
            Word r = theta_root(w, theta);
            CAPTURE(w);
            CAPTURE(r);
            CHECK(is_theta_primitive(r, theta));
            CHECK(is_theta_power(w, r, theta));
            // uniqueness: no other theta-primitive prefix generates w
            size_t count = 0;
            for (size_t len = 1; len <= w.size(); ++len) {
                Word t = w.substr(0, len);
                if (is_theta_power(w, t, theta) && is_theta_primitive(t, theta)) ++count;
            }
            CHECK(count == 1);
        }
}

TEST_CASE("invariance and palindromes") {
    CHECK(is_theta_invariant(WordSet{"abcabcbac", "bacbacabc"}, kSwap));
    CHECK_FALSE(is_theta_invariant(WordSet{"abc", "abc"}, kSwap));
    CHECK(is_theta_invariant(WordSet{"abc", "bac"}, kSwap));
    Involution rev = Involution::reversal(Alphabet("abc"));
    CHECK(is_theta_palindrome("abba", rev));
    CHECK(is_theta_palindrome("cbc", rev));
    CHECK_FALSE(is_theta_palindrome("ab", rev));
    CHECK_FALSE(is_theta_invariant(WordSet{"ab"}, rev));
    // invariant either as {x, theta(x)} or as two theta-palindromes
    CHECK(is_theta_invariant(WordSet{"abbbbabba", "abbabbbba"}, rev));
    CHECK(is_theta_invariant(WordSet{"abcbbcba", "abcba"}, rev));
}

TEST_CASE("theta-invariant pairs of palindromes have theta-invariant roots") {
    Involution rev = Involution::reversal(Alphabet("abc"));
    WordSet root = primitive_root_rank2(WordSet{"abcbbcba", "abcba"});
    CHECK(root == WordSet{"a", "bcb"});
    CHECK(is_theta_invariant(root, rev));

    // {abb,bba} tiles both words and is reversal-invariant, but it is not a
    // primitive pair over {a,b}; the primitive root is {a,b} itself, which is
    // (trivially) reversal-invariant too
    WordSet tiles{"abb", "bba"};
    CHECK(is_member("abbbbabba", tiles));
    CHECK(is_member("abbabbbba", tiles));
    CHECK(is_theta_invariant(tiles, Involution::reversal(Alphabet("ab"))));
    WordSet root2 = primitive_root_rank2(WordSet{"abbbbabba", "abbabbbba"});
    CHECK(root2 == WordSet{"a", "b"});
}

TEST_CASE("theta-invariant pair with a theta-invariant binary root") {
    // {abcabcbac, abcbacabc} is not primitive; its root {abc, bac} is swap-invariant
    BridgeReport rep = check_bridge_props("abcabcbac", kSwap);
    CHECK_FALSE(rep.pair_primitive);
    REQUIRE(rep.pair_root.has_value());
    CHECK(*rep.pair_root == WordSet{"abc", "bac"});
    CHECK(is_theta_invariant(*rep.pair_root, kSwap));
}

TEST_CASE("morphic equivalence: theta-primitive iff the pair is primitive") {
    Involution swap2 = Involution::parse(Alphabet("ab"), "a:b,b:a", InvolutionKind::Morphic);
    for (const Word& w : words_upto("ab", 8)) {
        if (swap2.apply(w) == w) continue;
        BridgeReport rep = check_bridge_props(w, swap2);
        CAPTURE(w);
        REQUIRE(rep.prop6_equivalence.has_value());
        CHECK(*rep.prop6_equivalence);
    }
    for (const Word& w : words_upto("abc", 6)) {
        if (kSwap.apply(w) == w) continue;
        BridgeReport rep = check_bridge_props(w, kSwap);
        CAPTURE(w);
        CHECK(*rep.prop6_equivalence);
    }
}

TEST_CASE("antimorphic: pair primitivity implies theta-primitivity, not conversely") {
    Involution rev = Involution::reversal(Alphabet("abc"));
    for (const Word& w : words_upto("abc", 5)) {
        if (rev.apply(w) == w) continue;
        BridgeReport rep = check_bridge_props(w, rev);
        CAPTURE(w);
        REQUIRE(rep.antimorphic_implication.has_value());
        CHECK(*rep.antimorphic_implication);
    }
    // the converse fails on this word
    BridgeReport rep = check_bridge_props("abbaabbacbc", rev);
    CHECK(rep.theta_primitive);
    CHECK_FALSE(rep.pair_primitive);
    REQUIRE(rep.pair_root.has_value());
    CHECK(*rep.pair_root == WordSet{"cbc", "abba"});
    REQUIRE(rep.palindrome_pair.has_value());
    CHECK(is_theta_palindrome((*rep.palindrome_pair)[0], rev));
    CHECK(is_theta_palindrome((*rep.palindrome_pair)[1], rev));
}

TEST_CASE("degenerate pair") {
    Involution rev = Involution::reversal(Alphabet("ab"));
    CHECK_THROWS_AS(check_bridge_props("aba", rev), DegeneratePairError);
}

TEST_CASE("cube property transfers to theta-primitive words") {
    // for theta-primitive w, neither w.theta(w) nor theta(w).w occurs internally
    // in a word of {w, theta(w)}^3
    Involution rev = Involution::reversal(Alphabet("ab"));
    for (const Word& w : words_upto("ab", 7)) {
        if (rev.apply(w) == w || !is_theta_primitive(w, rev)) continue;
        BridgeReport rep = check_bridge_props(w, rev);
        CAPTURE(w);
        REQUIRE(rep.kms_clean.has_value());
        CHECK(*rep.kms_clean);
    }
}
