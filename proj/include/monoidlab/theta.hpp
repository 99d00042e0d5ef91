#pragma once

// Involutive (anti)morphisms, theta-powers, theta-roots, theta-primitivity,
// theta-invariance, and the bridge checks between pseudo-primitivity and
// primitive pairs.

#include "monoidlab/wordset.hpp"

#include <map>
#include <optional>
#include <string>

namespace monoidlab {

enum class InvolutionKind { Morphic, Antimorphic };

class Involution {
public:
    // letter_map must be an involution of the alphabet; letters not mentioned
    // map to themselves. The morphic identity is rejected (the induced map on
    // words would be the identity).
    Involution(const Alphabet& alphabet, std::map<char, char> letter_map, InvolutionKind kind);

    static Involution reversal(const Alphabet& alphabet);

    // CLI syntax "a:b,b:a,c:c"
    static Involution parse(const Alphabet& alphabet, const std::string& spec, InvolutionKind kind);

    InvolutionKind kind() const { return kind_; }
    const Alphabet& alphabet() const { return alphabet_; }
    char map_letter(char c) const;
    Word apply(const Word& w) const;

private:
    Alphabet alphabet_;
    std::map<char, char> map_;
    InvolutionKind kind_;
};

inline Word apply_theta(const Involution& t, const Word& w) { return t.apply(w); }

// w in t{t, theta(t)}*: the first block is anchored to t itself.
bool is_theta_power(const Word& w, const Word& t, const Involution& theta);

// Unique theta-primitive u with w a theta-power of u (shortest such prefix).
Word theta_root(const Word& w, const Involution& theta);

bool is_theta_primitive(const Word& w, const Involution& theta);

bool is_theta_invariant(const WordSet& X, const Involution& theta);

bool is_theta_palindrome(const Word& w, const Involution& theta);

struct BridgeReport {
    bool theta_primitive = false;
    bool pair_primitive = false;               // {w, theta(w)} a primitive pair
    std::optional<bool> prop6_equivalence;     // morphic only
    std::optional<bool> antimorphic_implication; // pair primitive => theta primitive
    std::optional<WordSet> pair_root;          // binary root of {w, theta(w)} when not primitive
    std::optional<WordSet> palindrome_pair;    // {p,q} theta-palindromes with w in {p,q}*
    std::optional<bool> kms_clean;             // cube check on (w, theta(w))
};

// Evaluates the section-bridging propositions on one instance.
// Throws DegeneratePairError when w = theta(w).
BridgeReport check_bridge_props(const Word& w, const Involution& theta);

} // namespace monoidlab
