#pragma once

// Regular-language engine: star automata of finite sets, Boolean operations,
// and minimal-generating-set extraction for submonoid languages.

#include "monoidlab/wordset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monoidlab {

// Deterministic finite automaton with partial transitions, trimmed on
// construction by the factory functions below. An empty language is a single
// dead state.
struct Dfa {
    Alphabet alphabet;
    int start = 0;
    std::vector<char> accepting;          // per state
    std::vector<int> transitions;         // state * |alphabet| + symbol, -1 = undefined

    int num_states() const { return static_cast<int>(accepting.size()); }
    int next(int state, int sym) const {
        return transitions[static_cast<size_t>(state) * alphabet.size() + sym];
    }
    bool accepts(const Word& w) const;
};

Dfa epsilon_automaton(const Alphabet& a);     // {epsilon}
Dfa literal_automaton(const Alphabet& a, const Word& w);

// Trie NFA with returns to the root, determinized and trimmed. L = X*.
Dfa star_automaton(const WordSet& X);
Dfa star_automaton(const Alphabet& a, const WordSet& X);

Dfa intersect(const Dfa& A, const Dfa& B);
Dfa complement(const Dfa& A);
Dfa concat(const Dfa& A, const Dfa& B);
Dfa difference(const Dfa& A, const Dfa& B);

bool is_empty(const Dfa& A);
bool is_finite(const Dfa& A);
bool equivalent(const Dfa& A, const Dfa& B);
bool subset_of(const Dfa& A, const Dfa& B);

// All accepted words of length <= maxlen, in length-lex order.
std::vector<Word> enumerate_upto(const Dfa& A, size_t maxlen);

// u v^n w description of an infinite regular language witness.
struct PumpDescription {
    Word head, cycle, tail;
    std::string to_string() const { return head + "(" + cycle + ")*" + tail; }
};

struct GeneratorResult {
    enum class Kind { Finite, Infinite };
    Kind kind;
    WordSet generators;                   // exact minimal generating set when Finite
    std::vector<Word> sample;             // generators up to sample_bound when Infinite
    std::optional<PumpDescription> pump;  // one pumpable decomposition when Infinite
};

// Minimal generating set (L \ eps) \ (L \ eps)^2 of a submonoid language.
// Throws NotASubmonoidError if L(M) fails the closure check.
GeneratorResult minimal_generating_set(const Dfa& M, size_t sample_bound = 30);

std::string to_dot(const Dfa& A, const std::string& name = "dfa");

} // namespace monoidlab
