#pragma once

// Membership and factorization of words over a finite set, code tests with
// shortest double-factorization witnesses, and the dependency graph.

#include "monoidlab/wordset.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace monoidlab {

// Indices into a WordSet; concatenating the indexed words gives the factored word.
using Factorization = std::vector<size_t>;

struct DoubleFactorizationWitness {
    Word word;
    Factorization first;
    Factorization second;
};

struct DependencyGraph {
    WordSet vertices;
    std::vector<std::pair<size_t, size_t>> edges; // index pairs, i < j
    size_t components = 0;
};

// w in X*; the empty word is always a member.
bool is_member(const Word& w, const WordSet& X);

// Up to `cap` factorizations of w over X, in lexicographic block-index order.
// Empty iff w is not in X*.
std::vector<Factorization> factorizations(const Word& w, const WordSet& X, size_t cap = 64);

Word apply_factorization(const Factorization& f, const WordSet& X);

struct CodeResult {
    bool code;
    std::optional<DoubleFactorizationWitness> witness; // shortest ambiguous word when not a code
};

// Sardinas-Patterson with shortest-witness reconstruction.
CodeResult is_code(const WordSet& X);

bool is_prefix_code(const WordSet& X);
bool is_suffix_code(const WordSet& X);
bool is_bifix_code(const WordSet& X);

// Edge (u,v) iff u != v and uX* intersects vX*. Emptiness is decided on
// product automata; the prefix relation is used as a fast filter.
DependencyGraph dependency_graph(const WordSet& X);

} // namespace monoidlab
