#pragma once

// Binary roots of a single primitive word.

#include "monoidlab/factorization.hpp"
#include "monoidlab/wordset.hpp"

#include <optional>
#include <vector>

namespace monoidlab {

struct BinaryRoot {
    WordSet pair;           // a primitive pair
    size_t size;            // |x| + |y|
    Factorization tiling;   // the unique factorization of the word over pair
};

struct BinaryRootReport {
    Word word;
    std::vector<BinaryRoot> roots;       // ordered by size, then canonically
    std::optional<WordSet> small_root;   // the unique root with size^2 < |word|
};

// All primitive pairs {x,y} such that w factors over {x,y} with both
// components used. Throws NotPrimitiveError for non-primitive input.
BinaryRootReport binary_roots(const Word& w);

// Just the unique root of size < sqrt(|w|), when it exists. Size bound is
// strict: size * size < |w|.
std::optional<WordSet> small_binary_root(const Word& w);

// Restricted search: only roots with size <= max_size. Used by exhaustive
// verification where the full enumeration would be wasteful.
std::vector<BinaryRoot> binary_roots_up_to_size(const Word& w, size_t max_size);

// w in {x,y}* with at least one copy of each component.
bool tiles_with_both(const Word& w, const Word& x, const Word& y);

} // namespace monoidlab
