#pragma once

// Primitive pairs, k-maximality, unique primitive roots of rank-2 sets,
// intersections of 2-maximal submonoids, and the cube occurrence check.

#include "monoidlab/automata.hpp"
#include "monoidlab/wordset.hpp"

#include <array>
#include <optional>

namespace monoidlab {

struct PrimitivePairReport {
    WordSet pair;
    bool primitive = false;
    // a set {u,v} (or a singleton root when the words commute) with
    // pair contained in counterexample* and counterexample != pair
    std::optional<WordSet> counterexample;
};

// {x,y} is primitive iff xy != yx and no smaller-or-equal-size pair generates
// a monoid containing both. Candidates range over factor pairs of x and y.
PrimitivePairReport is_primitive_pair(const Word& x, const Word& y);

struct KMaximalityReport {
    bool maximal = false;
    std::optional<WordSet> witness; // a strictly larger monoid's generators
};

// |X| = k <= 3, total length <= 40.
KMaximalityReport is_k_maximal(const WordSet& X, size_t k);

// Unique primitive pair {u,v} with X in {u,v}*. Requires r(X) = 2; throws
// IsRankOneError / NotRankTwoError otherwise.
WordSet primitive_root_rank2(const WordSet& X);

enum class IntersectionKind { TrivialEpsilon, SingleGenerator, Other };

struct IntersectionReport {
    WordSet left, right;
    IntersectionKind kind = IntersectionKind::TrivialEpsilon;
    std::optional<Word> z;            // the single generator
    std::optional<bool> z_primitive;
    std::optional<bool> bound_ok;     // |z| < (|x|+|y|)(|u|+|v|)
    GeneratorResult generators;       // full result for the Other kind
};

IntersectionReport intersect_primitive_pairs(const WordSet& X, const WordSet& U);

struct CubeOccurrence {
    std::array<Word, 3> host_triple;
    Word pattern;  // xy or yx
    size_t offset; // internal: 1 <= offset, offset + |pattern| < |host|
};

struct CubeReport {
    bool clean = false;
    std::optional<CubeOccurrence> occurrence;
};

// clean iff neither xy nor yx occurs as an internal factor of any word
// of {x,y}^3.
CubeReport cube_occurrence_check(const Word& x, const Word& y);

} // namespace monoidlab
