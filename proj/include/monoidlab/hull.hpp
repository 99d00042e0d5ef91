#pragma once

// Free hull, free rank, combinatorial rank, and Graph Lemma checks.

#include "monoidlab/factorization.hpp"
#include "monoidlab/wordset.hpp"

#include <utility>
#include <vector>

namespace monoidlab {

struct HullResult {
    WordSet basis;         // a code; X is contained in basis*
    size_t free_rank = 0;  // |basis|
    std::vector<std::pair<Word, Word>> reduction_trace; // (replaced, replacement)
};

// Defect-style reduction: while X is not a code, take the shortest
// double-factorization witness, replace the longer of its two diverging first
// blocks v = u t by t. Total length strictly decreases, so this terminates.
HullResult free_hull(const WordSet& X);

enum class RankMode { ExactSmall, DecideLe2 };

struct RankResult {
    size_t rank = 0;
    WordSet witness;       // X is contained in witness*, |witness| = rank
};

// ExactSmall enumerates candidate generator sets drawn from factors of X
// (guardrail: total input length <= 40). DecideLe2 only distinguishes ranks
// 1, 2 and ">2" (rank 0 is never returned; X must be nonempty).
// Throws NotRankTwoError from DecideLe2 when the rank exceeds 2.
RankResult combinatorial_rank(const WordSet& X, RankMode mode);

// All rank-2 witness pairs within the prefix-candidate enumeration, sorted by
// (total length, canonical order). Empty when the rank differs from 2.
std::vector<WordSet> rank2_witnesses(const WordSet& X);

struct GraphLemmaReport {
    size_t free_rank = 0;
    size_t components = 0;
    bool holds = false;
    bool vacuous = false;  // X was a code, lemma hypothesis not met
};

GraphLemmaReport graph_lemma_check(const WordSet& X);

} // namespace monoidlab
