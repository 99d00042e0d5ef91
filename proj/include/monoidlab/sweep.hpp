#pragma once

// Exhaustive experiment harness: the intersection-length sweep and the
// theorem verification suites. Each sweep exists in two flavors: a serial
// reference built on the general automata route, and an OpenMP kernel using a
// specialized fast path. Identical configs produce byte-identical output
// regardless of worker count.

#include "monoidlab/primitive.hpp"
#include "monoidlab/wordset.hpp"

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace monoidlab {

struct SweepConfig {
    int alphabet_size = 2;    // 2..3
    size_t max_gen_len = 3;   // <= 5, generator length for pair enumeration
    size_t max_pair_size = 10;
    size_t max_word_len = 10; // single-word sweeps (binary roots, theta)
    int workers = 0;          // 0 = library default; MONOIDLAB_WORKERS overrides
};

enum class SweepExecution { Serial, Parallel };

struct SweepRecord {
    Word x, y, u, v;
    size_t z_len = 0;
    size_t product_bound = 0;
    size_t sum_bound = 0;
    double ratio = 0.0;
};

struct SweepSummary {
    size_t primitive_pairs = 0;
    size_t pair_combinations = 0;
    size_t records = 0;
    double max_ratio = 0.0;
    SweepRecord argmax;
    std::vector<std::string> violations; // hard failures; expected empty
};

// All words over the first `alphabet_size` letters with lengths in
// [min_len, max_len], in length-lex order.
std::vector<Word> all_words(int alphabet_size, size_t min_len, size_t max_len);

// Canonically ordered primitive pairs within the config bounds.
std::vector<WordSet> enumerate_primitive_pairs(const SweepConfig& cfg,
                                               SweepExecution exec = SweepExecution::Parallel);

// Emits one CSV row per pair-of-pairs with nontrivial intersection:
// x,y,u,v,z_len,product_bound,sum_bound,ratio
SweepSummary run_intersection_sweep(const SweepConfig& cfg, std::ostream& csv,
                                    SweepExecution exec = SweepExecution::Parallel);

enum class Theorem { T2, T4, T5, T6, Theta };

struct VerifyItem {
    std::string name;
    size_t checked = 0;
    bool pass = false;
    std::vector<std::string> counterexamples;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

VerifyReport verify_theorems(const SweepConfig& cfg, const std::set<Theorem>& which,
                             SweepExecution exec = SweepExecution::Parallel);

// Effective worker count: MONOIDLAB_WORKERS, then cfg value, then the OpenMP default.
int effective_workers(const SweepConfig& cfg);

} // namespace monoidlab
