#include "monoidlab/sweep.hpp"
#include "monoidlab/automata.hpp"
#include "monoidlab/binary_root.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/factorization.hpp"
#include "monoidlab/theta.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monoidlab {

namespace {

void validate(const SweepConfig& cfg) {
    if (cfg.alphabet_size < 2 || cfg.alphabet_size > 3)
        throw TooLargeError("alphabet_size must be 2 or 3");
    if (cfg.max_gen_len > 5) throw TooLargeError("max_gen_len must be <= 5");
    if (cfg.max_pair_size > 10) throw TooLargeError("max_pair_size must be <= 10");
}

Alphabet sweep_alphabet(const SweepConfig& cfg) {
    return Alphabet(std::string("abc").substr(0, static_cast<size_t>(cfg.alphabet_size)));
}

// Cycle automaton for z*: the specialized right-hand side of the fast check.
Dfa cycle_automaton(const Alphabet& a, const Word& z) {
    const int k = a.size();
    const int n = static_cast<int>(z.size());
    Dfa d;
    d.alphabet = a;
    d.start = 0;
    d.accepting.assign(n, 0);
    d.accepting[0] = 1;
    d.transitions.assign(static_cast<size_t>(n) * k, -1);
    for (int i = 0; i < n; ++i)
        d.transitions[static_cast<size_t>(i) * k + a.index(z[i])] = (i + 1) % n;
    return d;
}

// Shortest (then lex-least) nonempty accepted word, if any.
std::optional<Word> shortest_nonempty_word(const Dfa& A) {
    const int k = A.alphabet.size();
    std::vector<char> seen(A.num_states(), 0);
    std::vector<std::pair<int, Word>> frontier{{A.start, Word{}}};
    seen[A.start] = 1;
    while (!frontier.empty()) {
        std::vector<std::pair<int, Word>> next;
        for (const auto& [q, w] : frontier)
            for (int c = 0; c < k; ++c) {
                int to = A.next(q, c);
                if (to < 0) continue;
                Word wc = w + A.alphabet.symbol(c);
                if (A.accepting[to]) return wc;
                if (!seen[to]) {
                    seen[to] = 1;
                    next.emplace_back(to, wc);
                }
            }
        frontier = std::move(next);
    }
    return std::nullopt;
}

struct PairIntersection {
    bool nontrivial = false;
    Word z;
    bool is_z_star = false; // intersection equals z* exactly
};

// Fast kernel: product of the two precomputed star automata, shortest
// nonempty word, then an exact equivalence check against z*.
PairIntersection fast_intersection(const Dfa& sx, const Dfa& su) {
    Dfa inter = intersect(sx, su);
    auto z = shortest_nonempty_word(inter);
    PairIntersection out;
    if (!z) return out;
    out.nontrivial = true;
    out.z = *z;
    out.is_z_star = equivalent(inter, cycle_automaton(inter.alphabet, *z));
    return out;
}

std::string pair_of_pairs(const WordSet& X, const WordSet& U) {
    return "{" + X.to_csv() + "} x {" + U.to_csv() + "}";
}

} // namespace

int effective_workers(const SweepConfig& cfg) {
    if (const char* env = std::getenv("MONOIDLAB_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    if (cfg.workers > 0) return cfg.workers;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<Word> all_words(int alphabet_size, size_t min_len, size_t max_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * static_cast<size_t>(alphabet_size));
        for (const Word& w : layer)
            for (int c = 0; c < alphabet_size; ++c)
                next.push_back(w + static_cast<char>('a' + c));
        layer = std::move(next);
        if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<WordSet> enumerate_primitive_pairs(const SweepConfig& cfg, SweepExecution exec) {
    validate(cfg);
    const bool parallel = exec == SweepExecution::Parallel;
    const int workers = effective_workers(cfg);
    std::vector<Word> words = all_words(cfg.alphabet_size, 1, cfg.max_gen_len);
    const size_t n = words.size();

    std::vector<std::pair<size_t, size_t>> cands;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (words[i].size() + words[j].size() <= cfg.max_pair_size)
                cands.emplace_back(i, j);

    std::vector<char> keep(cands.size(), 0);
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers) if (parallel)
    for (long long c = 0; c < static_cast<long long>(cands.size()); ++c) {
        const Word& x = words[cands[c].first];
        const Word& y = words[cands[c].second];
        if (x + y == y + x) continue;
        keep[c] = is_primitive_pair(x, y).primitive ? 1 : 0;
    }

    std::vector<WordSet> out;
    for (size_t c = 0; c < cands.size(); ++c)
        if (keep[c]) out.push_back(WordSet{words[cands[c].first], words[cands[c].second]});
    return out;
}

SweepSummary run_intersection_sweep(const SweepConfig& cfg, std::ostream& csv,
                                    SweepExecution exec) {
    validate(cfg);
    const bool parallel = exec == SweepExecution::Parallel;
    const int workers = effective_workers(cfg);
    const Alphabet alpha = sweep_alphabet(cfg);
    std::vector<WordSet> pairs = enumerate_primitive_pairs(cfg, exec);
    const size_t np = pairs.size();

    std::vector<Dfa> stars(np);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers) if (parallel)
    for (long long p = 0; p < static_cast<long long>(np); ++p)
        stars[p] = star_automaton(alpha, pairs[p]);

    std::vector<std::vector<SweepRecord>> rows(np);
    std::vector<std::vector<std::string>> viols(np);
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (parallel)
    for (long long p = 0; p < static_cast<long long>(np); ++p) {
        for (size_t q = static_cast<size_t>(p) + 1; q < np; ++q) {
            const WordSet& X = pairs[p];
            const WordSet& U = pairs[q];
            Word z;
            bool nontrivial, single, primitive_z;
            if (parallel) {
                PairIntersection pi = fast_intersection(stars[p], stars[q]);
                nontrivial = pi.nontrivial;
                single = pi.is_z_star;
                z = pi.z;
                primitive_z = nontrivial && is_primitive(z);
            } else {
                // reference route through the general generator extraction
                IntersectionReport rep = intersect_primitive_pairs(X, U);
                nontrivial = rep.kind != IntersectionKind::TrivialEpsilon;
                single = rep.kind == IntersectionKind::SingleGenerator;
                z = rep.z.value_or(Word{});
                primitive_z = rep.z_primitive.value_or(false);
            }
            if (!nontrivial) continue;
            if (!single || !primitive_z) {
                viols[p].push_back("intersection of " + pair_of_pairs(X, U) +
                                   " is not generated by one primitive word");
                continue;
            }
            SweepRecord r;
            r.x = X[0];
            r.y = X[1];
            r.u = U[0];
            r.v = U[1];
            r.z_len = z.size();
            r.product_bound = X.total_length() * U.total_length();
            r.sum_bound = X.total_length() + U.total_length();
            r.ratio = static_cast<double>(r.z_len) / static_cast<double>(r.product_bound);
            if (r.z_len >= r.product_bound)
                viols[p].push_back("length bound violated for " + pair_of_pairs(X, U) +
                                   ": |z| = " + std::to_string(r.z_len));
            rows[p].push_back(std::move(r));
        }
    }

    SweepSummary sum;
    sum.primitive_pairs = np;
    sum.pair_combinations = np * (np - 1) / 2;
    csv << "x,y,u,v,z_len,product_bound,sum_bound,ratio\n";
    for (size_t p = 0; p < np; ++p) {
        for (const SweepRecord& r : rows[p]) {
            std::ostringstream ratio;
            ratio << std::fixed << std::setprecision(6) << r.ratio;
            csv << r.x << ',' << r.y << ',' << r.u << ',' << r.v << ',' << r.z_len << ','
                << r.product_bound << ',' << r.sum_bound << ',' << ratio.str() << '\n';
            ++sum.records;
            if (r.ratio > sum.max_ratio) {
                sum.max_ratio = r.ratio;
                sum.argmax = r;
            }
        }
        for (auto& v : viols[p]) sum.violations.push_back(std::move(v));
    }
    return sum;
}

bool VerifyReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.pass; });
}

namespace {

// bounded, index-ordered counterexample collection
struct CexSink {
    std::vector<std::pair<size_t, std::string>> entries;
    void add(size_t idx, std::string msg) {
#pragma omp critical(monoidlab_cex)
        if (entries.size() < 50) entries.emplace_back(idx, std::move(msg));
    }
    std::vector<std::string> sorted() {
        std::sort(entries.begin(), entries.end());
        std::vector<std::string> out;
        for (auto& [idx, msg] : entries) out.push_back(std::move(msg));
        return out;
    }
};

VerifyItem verify_t2(const SweepConfig& cfg, bool parallel, int workers) {
    VerifyItem item;
    item.name = "T2+Prop4: pairwise intersections are z* with z primitive and short";
    const Alphabet alpha = sweep_alphabet(cfg);
    std::vector<WordSet> pairs = enumerate_primitive_pairs(
        cfg, parallel ? SweepExecution::Parallel : SweepExecution::Serial);
    const size_t np = pairs.size();
    std::vector<Dfa> stars(np);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers) if (parallel)
    for (long long p = 0; p < static_cast<long long>(np); ++p)
        stars[p] = star_automaton(alpha, pairs[p]);

    CexSink cex;
    size_t checked = 0;
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (parallel) reduction(+ : checked)
    for (long long p = 0; p < static_cast<long long>(np); ++p)
        for (size_t q = static_cast<size_t>(p) + 1; q < np; ++q) {
            ++checked;
            PairIntersection pi = fast_intersection(stars[p], stars[q]);
            if (!pi.nontrivial) continue;
            bool ok = pi.is_z_star && is_primitive(pi.z) &&
                      pi.z.size() < pairs[p].total_length() * pairs[q].total_length();
            if (!ok)
                cex.add(static_cast<size_t>(p) * np + q,
                        pair_of_pairs(pairs[p], pairs[q]));
        }
    item.checked = checked;
    item.counterexamples = cex.sorted();
    item.pass = item.counterexamples.empty();
    return item;
}

VerifyItem verify_t4(const SweepConfig& cfg, bool parallel, int workers) {
    VerifyItem item;
    item.name = "T4: every rank-2 set of <=3 words has exactly one primitive root";
    std::vector<Word> words = all_words(cfg.alphabet_size, 1, cfg.max_gen_len);
    const size_t n = words.size();

    // index triples (i, j, k) with i <= j <= k encode sets of 1..3 words
    std::vector<std::array<size_t, 3>> sets;
    for (size_t i = 0; i < n; ++i) {
        sets.push_back({i, i, i});
        for (size_t j = i + 1; j < n; ++j) {
            sets.push_back({i, j, j});
            for (size_t k = j + 1; k < n; ++k) sets.push_back({i, j, k});
        }
    }

    CexSink cex;
    size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 256) num_threads(workers) if (parallel) reduction(+ : checked)
    for (long long s = 0; s < static_cast<long long>(sets.size()); ++s) {
        auto [i, j, k] = sets[s];
        WordSet X{words[i], words[j], words[k]};
        // rank-1 sets are out of scope here
        Word root0 = primitive_word_root(X[0]).root;
        bool rank1 = true;
        for (const Word& w : X)
            if (primitive_word_root(w).root != root0) {
                rank1 = false;
                break;
            }
        if (rank1) continue;

        // all pairs covering X; generators of a covering pair are factors of X
        std::set<Word, LengthLexLess> cand_set;
        for (const Word& w : X) cand_set.merge(factors(w));
        std::vector<Word> cands(cand_set.begin(), cand_set.end());
        size_t primitive_roots = 0;
        bool covered = false;
        Word seen_root;
        for (size_t a = 0; a < cands.size(); ++a)
            for (size_t b = a + 1; b < cands.size(); ++b) {
                bool all = true;
                for (const Word& w : X)
                    if (!is_member(w, WordSet{cands[a], cands[b]})) {
                        all = false;
                        break;
                    }
                if (!all) continue;
                covered = true;
                if (is_primitive_pair(cands[a], cands[b]).primitive) {
                    ++primitive_roots;
                    seen_root = cands[a] + "," + cands[b];
                }
            }
        if (!covered) continue; // rank >= 3
        ++checked;
        if (primitive_roots != 1)
            cex.add(static_cast<size_t>(s), "{" + X.to_csv() + "} has " +
                                                std::to_string(primitive_roots) +
                                                " primitive roots (last: " + seen_root + ")");
    }
    item.checked = checked;
    item.counterexamples = cex.sorted();
    item.pass = item.counterexamples.empty();
    return item;
}

VerifyItem verify_t5(const SweepConfig& cfg, bool parallel, int workers) {
    VerifyItem item;
    item.name = "T5: xy and yx never occur internally in {x,y}^3 for primitive pairs";
    std::vector<WordSet> pairs = enumerate_primitive_pairs(
        cfg, parallel ? SweepExecution::Parallel : SweepExecution::Serial);
    CexSink cex;
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers) if (parallel)
    for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p)
        if (!cube_occurrence_check(pairs[p][0], pairs[p][1]).clean)
            cex.add(static_cast<size_t>(p), "{" + pairs[p].to_csv() + "}");
    item.checked = pairs.size();
    item.counterexamples = cex.sorted();
    item.pass = item.counterexamples.empty();
    return item;
}

VerifyItem verify_t6(const SweepConfig& cfg, bool parallel, int workers) {
    VerifyItem item;
    item.name = "T6: at most one binary root of size below sqrt(|w|)";
    std::vector<Word> words = all_words(cfg.alphabet_size, 1, cfg.max_word_len);
    CexSink cex;
    size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 512) num_threads(workers) if (parallel) reduction(+ : checked)
    for (long long i = 0; i < static_cast<long long>(words.size()); ++i) {
        const Word& w = words[i];
        if (!is_primitive(w)) continue;
        ++checked;
        size_t cap = 1;
        while ((cap + 1) * (cap + 1) < w.size()) ++cap;
        size_t small = 0;
        for (const BinaryRoot& r : binary_roots_up_to_size(w, std::max<size_t>(cap, 2)))
            if (r.size * r.size < w.size()) ++small;
        if (small > 1) {
            cex.add(static_cast<size_t>(i), w + " has " + std::to_string(small) + " small roots");
            continue;
        }
        // square-free remark: no root of size below |w|/4
        if (is_square_free(w))
            for (const BinaryRoot& r : binary_roots_up_to_size(w, w.size() / 4 + 1))
                if (4 * r.size < w.size())
                    cex.add(static_cast<size_t>(i),
                            w + " is square-free but has a root of size " + std::to_string(r.size));
    }
    item.checked = checked;
    item.counterexamples = cex.sorted();
    item.pass = item.counterexamples.empty();
    return item;
}

std::vector<Involution> all_involutions(const Alphabet& a) {
    std::vector<Involution> out;
    // enumerate involutive letter permutations: fixpoints plus disjoint swaps
    const int k = a.size();
    std::vector<int> perm(k);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            std::map<char, char> m;
            for (int q = 0; q < k; ++q) m[a.symbol(q)] = a.symbol(perm[q]);
            bool identity = std::all_of(m.begin(), m.end(),
                                        [](auto& kv) { return kv.first == kv.second; });
            if (!identity) out.emplace_back(a, m, InvolutionKind::Morphic);
            out.emplace_back(a, m, InvolutionKind::Antimorphic);
            return;
        }
        if (perm[i] != -1) {
            self(self, i + 1);
            return;
        }
        perm[i] = i;
        self(self, i + 1);
        for (int j = i + 1; j < k; ++j)
            if (perm[j] == -1) {
                perm[i] = j;
                perm[j] = i;
                self(self, i + 1);
                perm[j] = -1;
            }
        perm[i] = -1;
    };
    std::fill(perm.begin(), perm.end(), -1);
    rec(rec, 0);
    return out;
}

VerifyItem verify_theta(const SweepConfig& cfg, bool parallel, int workers) {
    VerifyItem item;
    item.name = "Theta: root uniqueness, bridge propositions, KMS cube";
    const Alphabet alpha = sweep_alphabet(cfg);
    std::vector<Involution> thetas = all_involutions(alpha);
    std::vector<Word> words = all_words(cfg.alphabet_size, 1, cfg.max_word_len);
    CexSink cex;
    size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers) if (parallel) reduction(+ : checked)
    for (long long i = 0; i < static_cast<long long>(words.size()); ++i) {
        const Word& w = words[i];
        for (size_t t = 0; t < thetas.size(); ++t) {
            const Involution& theta = thetas[t];
            ++checked;
            size_t idx = static_cast<size_t>(i) * thetas.size() + t;
            std::string tag = w + " (theta #" + std::to_string(t) + ")";

            // Theorem 7: exactly one theta-primitive prefix generates w
            size_t roots = 0;
            for (size_t len = 1; len <= w.size(); ++len) {
                Word p = w.substr(0, len);
                if (is_theta_power(w, p, theta) && is_theta_primitive(p, theta)) ++roots;
            }
            if (roots != 1) {
                cex.add(idx, tag + ": " + std::to_string(roots) + " theta-roots");
                continue;
            }
            if (theta.apply(w) == w) continue;

            BridgeReport rep = check_bridge_props(w, theta);
            if (rep.prop6_equivalence && !*rep.prop6_equivalence)
                cex.add(idx, tag + ": morphic equivalence fails");
            if (rep.antimorphic_implication && !*rep.antimorphic_implication)
                cex.add(idx, tag + ": antimorphic implication fails");
            if (rep.kms_clean && !*rep.kms_clean)
                cex.add(idx, tag + ": KMS cube check fails");
            if (rep.pair_root && !is_theta_invariant(*rep.pair_root, theta))
                cex.add(idx, tag + ": pair root is not theta-invariant");
            if (theta.kind() == InvolutionKind::Antimorphic && rep.theta_primitive &&
                !rep.pair_primitive && !rep.palindrome_pair)
                cex.add(idx, tag + ": no theta-palindrome factorization found");
        }
    }
    item.checked = checked;
    item.counterexamples = cex.sorted();
    item.pass = item.counterexamples.empty();
    return item;
}

} // namespace

VerifyReport verify_theorems(const SweepConfig& cfg, const std::set<Theorem>& which,
                             SweepExecution exec) {
    validate(cfg);
    const bool parallel = exec == SweepExecution::Parallel;
    const int workers = effective_workers(cfg);
    VerifyReport rep;
    if (which.count(Theorem::T2)) rep.items.push_back(verify_t2(cfg, parallel, workers));
    if (which.count(Theorem::T4)) rep.items.push_back(verify_t4(cfg, parallel, workers));
    if (which.count(Theorem::T5)) rep.items.push_back(verify_t5(cfg, parallel, workers));
    if (which.count(Theorem::T6)) rep.items.push_back(verify_t6(cfg, parallel, workers));
    if (which.count(Theorem::Theta)) rep.items.push_back(verify_theta(cfg, parallel, workers));
    return rep;
}

} // namespace monoidlab
