#include "monoidlab/hull.hpp"
#include "monoidlab/errors.hpp"

#include <algorithm>
#include <set>

namespace monoidlab {

namespace {

constexpr size_t kExactSmallGuardrail = 40;

// key for deterministic witness selection
auto witness_key(const WordSet& w) {
    return std::make_tuple(w.total_length(), w.words());
}

} // namespace

HullResult free_hull(const WordSet& X) {
    if (X.empty()) throw EmptyWordError{};
    HullResult res;
    WordSet cur = X;
    for (;;) {
        CodeResult cr = is_code(cur);
        if (cr.code) {
            res.basis = cur;
            res.free_rank = cur.size();
            return res;
        }
        // the two first blocks differ and one is a proper prefix of the other
        const Word& a = cur[cr.witness->first.front()];
        const Word& b = cur[cr.witness->second.front()];
        const Word& shorter = a.size() < b.size() ? a : b;
        const Word& longer = a.size() < b.size() ? b : a;
        Word replacement = longer.substr(shorter.size());
        res.reduction_trace.emplace_back(longer, replacement);
        std::vector<Word> next;
        for (const Word& w : cur)
            next.push_back(w == longer ? replacement : w);
        cur = WordSet(std::move(next));
    }
}

namespace {

// rank-1 test: every word a power of one primitive word
std::optional<Word> common_primitive_root(const WordSet& X) {
    Word root = primitive_word_root(X[0]).root;
    for (const Word& w : X)
        if (primitive_word_root(w).root != root) return std::nullopt;
    return root;
}

} // namespace

std::vector<WordSet> rank2_witnesses(const WordSet& X) {
    if (X.empty()) throw EmptyWordError{};
    if (common_primitive_root(X)) return {};
    std::set<WordSet> seen;
    // u ranges over nonempty prefixes of words of X; v over nonempty prefixes
    // of some word after stripping a number of leading copies of u.
    for (const Word& x : X) {
        for (size_t lu = 1; lu <= x.size(); ++lu) {
            Word u = x.substr(0, lu);
            for (const Word& w : X) {
                for (size_t off = 0; off <= w.size(); off += lu) {
                    if (off > 0 && w.compare(off - lu, lu, u) != 0) break;
                    for (size_t lv = 1; off + lv <= w.size(); ++lv) {
                        Word v = w.substr(off, lv);
                        if (v == u) continue;
                        WordSet pair{u, v};
                        if (seen.count(pair)) continue;
                        bool ok = true;
                        for (const Word& y : X)
                            if (!is_member(y, pair)) {
                                ok = false;
                                break;
                            }
                        if (ok) seen.insert(pair);
                    }
                }
            }
        }
    }
    std::vector<WordSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(),
              [](const WordSet& a, const WordSet& b) { return witness_key(a) < witness_key(b); });
    return out;
}

RankResult combinatorial_rank(const WordSet& X, RankMode mode) {
    if (X.empty()) throw EmptyWordError{};
    if (auto root = common_primitive_root(X)) return {1, WordSet{*root}};

    auto pairs = rank2_witnesses(X);
    if (!pairs.empty()) return {2, pairs.front()};

    if (mode == RankMode::DecideLe2) throw NotRankTwoError{};
    if (X.total_length() > kExactSmallGuardrail)
        throw TooLargeError("exact rank is limited to total input length 40");

    // candidate generators: distinct nonempty factors of words of X
    std::set<Word, LengthLexLess> cand_set;
    for (const Word& w : X)
        cand_set.merge(factors(w));
    std::vector<Word> cands(cand_set.begin(), cand_set.end());

    for (size_t k = 3; k <= X.size(); ++k) {
        std::optional<WordSet> best;
        std::vector<size_t> idx(k);
        // iterate k-combinations of candidate factors
        auto rec = [&](auto&& self, size_t depth, size_t from) -> void {
            if (depth == k) {
                std::vector<Word> ws;
                for (size_t i : idx) ws.push_back(cands[i]);
                WordSet Y(std::move(ws));
                for (const Word& w : X)
                    if (!is_member(w, Y)) return;
                if (!best || witness_key(Y) < witness_key(*best)) best = Y;
                return;
            }
            for (size_t i = from; i < cands.size(); ++i) {
                idx[depth] = i;
                self(self, depth + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
        if (best) return {k, *best};
    }
    return {X.size(), X}; // X always generates itself
}

GraphLemmaReport graph_lemma_check(const WordSet& X) {
    GraphLemmaReport rep;
    if (is_code(X).code) {
        rep.free_rank = X.size();
        rep.components = X.size(); // no edges
        rep.holds = true;
        rep.vacuous = true;
        return rep;
    }
    rep.free_rank = free_hull(X).free_rank;
    rep.components = dependency_graph(X).components;
    rep.holds = rep.free_rank <= rep.components && rep.components < X.size();
    return rep;
}

} // namespace monoidlab
