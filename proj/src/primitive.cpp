#include "monoidlab/primitive.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/factorization.hpp"
#include "monoidlab/hull.hpp"

#include <algorithm>
#include <set>

namespace monoidlab {

namespace {

constexpr size_t kKMaxGuardrail = 40;

// w in {u,v}* via bitmask DP when it fits, plain DP otherwise.
bool pair_member(const Word& w, const Word& u, const Word& v) {
    const size_t n = w.size();
    if (n < 64) {
        uint64_t reach = 1;
        for (size_t i = 0; i < n; ++i) {
            if (!(reach >> i & 1)) continue;
            if (w.compare(i, u.size(), u) == 0) reach |= uint64_t{1} << (i + u.size());
            if (w.compare(i, v.size(), v) == 0) reach |= uint64_t{1} << (i + v.size());
        }
        return reach >> n & 1;
    }
    std::vector<char> ok(n + 1, 0);
    ok[0] = 1;
    for (size_t i = 0; i < n; ++i) {
        if (!ok[i]) continue;
        if (w.compare(i, u.size(), u) == 0) ok[i + u.size()] = 1;
        if (w.compare(i, v.size(), v) == 0) ok[i + v.size()] = 1;
    }
    return ok[n] != 0;
}

} // namespace

PrimitivePairReport is_primitive_pair(const Word& x, const Word& y) {
    if (x.empty() || y.empty()) throw InvalidPairError("pair components must be nonempty");
    if (x == y) throw InvalidPairError("pair components must differ");
    PrimitivePairReport rep;
    rep.pair = WordSet{x, y};
    if (x + y == y + x) {
        rep.primitive = false;
        rep.counterexample = WordSet{primitive_word_root(x).root};
        return rep;
    }
    // candidates: factor pairs of x or y, no longer in total than the input
    std::set<Word, LengthLexLess> cand_set = factors(x);
    cand_set.merge(factors(y));
    std::vector<Word> cands(cand_set.begin(), cand_set.end());
    const size_t budget = x.size() + y.size();
    std::optional<WordSet> best;
    size_t best_len = budget + 1;
    for (size_t i = 0; i < cands.size(); ++i) {
        const Word& u = cands[i];
        if (u.size() >= best_len) break;
        // u or v must start x and y; require u to be a prefix of one of them
        bool u_starts = x.compare(0, u.size(), u) == 0 || y.compare(0, u.size(), u) == 0;
        for (size_t j = i + 1; j < cands.size(); ++j) {
            const Word& v = cands[j];
            size_t total = u.size() + v.size();
            if (total >= best_len) break;
            if (!u_starts && x.compare(0, v.size(), v) != 0 && y.compare(0, v.size(), v) != 0)
                continue;
            if ((u == x && v == y) || (u == y && v == x)) continue;
            if (pair_member(x, u, v) && pair_member(y, u, v)) {
                best = WordSet{u, v};
                best_len = total;
                break; // within this u, later v are longer
            }
        }
    }
    if (best) {
        rep.primitive = false;
        rep.counterexample = *best;
    } else {
        rep.primitive = true;
    }
    return rep;
}

KMaximalityReport is_k_maximal(const WordSet& X, size_t k) {
    if (X.size() != k || k > 3)
        throw InvalidPairError("is_k_maximal requires |X| = k <= 3");
    if (X.total_length() > kKMaxGuardrail)
        throw TooLargeError("k-maximality is limited to total input length 40");

    std::set<Word, LengthLexLess> cand_set;
    for (const Word& w : X)
        cand_set.merge(factors(w));
    std::vector<Word> cands(cand_set.begin(), cand_set.end());

    std::optional<WordSet> best;
    auto key = [](const WordSet& w) { return std::make_tuple(w.total_length(), w.words()); };
    std::vector<size_t> idx;
    auto consider = [&]() {
        std::vector<Word> ws;
        for (size_t i : idx) ws.push_back(cands[i]);
        WordSet Y(std::move(ws));
        if (Y == X) return;
        for (const Word& w : X)
            if (!is_member(w, Y)) return;
        // strictly larger monoid iff some generator escapes X*
        bool escapes = false;
        for (const Word& y : Y)
            if (!is_member(y, X)) {
                escapes = true;
                break;
            }
        if (!escapes) return;
        if (!best || key(Y) < key(*best)) best = Y;
    };
    auto rec = [&](auto&& self, size_t from) -> void {
        consider();
        if (idx.size() == k) return;
        for (size_t i = from; i < cands.size(); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);

    KMaximalityReport rep;
    rep.maximal = !best.has_value();
    rep.witness = best;
    return rep;
}

WordSet primitive_root_rank2(const WordSet& X) {
    if (X.empty()) throw EmptyWordError{};
    {
        Word root = primitive_word_root(X[0]).root;
        bool rank1 = true;
        for (const Word& w : X)
            if (primitive_word_root(w).root != root) {
                rank1 = false;
                break;
            }
        if (rank1) throw IsRankOneError(root);
    }
    auto pairs = rank2_witnesses(X);
    if (pairs.empty()) throw NotRankTwoError{};
    // a total-length-minimal witness pair is primitive, and unique
    const WordSet& root = pairs.front();
    if (!is_primitive_pair(root[0], root[1]).primitive)
        throw std::logic_error("minimal rank-2 witness is not primitive; this is a bug");
    return root;
}

IntersectionReport intersect_primitive_pairs(const WordSet& X, const WordSet& U) {
    if (X.size() != 2 || U.size() != 2)
        throw InvalidPairError("intersect_primitive_pairs expects two pairs");
    IntersectionReport rep;
    rep.left = X;
    rep.right = U;

    std::vector<Word> all(X.begin(), X.end());
    all.insert(all.end(), U.begin(), U.end());
    Alphabet a = Alphabet::from_words(all);
    Dfa inter = intersect(star_automaton(a, X), star_automaton(a, U));
    rep.generators = minimal_generating_set(inter);

    const auto& g = rep.generators;
    if (g.kind == GeneratorResult::Kind::Finite && g.generators.empty()) {
        rep.kind = IntersectionKind::TrivialEpsilon;
    } else if (g.kind == GeneratorResult::Kind::Finite && g.generators.size() == 1) {
        rep.kind = IntersectionKind::SingleGenerator;
        rep.z = g.generators[0];
        rep.z_primitive = is_primitive(*rep.z);
        size_t bound = X.total_length() * U.total_length();
        rep.bound_ok = rep.z->size() < bound;
    } else {
        rep.kind = IntersectionKind::Other;
    }
    return rep;
}

CubeReport cube_occurrence_check(const Word& x, const Word& y) {
    if (x.empty() || y.empty()) throw EmptyWordError{};
    const std::array<Word, 2> pick{x, y};
    const std::array<Word, 2> patterns{x + y, y + x};
    for (int i = 0; i < 8; ++i) {
        std::array<Word, 3> triple{pick[i >> 2 & 1], pick[i >> 1 & 1], pick[i & 1]};
        Word host = triple[0] + triple[1] + triple[2];
        for (const Word& pat : patterns) {
            if (pat.size() + 2 > host.size()) continue;
            // internal occurrence: nonempty on both sides; the earliest
            // occurrence at offset >= 1 is internal unless it is the suffix
            auto pos = host.find(pat, 1);
            if (pos != Word::npos && pos + pat.size() < host.size())
                return {false, CubeOccurrence{triple, pat, pos}};
        }
    }
    return {true, std::nullopt};
}

} // namespace monoidlab
