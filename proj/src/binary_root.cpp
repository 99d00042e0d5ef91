#include "monoidlab/binary_root.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/primitive.hpp"

#include <algorithm>

namespace monoidlab {

bool tiles_with_both(const Word& w, const Word& x, const Word& y) {
    const size_t n = w.size();
    if (x.size() + y.size() > n) return false;
    if (n < 64) {
        // reachability masks indexed by which components were used so far
        uint64_t m[4] = {1, 0, 0, 0};
        for (size_t i = 0; i < n; ++i) {
            const uint64_t bit = uint64_t{1} << i;
            const bool mx = w.compare(i, x.size(), x) == 0;
            const bool my = w.compare(i, y.size(), y) == 0;
            if (!mx && !my) continue;
            for (int f = 0; f < 4; ++f) {
                if (!(m[f] & bit)) continue;
                if (mx) m[f | 1] |= uint64_t{1} << (i + x.size());
                if (my) m[f | 2] |= uint64_t{1} << (i + y.size());
            }
        }
        return (m[3] >> n & 1) != 0;
    }
    // generic DP over (position, used-x, used-y)
    std::vector<char> st(4 * (n + 1), 0);
    st[0] = 1;
    for (size_t i = 0; i < n; ++i)
        for (int f = 0; f < 4; ++f) {
            if (!st[4 * i + f]) continue;
            if (w.compare(i, x.size(), x) == 0) st[4 * (i + x.size()) + (f | 1)] = 1;
            if (w.compare(i, y.size(), y) == 0) st[4 * (i + y.size()) + (f | 2)] = 1;
        }
    return st[4 * n + 3] != 0;
}

std::vector<BinaryRoot> binary_roots_up_to_size(const Word& w, size_t max_size) {
    auto [root, exp] = primitive_word_root(w);
    if (exp != 1) throw NotPrimitiveError(root, exp);
    auto cand_set = factors(w);
    std::vector<Word> cands(cand_set.begin(), cand_set.end());
    std::vector<BinaryRoot> out;
    for (size_t i = 0; i < cands.size(); ++i) {
        if (cands[i].size() >= max_size) break;
        for (size_t j = i + 1; j < cands.size(); ++j) {
            size_t total = cands[i].size() + cands[j].size();
            if (total > max_size) break;
            if (!tiles_with_both(w, cands[i], cands[j])) continue;
            if (!is_primitive_pair(cands[i], cands[j]).primitive) continue;
            WordSet pair{cands[i], cands[j]};
            // primitive pairs are codes, so the factorization is unique
            auto f = factorizations(w, pair, 2);
            out.push_back({std::move(pair), total, f.front()});
        }
    }
    std::sort(out.begin(), out.end(), [](const BinaryRoot& a, const BinaryRoot& b) {
        return std::tie(a.size, a.pair.words()) < std::tie(b.size, b.pair.words());
    });
    return out;
}

BinaryRootReport binary_roots(const Word& w) {
    BinaryRootReport rep;
    rep.word = w;
    rep.roots = binary_roots_up_to_size(w, w.size());
    for (const BinaryRoot& r : rep.roots)
        if (r.size * r.size < w.size()) {
            rep.small_root = r.pair;
            break;
        }
    return rep;
}

std::optional<WordSet> small_binary_root(const Word& w) {
    // size*size < |w| implies size < |w|, so the restricted search suffices
    size_t cap = 0;
    while ((cap + 1) * (cap + 1) < w.size()) ++cap;
    if (cap < 2) {
        // still validate primitivity of the input
        auto [root, exp] = primitive_word_root(w);
        if (exp != 1) throw NotPrimitiveError(root, exp);
        return std::nullopt;
    }
    for (const BinaryRoot& r : binary_roots_up_to_size(w, cap))
        if (r.size * r.size < w.size()) return r.pair;
    return std::nullopt;
}

} // namespace monoidlab
