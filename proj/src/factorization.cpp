#include "monoidlab/factorization.hpp"
#include "monoidlab/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace monoidlab {

bool is_member(const Word& w, const WordSet& X) {
    const size_t n = w.size();
    std::vector<char> ok(n + 1, 0);
    ok[0] = 1;
    for (size_t i = 0; i < n; ++i) {
        if (!ok[i]) continue;
        for (const Word& x : X)
            if (w.compare(i, x.size(), x) == 0) ok[i + x.size()] = 1;
    }
    return ok[n] != 0;
}

Word apply_factorization(const Factorization& f, const WordSet& X) {
    Word out;
    for (size_t idx : f) out += X[idx];
    return out;
}

std::vector<Factorization> factorizations(const Word& w, const WordSet& X, size_t cap) {
    const size_t n = w.size();
    // positions from which the end is reachable
    std::vector<char> live(n + 1, 0);
    live[n] = 1;
    for (size_t i = n; i-- > 0;)
        for (const Word& x : X)
            if (i + x.size() <= n && live[i + x.size()] && w.compare(i, x.size(), x) == 0) {
                live[i] = 1;
                break;
            }
    std::vector<Factorization> out;
    if (!live[0]) return out;

    Factorization cur;
    // DFS in ascending block-index order yields lexicographic output order.
    auto dfs = [&](auto&& self, size_t pos) -> bool {
        if (out.size() >= cap) return false;
        if (pos == n) {
            out.push_back(cur);
            return out.size() < cap;
        }
        for (size_t i = 0; i < X.size(); ++i) {
            const Word& x = X[i];
            if (pos + x.size() > n || !live[pos + x.size()]) continue;
            if (w.compare(pos, x.size(), x) != 0) continue;
            cur.push_back(i);
            bool more = self(self, pos + x.size());
            cur.pop_back();
            if (!more) return false;
        }
        return true;
    };
    dfs(dfs, 0);
    return out;
}

namespace {

// Sardinas-Patterson search node: an overhang (suffix by which one parse
// leads the other) plus which side currently leads.
struct SpNode {
    Word overhang;
    int leader; // 0 = first side, 1 = second side
    auto operator<=>(const SpNode&) const = default;
};

struct SpInfo {
    size_t dist;              // total length of the (longer) consumed word
    std::optional<SpNode> parent;
    size_t appended = 0;      // codeword index appended on the transition into this node
    int appended_side = 0;
    std::pair<size_t, size_t> init{0, 0}; // first blocks, for initial nodes
};

} // namespace

CodeResult is_code(const WordSet& X) {
    if (X.empty()) return {true, std::nullopt};

    std::map<SpNode, SpInfo> info;
    using QItem = std::tuple<size_t, SpNode>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;

    auto relax = [&](const SpNode& node, SpInfo cand) {
        auto it = info.find(node);
        if (it == info.end() || cand.dist < it->second.dist) {
            info[node] = std::move(cand);
            queue.emplace(info[node].dist, node);
        }
    };

    // Initial overhangs: X[j] = X[i] . s with s nonempty; side 1 leads by s.
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < X.size(); ++j) {
            if (i == j) continue;
            const Word& u = X[i];
            const Word& v = X[j];
            if (v.size() > u.size() && v.compare(0, u.size(), u) == 0) {
                SpNode node{v.substr(u.size()), 1};
                relax(node, SpInfo{v.size(), std::nullopt, 0, 0, {i, j}});
            }
        }

    std::optional<SpNode> goal_parent;
    size_t goal_word = 0;
    int goal_side = 0;
    size_t goal_dist = SIZE_MAX;

    while (!queue.empty()) {
        auto [d, node] = queue.top();
        queue.pop();
        auto it = info.find(node);
        if (it == info.end() || it->second.dist != d) continue;
        if (d >= goal_dist) break;
        const Word& s = node.overhang;
        const int lag = 1 - node.leader;
        for (size_t k = 0; k < X.size(); ++k) {
            const Word& x = X[k];
            if (x == s) {
                if (d < goal_dist) {
                    goal_dist = d;
                    goal_parent = node;
                    goal_word = k;
                    goal_side = lag;
                }
            } else if (x.size() < s.size() && s.compare(0, x.size(), x) == 0) {
                // lagging side consumes part of the overhang
                relax({s.substr(x.size()), node.leader}, SpInfo{d, node, k, lag});
            } else if (x.size() > s.size() && x.compare(0, s.size(), s) == 0) {
                // lagging side overtakes
                relax({x.substr(s.size()), lag}, SpInfo{d + x.size() - s.size(), node, k, lag});
            }
        }
    }

    if (!goal_parent) return {true, std::nullopt};

    // Walk parents back to the initial node, collecting per-side block lists.
    std::vector<std::pair<size_t, int>> steps{{goal_word, goal_side}};
    SpNode cur = *goal_parent;
    for (;;) {
        const SpInfo& in = info.at(cur);
        if (!in.parent) {
            Factorization sides[2];
            sides[0].push_back(in.init.first);
            sides[1].push_back(in.init.second);
            for (auto it2 = steps.rbegin(); it2 != steps.rend(); ++it2)
                sides[it2->second].push_back(it2->first);
            DoubleFactorizationWitness w;
            w.first = sides[0];
            w.second = sides[1];
            if (w.second < w.first) std::swap(w.first, w.second);
            w.word = apply_factorization(w.first, X);
            return {false, std::move(w)};
        }
        steps.emplace_back(in.appended, in.appended_side);
        cur = *in.parent;
    }
}

bool is_prefix_code(const WordSet& X) {
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < X.size(); ++j)
            if (i != j && X[j].size() > X[i].size() &&
                X[j].compare(0, X[i].size(), X[i]) == 0)
                return false;
    return true;
}

bool is_suffix_code(const WordSet& X) {
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < X.size(); ++j)
            if (i != j && X[j].size() > X[i].size() &&
                X[j].compare(X[j].size() - X[i].size(), X[i].size(), X[i]) == 0)
                return false;
    return true;
}

bool is_bifix_code(const WordSet& X) {
    return is_prefix_code(X) && is_suffix_code(X);
}

} // namespace monoidlab
