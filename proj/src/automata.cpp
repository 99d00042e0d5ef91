#include "monoidlab/automata.hpp"
#include "monoidlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <sstream>

namespace monoidlab {

namespace {

constexpr size_t kDeterminizeCap = 1'000'000;

struct Nfa {
    int nsym = 0;
    std::vector<int> start;
    std::vector<char> accepting;
    // [state][sym] -> targets
    std::vector<std::vector<std::vector<int>>> delta;

    int add_state() {
        accepting.push_back(0);
        delta.emplace_back(nsym);
        return static_cast<int>(accepting.size()) - 1;
    }
};

Dfa dead_automaton(const Alphabet& a) {
    Dfa d;
    d.alphabet = a;
    d.start = 0;
    d.accepting = {0};
    d.transitions.assign(static_cast<size_t>(a.size()), -1);
    return d;
}

// Keep states reachable from start and co-reachable to an accepting state.
Dfa trim(const Dfa& A) {
    const int n = A.num_states();
    const int k = A.alphabet.size();
    std::vector<char> reach(n, 0);
    std::deque<int> bfs{A.start};
    reach[A.start] = 1;
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop_front();
        for (int c = 0; c < k; ++c) {
            int t = A.next(q, c);
            if (t >= 0 && !reach[t]) {
                reach[t] = 1;
                bfs.push_back(t);
            }
        }
    }
    std::vector<char> useful(n, 0);
    std::vector<std::vector<int>> rev(n);
    for (int q = 0; q < n; ++q)
        for (int c = 0; c < k; ++c) {
            int t = A.next(q, c);
            if (t >= 0) rev[t].push_back(q);
        }
    for (int q = 0; q < n; ++q)
        if (A.accepting[q] && reach[q]) {
            useful[q] = 1;
            bfs.push_back(q);
        }
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop_front();
        for (int p : rev[q])
            if (reach[p] && !useful[p]) {
                useful[p] = 1;
                bfs.push_back(p);
            }
    }
    if (!useful[A.start]) return dead_automaton(A.alphabet);

    // renumber in BFS order from start for deterministic layouts
    std::vector<int> remap(n, -1);
    std::vector<int> order;
    remap[A.start] = 0;
    order.push_back(A.start);
    for (size_t i = 0; i < order.size(); ++i)
        for (int c = 0; c < k; ++c) {
            int t = A.next(order[i], c);
            if (t >= 0 && useful[t] && remap[t] < 0) {
                remap[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    Dfa out;
    out.alphabet = A.alphabet;
    out.start = 0;
    out.accepting.resize(order.size());
    out.transitions.assign(order.size() * k, -1);
    for (size_t i = 0; i < order.size(); ++i) {
        out.accepting[i] = A.accepting[order[i]];
        for (int c = 0; c < k; ++c) {
            int t = A.next(order[i], c);
            if (t >= 0 && useful[t]) out.transitions[i * k + c] = remap[t];
        }
    }
    return out;
}

Dfa determinize(const Nfa& nfa, const Alphabet& alpha) {
    const int k = nfa.nsym;
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    std::vector<int> start = nfa.start;
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    ids[start] = 0;
    subsets.push_back(start);

    Dfa out;
    out.alphabet = alpha;
    out.start = 0;
    for (size_t i = 0; i < subsets.size(); ++i) {
        if (subsets.size() > kDeterminizeCap)
            throw TooLargeError("determinization exceeded the state cap");
        const auto subset = subsets[i];
        bool acc = false;
        for (int q : subset) acc = acc || nfa.accepting[q];
        out.accepting.push_back(acc ? 1 : 0);
        out.transitions.resize(subsets.size() * k, -1);
        for (int c = 0; c < k; ++c) {
            std::vector<int> next;
            for (int q : subset)
                for (int t : nfa.delta[q][c]) next.push_back(t);
            if (next.empty()) continue;
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            auto [it, fresh] = ids.emplace(next, static_cast<int>(subsets.size()));
            if (fresh) subsets.push_back(next);
            out.transitions[i * k + c] = it->second;
        }
    }
    out.transitions.resize(subsets.size() * k, -1);
    return trim(out);
}

// Total transition function; appends a sink when anything is undefined.
Dfa complete(const Dfa& A) {
    const int k = A.alphabet.size();
    bool total = std::find(A.transitions.begin(), A.transitions.end(), -1) == A.transitions.end();
    if (total && k > 0) return A;
    Dfa out = A;
    int sink = out.num_states();
    out.accepting.push_back(0);
    out.transitions.resize(static_cast<size_t>(sink + 1) * k, -1);
    for (auto& t : out.transitions)
        if (t < 0) t = sink;
    return out;
}

void require_same_alphabet(const Dfa& A, const Dfa& B) {
    if (!(A.alphabet == B.alphabet)) throw AlphabetMismatchError{};
}

// Moore partition refinement on the completed automaton.
Dfa minimize(const Dfa& A) {
    Dfa C = complete(A);
    const int n = C.num_states();
    const int k = C.alphabet.size();
    std::vector<int> cls(n);
    for (int q = 0; q < n; ++q) cls[q] = C.accepting[q] ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(n);
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig{cls[q]};
            for (int c = 0; c < k; ++c) sig.push_back(cls[C.next(q, c)]);
            auto [it, fresh] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size()));
            next_cls[q] = it->second;
        }
        if (next_cls == cls) break;
        cls = next_cls;
    }
    int m = *std::max_element(cls.begin(), cls.end()) + 1;
    Dfa out;
    out.alphabet = C.alphabet;
    out.start = cls[C.start];
    out.accepting.assign(m, 0);
    out.transitions.assign(static_cast<size_t>(m) * k, -1);
    for (int q = 0; q < n; ++q) {
        out.accepting[cls[q]] = C.accepting[q];
        for (int c = 0; c < k; ++c) out.transitions[static_cast<size_t>(cls[q]) * k + c] = cls[C.next(q, c)];
    }
    return trim(out);
}

// L(A) minus the empty word: clone the start state as non-accepting.
Dfa remove_epsilon(const Dfa& A) {
    if (!A.accepts(Word{})) return A;
    const int k = A.alphabet.size();
    Dfa out = A;
    int fresh = out.num_states();
    out.accepting.push_back(0);
    out.transitions.resize(static_cast<size_t>(fresh + 1) * k, -1);
    for (int c = 0; c < k; ++c)
        out.transitions[static_cast<size_t>(fresh) * k + c] = A.next(A.start, c);
    out.start = fresh;
    return trim(out);
}

} // namespace

bool Dfa::accepts(const Word& w) const {
    int q = start;
    for (char ch : w) {
        int c = alphabet.index(ch);
        if (c < 0) return false;
        q = next(q, c);
        if (q < 0) return false;
    }
    return accepting[q] != 0;
}

Dfa epsilon_automaton(const Alphabet& a) {
    Dfa d;
    d.alphabet = a;
    d.start = 0;
    d.accepting = {1};
    d.transitions.assign(static_cast<size_t>(a.size()), -1);
    return d;
}

Dfa literal_automaton(const Alphabet& a, const Word& w) {
    const int k = a.size();
    Dfa d;
    d.alphabet = a;
    d.start = 0;
    int n = static_cast<int>(w.size()) + 1;
    d.accepting.assign(n, 0);
    d.accepting[n - 1] = 1;
    d.transitions.assign(static_cast<size_t>(n) * k, -1);
    for (size_t i = 0; i < w.size(); ++i) {
        int c = a.index(w[i]);
        if (c < 0) throw AlphabetMismatchError{};
        d.transitions[i * k + c] = static_cast<int>(i) + 1;
    }
    return d;
}

Dfa star_automaton(const WordSet& X) { return star_automaton(X.alphabet(), X); }

Dfa star_automaton(const Alphabet& a, const WordSet& X) {
    Nfa nfa;
    nfa.nsym = a.size();
    int root = nfa.add_state();
    nfa.accepting[root] = 1;
    nfa.start = {root};
    for (const Word& x : X) {
        int cur = root;
        for (size_t i = 0; i < x.size(); ++i) {
            int c = a.index(x[i]);
            if (c < 0) throw AlphabetMismatchError{};
            int to = (i + 1 == x.size()) ? root : nfa.add_state();
            nfa.delta[cur][c].push_back(to);
            cur = to;
        }
    }
    return determinize(nfa, a);
}

Dfa intersect(const Dfa& A, const Dfa& B) {
    require_same_alphabet(A, B);
    const int k = A.alphabet.size();
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs{{A.start, B.start}};
    ids[pairs[0]] = 0;
    Dfa out;
    out.alphabet = A.alphabet;
    out.start = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [qa, qb] = pairs[i];
        out.accepting.push_back(A.accepting[qa] && B.accepting[qb] ? 1 : 0);
        out.transitions.resize(pairs.size() * k, -1);
        for (int c = 0; c < k; ++c) {
            int ta = A.next(qa, c), tb = B.next(qb, c);
            if (ta < 0 || tb < 0) continue;
            auto [it, fresh] = ids.emplace(std::make_pair(ta, tb), static_cast<int>(pairs.size()));
            if (fresh) pairs.emplace_back(ta, tb);
            out.transitions[i * k + c] = it->second;
        }
    }
    out.transitions.resize(pairs.size() * k, -1);
    return trim(out);
}

Dfa complement(const Dfa& A) {
    Dfa out = complete(A);
    for (auto& a : out.accepting) a = a ? 0 : 1;
    return out; // not trimmed: complements are typically intersected right away
}

Dfa concat(const Dfa& A, const Dfa& B) {
    require_same_alphabet(A, B);
    const int k = A.alphabet.size();
    Nfa nfa;
    nfa.nsym = k;
    const int na = A.num_states();
    for (int q = 0; q < na + B.num_states(); ++q) nfa.add_state();
    for (int q = 0; q < na; ++q) {
        for (int c = 0; c < k; ++c) {
            int t = A.next(q, c);
            if (t >= 0) nfa.delta[q][c].push_back(t);
        }
        if (A.accepting[q]) {
            // emulate an epsilon edge to B's start
            for (int c = 0; c < k; ++c) {
                int t = B.next(B.start, c);
                if (t >= 0) nfa.delta[q][c].push_back(na + t);
            }
            nfa.accepting[q] = B.accepting[B.start];
        }
    }
    for (int q = 0; q < B.num_states(); ++q) {
        nfa.accepting[na + q] = B.accepting[q];
        for (int c = 0; c < k; ++c) {
            int t = B.next(q, c);
            if (t >= 0) nfa.delta[na + q][c].push_back(na + t);
        }
    }
    nfa.start = {A.start};
    return determinize(nfa, A.alphabet);
}

Dfa difference(const Dfa& A, const Dfa& B) {
    require_same_alphabet(A, B);
    const int k = A.alphabet.size();
    Dfa Bc = complete(B);
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs{{A.start, Bc.start}};
    ids[pairs[0]] = 0;
    Dfa out;
    out.alphabet = A.alphabet;
    out.start = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [qa, qb] = pairs[i];
        out.accepting.push_back(A.accepting[qa] && !Bc.accepting[qb] ? 1 : 0);
        out.transitions.resize(pairs.size() * k, -1);
        for (int c = 0; c < k; ++c) {
            int ta = A.next(qa, c);
            if (ta < 0) continue;
            int tb = Bc.next(qb, c);
            auto [it, fresh] = ids.emplace(std::make_pair(ta, tb), static_cast<int>(pairs.size()));
            if (fresh) pairs.emplace_back(ta, tb);
            out.transitions[i * k + c] = it->second;
        }
    }
    out.transitions.resize(pairs.size() * k, -1);
    return trim(out);
}

bool is_empty(const Dfa& A) {
    Dfa t = trim(A);
    return std::find(t.accepting.begin(), t.accepting.end(), 1) == t.accepting.end();
}

bool is_finite(const Dfa& A) {
    Dfa t = trim(A);
    const int n = t.num_states();
    const int k = t.alphabet.size();
    // every trim state is useful, so any cycle pumps some accepted word
    std::vector<int> color(n, 0);
    auto dfs = [&](auto&& self, int q) -> bool {
        color[q] = 1;
        for (int c = 0; c < k; ++c) {
            int to = t.next(q, c);
            if (to < 0) continue;
            if (color[to] == 1) return false;
            if (color[to] == 0 && !self(self, to)) return false;
        }
        color[q] = 2;
        return true;
    };
    return dfs(dfs, t.start);
}

bool subset_of(const Dfa& A, const Dfa& B) { return is_empty(difference(A, B)); }

bool equivalent(const Dfa& A, const Dfa& B) { return subset_of(A, B) && subset_of(B, A); }

std::vector<Word> enumerate_upto(const Dfa& A, size_t maxlen) {
    std::vector<Word> out;
    Dfa t = trim(A);
    std::vector<std::pair<int, Word>> frontier{{t.start, Word{}}};
    const int k = t.alphabet.size();
    for (size_t len = 0; ; ++len) {
        for (const auto& [q, w] : frontier)
            if (t.accepting[q]) out.push_back(w);
        if (len == maxlen) break;
        std::vector<std::pair<int, Word>> next;
        for (const auto& [q, w] : frontier)
            for (int c = 0; c < k; ++c) {
                int to = t.next(q, c);
                if (to >= 0) next.emplace_back(to, w + t.alphabet.symbol(c));
            }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return out;
}

namespace {

// Shortest (then lex-least) word along defined transitions from `from` to any
// state flagged in `goal`; nonempty paths only when `from` itself is a goal.
std::optional<Word> shortest_path(const Dfa& A, int from, const std::vector<char>& goal,
                                  bool require_nonempty) {
    const int k = A.alphabet.size();
    if (!require_nonempty && goal[from]) return Word{};
    std::vector<std::pair<int, Word>> frontier;
    std::vector<char> seen(A.num_states(), 0);
    for (int c = 0; c < k; ++c) {
        int to = A.next(from, c);
        if (to < 0) continue;
        Word w{A.alphabet.symbol(c)};
        if (goal[to]) return w;
        if (!seen[to]) {
            seen[to] = 1;
            frontier.emplace_back(to, w);
        }
    }
    while (!frontier.empty()) {
        std::vector<std::pair<int, Word>> next;
        for (const auto& [q, w] : frontier)
            for (int c = 0; c < k; ++c) {
                int to = A.next(q, c);
                if (to < 0) continue;
                if (goal[to]) return w + A.alphabet.symbol(c);
                if (!seen[to]) {
                    seen[to] = 1;
                    next.emplace_back(to, w + A.alphabet.symbol(c));
                }
            }
        frontier = std::move(next);
    }
    return std::nullopt;
}

} // namespace

GeneratorResult minimal_generating_set(const Dfa& M, size_t sample_bound) {
    if (!M.accepts(Word{})) throw NotASubmonoidError{};
    Dfa Mt = trim(M);
    if (!subset_of(concat(Mt, Mt), Mt)) throw NotASubmonoidError{};

    Dfa plus = remove_epsilon(Mt);
    Dfa gens = minimize(difference(plus, concat(plus, plus)));

    GeneratorResult res;
    if (is_empty(gens)) {
        res.kind = GeneratorResult::Kind::Finite;
        return res;
    }
    if (is_finite(gens)) {
        res.kind = GeneratorResult::Kind::Finite;
        // acyclic trim DFA: accepted words are shorter than the state count
        res.generators = WordSet(enumerate_upto(gens, static_cast<size_t>(gens.num_states())));
        return res;
    }
    res.kind = GeneratorResult::Kind::Infinite;
    res.sample = enumerate_upto(gens, sample_bound);

    // pumpable decomposition: pick the cycle state minimizing |u|+|v|+|w|
    const int n = gens.num_states();
    std::optional<PumpDescription> best;
    for (int q = 0; q < n; ++q) {
        std::vector<char> only_q(n, 0);
        only_q[q] = 1;
        auto cyc = shortest_path(gens, q, only_q, true);
        if (!cyc) continue;
        auto head = shortest_path(gens, gens.start, only_q, false);
        auto tail = shortest_path(gens, q, gens.accepting, false);
        if (!head || !tail) continue;
        PumpDescription cand{*head, *cyc, *tail};
        auto key = [](const PumpDescription& p) {
            // shortest description first; among ties push the cycle as late
            // as possible (abc(dc)*bab rather than the rotated ab(cd)*cbab)
            return std::make_tuple(p.head.size() + p.cycle.size() + p.tail.size(),
                                   p.tail.size(), p.head, p.cycle, p.tail);
        };
        if (!best || key(cand) < key(*best)) best = cand;
    }
    res.pump = best;
    return res;
}

std::string to_dot(const Dfa& A, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    os << "  __start [shape=point];\n  __start -> " << A.start << ";\n";
    for (int q = 0; q < A.num_states(); ++q)
        if (A.accepting[q]) os << "  " << q << " [shape=doublecircle];\n";
    for (int q = 0; q < A.num_states(); ++q)
        for (int c = 0; c < A.alphabet.size(); ++c) {
            int t = A.next(q, c);
            if (t >= 0)
                os << "  " << q << " -> " << t << " [label=\"" << A.alphabet.symbol(c) << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace monoidlab
