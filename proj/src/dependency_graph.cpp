#include "monoidlab/automata.hpp"
#include "monoidlab/factorization.hpp"

#include <numeric>

namespace monoidlab {

namespace {

// union-find over vertex indices
struct Components {
    std::vector<size_t> parent;
    explicit Components(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void merge(size_t a, size_t b) { parent[find(a)] = find(b); }
    size_t count() {
        size_t c = 0;
        for (size_t i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

} // namespace

DependencyGraph dependency_graph(const WordSet& X) {
    DependencyGraph g;
    g.vertices = X;
    Alphabet a = X.alphabet();
    Dfa star = star_automaton(a, X);
    Components comps(X.size());
    for (size_t i = 0; i < X.size(); ++i) {
        for (size_t j = i + 1; j < X.size(); ++j) {
            const Word& u = X[i];
            const Word& v = X[j];
            // an edge requires one endpoint to be a prefix of the other
            const Word& shorter = u.size() <= v.size() ? u : v;
            const Word& longer = u.size() <= v.size() ? v : u;
            if (longer.compare(0, shorter.size(), shorter) != 0) continue;
            Dfa left = concat(literal_automaton(a, u), star);
            Dfa right = concat(literal_automaton(a, v), star);
            if (!is_empty(intersect(left, right))) {
                g.edges.emplace_back(i, j);
                comps.merge(i, j);
            }
        }
    }
    g.components = comps.count();
    return g;
}

} // namespace monoidlab
