#include "monoidlab/theta.hpp"
#include "monoidlab/errors.hpp"
#include "monoidlab/hull.hpp"
#include "monoidlab/primitive.hpp"

#include <algorithm>
#include <sstream>

namespace monoidlab {

Involution::Involution(const Alphabet& alphabet, std::map<char, char> letter_map,
                       InvolutionKind kind)
    : alphabet_(alphabet), map_(std::move(letter_map)), kind_(kind) {
    for (int i = 0; i < alphabet_.size(); ++i) {
        char c = alphabet_.symbol(i);
        char d = map_letter(c);
        if (!alphabet_.contains(d) || map_letter(d) != c)
            throw InvalidPairError("letter map is not an involution of the alphabet");
    }
    if (kind_ == InvolutionKind::Morphic) {
        bool identity = true;
        for (int i = 0; i < alphabet_.size() && identity; ++i)
            identity = map_letter(alphabet_.symbol(i)) == alphabet_.symbol(i);
        if (identity)
            throw InvalidPairError("the morphic identity is not an admissible involution");
    }
}

Involution Involution::reversal(const Alphabet& alphabet) {
    return Involution(alphabet, {}, InvolutionKind::Antimorphic);
}

Involution Involution::parse(const Alphabet& alphabet, const std::string& spec,
                             InvolutionKind kind) {
    std::map<char, char> m;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 3 || item[1] != ':')
            throw InvalidPairError("involution entries look like a:b");
        m[item[0]] = item[2];
    }
    return Involution(alphabet, std::move(m), kind);
}

char Involution::map_letter(char c) const {
    auto it = map_.find(c);
    return it == map_.end() ? c : it->second;
}

Word Involution::apply(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (char c : w) out += map_letter(c);
    if (kind_ == InvolutionKind::Antimorphic) std::reverse(out.begin(), out.end());
    return out;
}

bool is_theta_power(const Word& w, const Word& t, const Involution& theta) {
    if (t.empty()) throw EmptyWordError{};
    if (w.compare(0, t.size(), t) != 0) return false;
    Word tt = theta.apply(t);
    const size_t n = w.size();
    std::vector<char> ok(n + 1, 0);
    ok[t.size()] = 1;
    for (size_t i = t.size(); i < n; ++i) {
        if (!ok[i]) continue;
        if (w.compare(i, t.size(), t) == 0) ok[i + t.size()] = 1;
        if (w.compare(i, tt.size(), tt) == 0) ok[i + tt.size()] = 1;
    }
    return ok[n] != 0;
}

Word theta_root(const Word& w, const Involution& theta) {
    if (w.empty()) throw EmptyWordError{};
    for (size_t len = 1; len < w.size(); ++len)
        if (is_theta_power(w, w.substr(0, len), theta)) return w.substr(0, len);
    return w;
}

bool is_theta_primitive(const Word& w, const Involution& theta) {
    return theta_root(w, theta) == w;
}

bool is_theta_invariant(const WordSet& X, const Involution& theta) {
    for (const Word& w : X)
        if (!X.contains(theta.apply(w))) return false;
    return true;
}

bool is_theta_palindrome(const Word& w, const Involution& theta) {
    return theta.apply(w) == w;
}

BridgeReport check_bridge_props(const Word& w, const Involution& theta) {
    if (w.empty()) throw EmptyWordError{};
    Word tw = theta.apply(w);
    if (tw == w) throw DegeneratePairError{};

    BridgeReport rep;
    rep.theta_primitive = is_theta_primitive(w, theta);
    rep.pair_primitive = is_primitive_pair(w, tw).primitive;

    if (theta.kind() == InvolutionKind::Morphic) {
        rep.prop6_equivalence = rep.theta_primitive == rep.pair_primitive;
    } else {
        rep.antimorphic_implication = !rep.pair_primitive || rep.theta_primitive;
    }

    if (!rep.pair_primitive) {
        WordSet pair{w, tw};
        rep.pair_root = primitive_root_rank2(pair);
        if (theta.kind() == InvolutionKind::Antimorphic && rep.theta_primitive) {
            // both root components must be theta-palindromes
            const WordSet& root = *rep.pair_root;
            if (root.size() == 2 && is_theta_palindrome(root[0], theta) &&
                is_theta_palindrome(root[1], theta) && is_member(w, root))
                rep.palindrome_pair = root;
        }
    }
    if (rep.theta_primitive)
        rep.kms_clean = cube_occurrence_check(w, tw).clean;
    return rep;
}

} // namespace monoidlab
