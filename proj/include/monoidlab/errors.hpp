#pragma once

#include <stdexcept>
#include <string>

namespace monoidlab {

struct EmptyWordError : std::invalid_argument {
    EmptyWordError() : std::invalid_argument("empty word not allowed here") {}
};

struct AlphabetMismatchError : std::invalid_argument {
    AlphabetMismatchError() : std::invalid_argument("automata are over different alphabets") {}
};

struct NotASubmonoidError : std::invalid_argument {
    NotASubmonoidError() : std::invalid_argument("language is not a submonoid") {}
};

struct TooLargeError : std::invalid_argument {
    explicit TooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidPairError : std::invalid_argument {
    explicit InvalidPairError(const std::string& what) : std::invalid_argument(what) {}
};

struct IsRankOneError : std::invalid_argument {
    std::string root;
    explicit IsRankOneError(std::string r)
        : std::invalid_argument("set has rank 1, classical root " + r), root(std::move(r)) {}
};

struct NotRankTwoError : std::invalid_argument {
    NotRankTwoError() : std::invalid_argument("set does not have rank 2") {}
};

struct NotPrimitiveError : std::invalid_argument {
    std::string root;
    int exponent;
    NotPrimitiveError(std::string r, int e)
        : std::invalid_argument("word is not primitive: (" + r + ")^" + std::to_string(e)),
          root(std::move(r)), exponent(e) {}
};

struct DegeneratePairError : std::invalid_argument {
    DegeneratePairError() : std::invalid_argument("w equals theta(w); pair degenerates to a singleton") {}
};

} // namespace monoidlab
