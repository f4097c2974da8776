#pragma once

#include <string>
#include <vector>

#include "eqsc/engine.hpp"

namespace eqsc {

// Restriction of the class of u to the fixed point w, computed by summing
// over the subwords of a reduced word of dual(w) that are reduced words of
// dual(u). Uses the canonical word; guarded at word length 20.
Polynomial billey_cuw(const ParabolicQuotient& q, int u, int w);

// Same, over a caller-supplied reduced word of dual(w). Throws
// PreconditionViolatedError if the word is not a reduced word of dual(w).
Polynomial billey_cuw_with_word(const ParabolicQuotient& q, int u, int w,
                                const std::vector<int>& word);

// Undeformed structure constants of sigma(u) o sigma(v) by exact elimination
// on the fixed-point restrictions. Full flag quotients only: the Levi set
// must be empty. Index w of the result vector holds the coefficient of
// sigma(w). The solved system is re-checked at every fixed point.
std::vector<Polynomial> gkm_constants(const ParabolicQuotient& q, int u, int v);

struct OracleReport {
    int checked = 0;
    int failed = 0;
    std::vector<std::string> examples; // first few failures, for diagnostics

    bool ok() const { return failed == 0; }
    void pass() { ++checked; }
    void fail(const std::string& what) {
        ++checked;
        ++failed;
        if (examples.size() < 10) examples.push_back(what);
    }
};

// Compares every undeformed coefficient of the form c_{u,w}^{w, d=0} against
// the subword sum.
OracleReport billey_check(EqlrEngine& eng);

// Compares all undeformed products against the fixed-point elimination.
// Full flag quotients only.
OracleReport gkm_check(EqlrEngine& eng);

// Structural invariants of every stored cell up to the given weighted degree
// (the space dimension when max_weight < 0): homogeneity, nonnegativity,
// degree-support vanishing, the unit law, and agreement of all divisor
// products with their direct expansions.
OracleReport invariant_check(EqlrEngine& eng, int max_weight = -1);

// The rank-n projective space: checks that the basis is a single chain, that
// powers of the divisor class specialize (all x -> 0) to the expected single
// basis classes, and that the (n+1)-st power specializes to q times the unit.
// Supports n in {1, 2, 3}.
OracleReport projective_space_check(int n);

} // namespace eqsc
