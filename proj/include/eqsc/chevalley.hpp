#pragma once

#include <optional>
#include <vector>

#include "eqsc/parabolic.hpp"
#include "eqsc/poly.hpp"
#include "eqsc/qdegree.hpp"

namespace eqsc {

// One off-diagonal term of a divisor product sigma(s(beta)) o sigma(w).
struct ChevalleyTerm {
    int target = 0; // index of a minimal representative
    DegreeVec deg;  // all-zero for classical terms
    Int h;          // multiplicity, a positive integer
};

struct ChevalleyExpansion {
    int free_pos = 0; // which divisor, as a position in free_indices()
    int w = 0;
    Polynomial diag;                      // coefficient of sigma(w) itself
    std::vector<ChevalleyTerm> classical; // codim(target) = codim(w) + 1, degree 0
    std::vector<ChevalleyTerm> quantum;   // nonzero degree, merged by (target, degree)
};

// A transposed record: sigma(target) appears in sigma(s(beta)) o sigma(source)
// with the given degree and multiplicity. The diagonal source == target is
// never listed.
struct ReverseTerm {
    int source = 0;
    DegreeVec deg;
    Int h;
};

// Divisor products in the sigma basis, with memoized localization data.
// All methods are lazy; call warm_all() before concurrent read-only use.
class ChevalleyContext {
  public:
    ChevalleyContext(const ParabolicQuotient* q, const QuantumGrading* grading);

    const ParabolicQuotient& quotient() const { return *q_; }
    const QuantumGrading& grading() const { return *g_; }
    int qvars() const { return g_->qvars(); }

    // Image under phi of omega_beta - dual(w)(omega_beta), a polynomial with
    // nonnegative coefficients. Two independent computations of the weight are
    // compared before it is accepted.
    const Polynomial& diag_coeff(int free_pos, int w);

    // diag_coeff(free_pos, a) - diag_coeff(free_pos, b)
    Polynomial f_form(int free_pos, int a, int b);

    // Smallest free position whose f_form separates a from b. Throws
    // PreconditionViolatedError when a == b.
    int choose_beta(int a, int b);

    const ChevalleyExpansion& expand(int free_pos, int w);

    // Terms of all expansions for the divisor that land on `target`.
    const std::vector<ReverseTerm>& reverse(int free_pos, int target);

    // Forces every memo so later concurrent reads never mutate.
    void warm_all();

  private:
    const ParabolicQuotient* q_;
    const QuantumGrading* g_;
    std::vector<std::optional<Polynomial>> diag_;
    std::vector<std::optional<ChevalleyExpansion>> exp_;
    std::vector<std::optional<std::vector<std::vector<ReverseTerm>>>> rev_;
};

} // namespace eqsc
