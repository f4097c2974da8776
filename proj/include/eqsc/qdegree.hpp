#pragma once

#include <string>
#include <vector>

#include "eqsc/parabolic.hpp"

namespace eqsc {

// Multidegree in the quantum parameters, one coordinate per non-Levi simple
// index, ordered like ParabolicQuotient::free_indices().
using DegreeVec = std::vector<int>;

// Grading data of the quantum parameters for one quotient.
class QuantumGrading {
  public:
    explicit QuantumGrading(const ParabolicQuotient* q);

    const ParabolicQuotient& quotient() const { return *q_; }
    int qvars() const { return static_cast<int>(nbeta_.size()); }

    // Degree of the quantum parameter attached to the free position: the
    // value of the corresponding simple coroot on the sum of the non-Levi
    // positive roots. Always >= 2.
    int nbeta(int free_pos) const;

    // Degree vector of a non-Levi positive root: the free coordinates of its
    // coroot. Throws RootInLeviError for Levi roots.
    DegreeVec d_of_alpha(int root_idx) const;
    // Weighted total degree of d_of_alpha.
    int n_of_alpha(int root_idx) const;

    int weighted_deg(const DegreeVec& d) const;
    bool is_zero(const DegreeVec& d) const;
    DegreeVec zero() const { return DegreeVec(nbeta_.size(), 0); }

    // true if every coordinate of a is <= the one of b.
    static bool dominated(const DegreeVec& a, const DegreeVec& b);
    static DegreeVec subtract(const DegreeVec& a, const DegreeVec& b);

    // All degree vectors with the given weighted degree, lexicographically
    // ascending. Empty when the weight is not representable.
    std::vector<DegreeVec> degrees_of_weight(int w) const;
    // All degree vectors with weighted degree <= bound, sorted ascending by
    // (weighted degree, lexicographic).
    std::vector<DegreeVec> degrees_up_to(int bound) const;

    // "d=(1,0)" style rendering.
    static std::string str(const DegreeVec& d);
    // "q1^2*q2" style rendering; "1" for the zero degree.
    static std::string q_monomial(const DegreeVec& d);

  private:
    const ParabolicQuotient* q_;
    std::vector<int> nbeta_;
};

} // namespace eqsc
