#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "eqsc/chevalley.hpp"

namespace eqsc {

struct EngineOptions {
    bool prune = true; // apply the degree and support vanishing shortcuts
    int threads = 1;   // worker threads for independent cells of one layer
};

// A finished product of basis classes. Keys are (weighted degree, degree
// vector, class index) so iteration is already in canonical output order.
using ClassVector = std::map<std::tuple<int, DegreeVec, int>, Polynomial>;

// Computes the structure constants of the deformed product on the sigma
// basis, one weighted-degree stratum at a time. All public entry points are
// single-threaded; worker threads only ever run inside one stratum layer.
class EqlrEngine {
  public:
    explicit EqlrEngine(std::shared_ptr<const ParabolicQuotient> q, EngineOptions opt = {});

    const ParabolicQuotient& quotient() const { return *q_; }
    const QuantumGrading& grading() const { return grading_; }
    ChevalleyContext& chevalley() { return chev_; }
    const EngineOptions& options() const { return opt_; }

    // Interned degree vectors, in the order strata were completed.
    int degree_id(const DegreeVec& d);
    const DegreeVec& degree_of(int id) const { return degrees_[id]; }
    int degree_count() const { return static_cast<int>(degrees_.size()); }
    int completed_weight() const { return completed_weight_; }

    // Completes every stratum of weighted degree <= wdeg.
    void ensure_weight(int wdeg);

    // The coefficient of q^d sigma(w) in sigma(u) o sigma(v); completes the
    // needed strata on demand.
    const Polynomial& coeff(int u, int v, int w, const DegreeVec& d);

    // Lookup only: throws StratumNotReadyError when the stratum of d has not
    // been completed yet.
    const Polynomial& get(int u, int v, int w, const DegreeVec& d) const;

    // Value of a cell whose first argument (after the commutativity swap, if
    // needed) does not lie below the target. Requires every stratum strictly
    // below the weight of d to be complete; never reads cells of d's stratum.
    RatFn reduce_nonprec(int first, int second, int target, const DegreeVec& d);

    // Divisor choice for every element strictly below w: the smallest (resp.
    // largest) free position separating w from the element; -1 elsewhere.
    std::vector<int> default_assignment(int w);
    std::vector<int> alt_assignment(int w);

    // Sum over cover chains from u to w of the edge weights h/F under the
    // given assignment. Requires u below w.
    RatFn path_r(int u, int w, const std::vector<int>& assign);

    // The diagonal value c_{w,w}^{w,d} recomputed under the given assignment;
    // completes the strata strictly below the weight of d on demand.
    RatFn diagonal_under(int w, const DegreeVec& d, const std::vector<int>& assign);

    // Recomputes a completed cell through the relation anchored at `first`
    // (no commutativity normalization; first must differ from target).
    Polynomial recompute_cell(int first, int second, int target, const DegreeVec& d);

    // Every stored nonzero cell as (u, v, w, degree id), sorted.
    std::vector<std::tuple<int, int, int, int>> stored_cells() const;

    // sigma(u) o sigma(v), complete in all degrees.
    ClassVector multiply(int u, int v);
    // Product of an arbitrary class vector with the basis class sigma(t).
    ClassVector cv_mul_basis(const ClassVector& cv, int t);

  private:
    using Key = std::uint64_t;
    using Memo = std::unordered_map<Key, RatFn>;

    struct PathEdge {
        RatFn weight; // h / F at the source element
        int target;
    };
    struct HTerm {
        Int h;
        int target;
    };
    struct QTerm {
        Int h;
        int target;
        DegreeVec deg;
    };
    struct PathData {
        std::vector<int> assign;               // per element, -1 off the interval
        std::vector<int> order;                // elements below w, codim descending
        std::vector<RatFn> invf;               // per element: 1/F
        std::vector<RatFn> r;                  // per element: chain sum to w
        std::vector<std::vector<PathEdge>> edges; // classical terms below w
        std::vector<std::vector<HTerm>> loose;    // classical terms not below w
        std::vector<std::vector<QTerm>> qterms;   // quantum terms
    };

    Key key(int u, int v, int w, int did) const;
    const Polynomial& table_at(Key k) const;
    int did_of_completed(const DegreeVec& d) const;
    void check_indices(int u, int v, int w) const;

    void complete_weight_level(int level);
    PathData build_path_data(int w, const std::vector<int>& assign);
    const PathData& path_data(int w);
    RatFn diagonal_value(int w, int did, const PathData& pd, Memo& memo);
    Polynomial cell_value(int u, int v, int w, int did, Memo& memo);
    RatFn step_sum(int first, int second, int target, int did);
    RatFn reduce_impl(int first, int second, int target, int did, Memo& memo);
    std::vector<int> assignment_impl(int w, bool largest);

    std::shared_ptr<const ParabolicQuotient> q_;
    EngineOptions opt_;
    QuantumGrading grading_;
    ChevalleyContext chev_;
    Polynomial zero_;

    std::vector<DegreeVec> degrees_;
    std::map<DegreeVec, int> degree_ids_;
    int completed_weight_ = -1;
    bool warmed_ = false;

    std::unordered_map<Key, Polynomial> table_; // zero cells are not stored
    Memo ememo_;
    std::map<int, PathData> paths_;
};

} // namespace eqsc
