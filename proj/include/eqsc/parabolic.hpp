#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eqsc/weyl.hpp"

namespace eqsc {

// The set of minimal length coset representatives W^P for a parabolic
// subgroup given by a subset of the simple roots (the Levi set), together
// with the combinatorics the multiplication algorithm needs: duals,
// codimensions, the reversed Bruhat order and its covers.
class ParabolicQuotient {
  public:
    ParabolicQuotient(std::shared_ptr<const RootSystemData> rs, std::vector<int> levi);

    const RootSystemData& roots() const { return *rs_; }
    const WeylContext& ctx() const { return ctx_; }
    int rank() const { return rs_->rank; }

    const std::vector<int>& levi() const { return levi_; }
    // Complement of the Levi set, ascending; fixes the order of the quantum
    // degree coordinates.
    const std::vector<int>& free_indices() const { return free_; }

    bool root_in_levi(int root_idx) const { return in_levi_[root_idx] != 0; }
    int dim() const { return dim_; } // |Phi^+| - |Phi_P^+|

    int size() const { return static_cast<int>(minreps_.size()); }
    const WeylElem& elem(int idx) const { return minreps_[idx]; }
    int length(int idx) const { return length_[idx]; }
    int codim(int idx) const { return codim_[idx]; }
    int dual(int idx) const { return dual_[idx]; }
    int wbar0() const { return wbar0_; }
    // Index of the codimension-one class attached to the given position in
    // free_indices().
    int s_of_beta(int free_pos) const;

    bool is_minimal(const WeylElem& w) const;
    WeylElem min_rep(const WeylElem& w) const;
    // Index of a minimal representative; throws NotMinimalRepresentativeError
    // (mentioning the projection) if w is not minimal.
    int index_of(const WeylElem& w) const;
    // Index of min_rep(w).
    int project(const WeylElem& w) const;

    // Reversed Bruhat order: u precedes w (reflexive).
    bool prec(int u, int w) const { return prec_[static_cast<size_t>(u) * minreps_.size() + w] != 0; }

    // All (root index, target) pairs with elem(u)*s_alpha a minimal
    // representative of codimension codim(u)+1, in root order.
    const std::vector<std::pair<int, int>>& raising_covers(int u) const { return covers_[u]; }

    // Roots alpha with elem(u)*s_alpha minimal, codim+1, and target
    // preceding w: the cover set of the pair (u, w). Root order.
    std::vector<std::pair<int, int>> cov(int u, int w) const;

    // Ordinary Bruhat order on the full group, via the subword criterion on
    // the canonical reduced word of b.
    bool bruhat_leq(const WeylElem& a, const WeylElem& b) const;

    std::uint64_t weyl_order() const { return rs_->weyl_order; }
    std::uint64_t levi_order() const { return levi_order_; }

    // Canonical printable form: "e" or 1-based letters like "2 1".
    std::string elem_string(int idx) const;
    static std::string word_string(const std::vector<int>& word);

  private:
    std::shared_ptr<const RootSystemData> rs_;
    WeylContext ctx_;
    std::vector<int> levi_;
    std::vector<int> free_;
    std::vector<char> in_levi_;
    int dim_ = 0;
    std::uint64_t levi_order_ = 1;

    std::vector<WeylElem> minreps_;
    std::map<WeylElem, int> index_;
    std::vector<int> length_;
    std::vector<int> codim_;
    std::vector<int> dual_;
    int wbar0_ = -1;
    std::vector<int> s_beta_;
    std::vector<char> prec_;
    std::vector<std::vector<std::pair<int, int>>> covers_;
};

} // namespace eqsc
