#include "eqsc/chevalley.hpp"

#include <map>
#include <utility>

#include "eqsc/errors.hpp"

namespace eqsc {

ChevalleyContext::ChevalleyContext(const ParabolicQuotient* q, const QuantumGrading* grading)
    : q_(q), g_(grading) {
    const size_t cells = static_cast<size_t>(g_->qvars()) * q_->size();
    diag_.resize(cells);
    exp_.resize(cells);
    rev_.resize(g_->qvars());
}

const Polynomial& ChevalleyContext::diag_coeff(int free_pos, int w) {
    auto& slot = diag_[static_cast<size_t>(free_pos) * q_->size() + w];
    if (!slot) {
        const RootSystemData& rs = q_->roots();
        const WeylContext& cx = q_->ctx();
        int beta = q_->free_indices()[free_pos];
        const WeylElem& wd = q_->elem(q_->dual(w));

        // Localization weight omega_beta - dual(w)(omega_beta), first as a sum
        // of the roots picked out by the letters equal to beta in a reduced
        // word of dual(w).
        RootVec sum(rs.rank, 0);
        WeylElem prefix = WeylElem::identity(rs.rank);
        for (int letter : cx.reduced_word(wd)) {
            if (letter == beta) {
                RootVec e(rs.rank, 0);
                e[letter] = 1;
                RootVec img = cx.act_root(prefix, e);
                for (int i = 0; i < rs.rank; ++i) sum[i] += img[i];
            }
            prefix = cx.multiply(prefix, cx.simple_reflection(letter));
        }

        // Second, directly in weight coordinates; the two must agree.
        const WeightVector& om = rs.fundamental[beta];
        WeightVector moved = cx.act_weight(wd, om);
        for (int i = 0; i < rs.rank; ++i) {
            if (om[i] - moved[i] != Rat(sum[i]))
                throw InternalInconsistencyError(
                    "localization weight mismatch between the word route and the direct route");
        }

        slot = phi(sum, rs.involution);
    }
    return *slot;
}

Polynomial ChevalleyContext::f_form(int free_pos, int a, int b) {
    return diag_coeff(free_pos, a) - diag_coeff(free_pos, b);
}

int ChevalleyContext::choose_beta(int a, int b) {
    if (a == b)
        throw PreconditionViolatedError("no divisor separates an element from itself");
    for (int pos = 0; pos < g_->qvars(); ++pos) {
        if (!f_form(pos, a, b).is_zero()) return pos;
    }
    throw InternalInconsistencyError("no divisor separates " + q_->elem_string(a) + " from " +
                                     q_->elem_string(b));
}

const ChevalleyExpansion& ChevalleyContext::expand(int free_pos, int w) {
    auto& slot = exp_[static_cast<size_t>(free_pos) * q_->size() + w];
    if (!slot) {
        const RootSystemData& rs = q_->roots();
        const WeylContext& cx = q_->ctx();
        int beta = q_->free_indices()[free_pos];
        ChevalleyExpansion ex;
        ex.free_pos = free_pos;
        ex.w = w;
        ex.diag = diag_coeff(free_pos, w);
        const WeylElem& we = q_->elem(w);
        const int cw = q_->codim(w);
        std::map<std::pair<int, DegreeVec>, Int> qmerge;
        for (int r = 0; r < static_cast<int>(rs.positive_roots.size()); ++r) {
            if (q_->root_in_levi(r)) continue;
            Int h = rs.coroot[r][beta]; // value of the coroot on omega_beta
            if (h == 0) continue;
            WeylElem ws = cx.multiply(we, cx.reflection(r));
            if (q_->is_minimal(ws)) {
                int t = q_->index_of(ws);
                if (q_->codim(t) == cw + 1) {
                    ex.classical.push_back({t, g_->zero(), h});
                    continue;
                }
            }
            int tq = q_->project(ws);
            if (q_->codim(tq) == cw + 1 - g_->n_of_alpha(r))
                qmerge[{tq, g_->d_of_alpha(r)}] += h;
        }
        for (auto& [key, h] : qmerge) {
            if (h != 0) ex.quantum.push_back({key.first, key.second, h});
        }
        slot = std::move(ex);
    }
    return *slot;
}

const std::vector<ReverseTerm>& ChevalleyContext::reverse(int free_pos, int target) {
    auto& slot = rev_[free_pos];
    if (!slot) {
        std::vector<std::vector<ReverseTerm>> lists(q_->size());
        for (int z = 0; z < q_->size(); ++z) {
            const ChevalleyExpansion& ex = expand(free_pos, z);
            for (const ChevalleyTerm& t : ex.classical) lists[t.target].push_back({z, t.deg, t.h});
            for (const ChevalleyTerm& t : ex.quantum) lists[t.target].push_back({z, t.deg, t.h});
        }
        slot = std::move(lists);
    }
    return (*slot)[target];
}

void ChevalleyContext::warm_all() {
    for (int pos = 0; pos < g_->qvars(); ++pos) {
        for (int w = 0; w < q_->size(); ++w) expand(pos, w);
        reverse(pos, 0);
    }
}

} // namespace eqsc
