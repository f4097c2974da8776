#include "eqsc/qdegree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "eqsc/errors.hpp"

namespace eqsc {

QuantumGrading::QuantumGrading(const ParabolicQuotient* q) : q_(q) {
    const RootSystemData& rs = q->roots();
    // Sum of the positive roots outside the Levi sub-root-system.
    RootVec sum(rs.rank, 0);
    for (int r = 0; r < static_cast<int>(rs.positive_roots.size()); ++r) {
        if (q->root_in_levi(r)) continue;
        for (int i = 0; i < rs.rank; ++i) sum[i] += rs.positive_roots[r][i];
    }
    nbeta_.reserve(q->free_indices().size());
    for (int i : q->free_indices()) {
        RootVec simple(rs.rank, 0);
        simple[i] = 1;
        int value = rs.coroot_value(rs.index_of(simple), sum);
        if (value < 2)
            throw InternalInconsistencyError(
                "quantum parameter degree below 2 at position " + std::to_string(i + 1));
        nbeta_.push_back(value);
    }
}

int QuantumGrading::nbeta(int free_pos) const {
    if (free_pos < 0 || free_pos >= static_cast<int>(nbeta_.size()))
        throw IndexOutOfRangeError("quantum parameter position out of range");
    return nbeta_[free_pos];
}

DegreeVec QuantumGrading::d_of_alpha(int root_idx) const {
    if (q_->root_in_levi(root_idx))
        throw RootInLeviError("root lies in the Levi sub-root-system and carries no degree");
    const std::vector<int>& cv = q_->roots().coroot[root_idx];
    DegreeVec d;
    d.reserve(q_->free_indices().size());
    for (int i : q_->free_indices()) d.push_back(cv[i]);
    return d;
}

int QuantumGrading::n_of_alpha(int root_idx) const { return weighted_deg(d_of_alpha(root_idx)); }

int QuantumGrading::weighted_deg(const DegreeVec& d) const {
    if (d.size() != nbeta_.size()) throw IndexOutOfRangeError("degree vector has the wrong length");
    int w = 0;
    for (std::size_t k = 0; k < d.size(); ++k) w += nbeta_[k] * d[k];
    return w;
}

bool QuantumGrading::is_zero(const DegreeVec& d) const {
    return std::all_of(d.begin(), d.end(), [](int c) { return c == 0; });
}

bool QuantumGrading::dominated(const DegreeVec& a, const DegreeVec& b) {
    if (a.size() != b.size()) throw IndexOutOfRangeError("degree vectors of different length");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

DegreeVec QuantumGrading::subtract(const DegreeVec& a, const DegreeVec& b) {
    if (a.size() != b.size()) throw IndexOutOfRangeError("degree vectors of different length");
    DegreeVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

std::vector<DegreeVec> QuantumGrading::degrees_of_weight(int w) const {
    std::vector<DegreeVec> out;
    DegreeVec cur(nbeta_.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos == nbeta_.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int c = 0; c * nbeta_[pos] <= left; ++c) {
            cur[pos] = c;
            rec(pos + 1, left - c * nbeta_[pos]);
        }
        cur[pos] = 0;
    };
    if (w >= 0) rec(0, w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DegreeVec> QuantumGrading::degrees_up_to(int bound) const {
    std::vector<DegreeVec> out;
    for (int w = 0; w <= bound; ++w) {
        std::vector<DegreeVec> layer = degrees_of_weight(w);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string QuantumGrading::str(const DegreeVec& d) {
    std::ostringstream os;
    os << "d=(";
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (k) os << ",";
        os << d[k];
    }
    os << ")";
    return os.str();
}

std::string QuantumGrading::q_monomial(const DegreeVec& d) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] == 0) continue;
        if (any) os << "*";
        os << "q" << (k + 1);
        if (d[k] > 1) os << "^" << d[k];
        any = true;
    }
    return any ? os.str() : "1";
}

} // namespace eqsc
