#include "eqsc/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eqsc/errors.hpp"

namespace eqsc {

namespace {

int vec_height(const RootVec& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
}

bool graded_lex_less(const RootVec& a, const RootVec& b) {
    int ha = vec_height(a), hb = vec_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

// Rational matrix inverse by Gauss-Jordan; input is small (rank <= 8).
std::vector<std::vector<Rat>> invert(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (m[r][col] != 0) { piv = r; break; }
        }
        if (piv < 0) throw NonFiniteTypeError("singular Cartan matrix");
        std::swap(m[col], m[piv]);
        Rat p = m[col][col];
        for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    }
    return inv;
}

} // namespace

int RootSystemData::index_of(const RootVec& r) const {
    auto it = root_index_.find(r);
    return it == root_index_.end() ? -1 : it->second;
}

bool RootSystemData::is_positive_root(const RootVec& r) const {
    return index_of(r) >= 0;
}

int RootSystemData::pairing(const RootVec& alpha, int j) const {
    if (j < 0 || j >= rank) throw IndexOutOfRangeError("simple index out of range");
    int idx = index_of(alpha);
    if (idx >= 0) return coroot[idx][j];
    RootVec neg(alpha.size());
    for (size_t k = 0; k < alpha.size(); ++k) neg[k] = -alpha[k];
    idx = index_of(neg);
    if (idx < 0) throw NotARootError("vector is not a root of the system");
    return -coroot[idx][j];
}

int RootSystemData::coroot_value(int root_idx, const RootVec& v) const {
    if (root_idx < 0 || root_idx >= static_cast<int>(positive_roots.size())) {
        throw IndexOutOfRangeError("root index out of range");
    }
    // h_alpha(v) = sum_i c_i h_i(v) with h_i(b_j) = a[i][j].
    int total = 0;
    for (int i = 0; i < rank; ++i) {
        if (coroot[root_idx][i] == 0) continue;
        int hi = 0;
        for (int j = 0; j < rank; ++j) hi += cartan.a[i][j] * v[j];
        total += coroot[root_idx][i] * hi;
    }
    return total;
}

RootSystemData build_root_system(const CartanData& cartan, const Limits& limits) {
    const int n = cartan.rank;
    if (n > limits.max_rank) {
        throw NonFiniteTypeError("rank exceeds the configured guard (see EQSC_MAX_RANK)");
    }
    RootSystemData rs;
    rs.cartan = cartan;
    rs.rank = n;

    // Reflection closure of the simple roots. s_i(v) = v - h_i(v) * b_i.
    std::set<RootVec> pos;
    std::vector<RootVec> frontier;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < n; ++i) {
                int hi = 0;
                for (int j = 0; j < n; ++j) hi += cartan.a[i][j] * r[j];
                RootVec img = r;
                img[i] -= hi;
                bool positive = true, negative = true;
                for (int c : img) {
                    if (c > 0) negative = false;
                    if (c < 0) positive = false;
                }
                if (!positive && !negative) {
                    throw InternalInconsistencyError("reflection produced a mixed-sign vector");
                }
                if (positive && pos.insert(img).second) next.push_back(img);
            }
        }
        if (pos.size() > 240) {
            throw NonFiniteTypeError("root closure exceeds the largest finite system");
        }
        frontier = std::move(next);
    }

    rs.positive_roots.assign(pos.begin(), pos.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), graded_lex_less);
    for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
        rs.root_index_[rs.positive_roots[i]] = static_cast<int>(i);
        rs.height.push_back(vec_height(rs.positive_roots[i]));
    }

    // Coroots: h_alpha = sum_i (c_i d_i / l) h_i with l = (alpha,alpha)/2.
    for (const auto& r : rs.positive_roots) {
        Int norm2 = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                norm2 += Int(r[i]) * r[j] * cartan.inner(i, j);
            }
        }
        if (norm2 <= 0 || norm2 % 2 != 0) {
            throw InternalInconsistencyError("root has a bad squared length");
        }
        Int l = norm2 / 2;
        std::vector<int> co(n, 0);
        for (int i = 0; i < n; ++i) {
            Int num = Int(r[i]) * cartan.d[i];
            if (num % l != 0) {
                throw InternalInconsistencyError("coroot coefficient is not integral");
            }
            co[i] = static_cast<int>(num / l);
        }
        rs.coroot.push_back(std::move(co));
    }

    // Weyl order from the height distribution: the exponents are the conjugate
    // partition of (#roots of height 1, #roots of height 2, ...), and the
    // order is the product of (exponent + 1).
    int max_h = 0;
    for (int h : rs.height) max_h = std::max(max_h, h);
    std::vector<int> count(max_h + 1, 0);
    for (int h : rs.height) ++count[h];
    for (int i = 0; i < n; ++i) {
        int e = 0;
        while (e + 1 <= max_h && count[e + 1] > i) ++e;
        rs.exponents.push_back(e);
    }
    std::sort(rs.exponents.begin(), rs.exponents.end());
    Int order = 1;
    for (int e : rs.exponents) order *= (e + 1);
    if (order > Int(limits.max_weyl_order)) {
        throw NonFiniteTypeError("Weyl group order exceeds the configured guard");
    }
    rs.weyl_order = static_cast<std::uint64_t>(order);

    // Fundamental weights: columns of the inverse Cartan matrix, since
    // h_i(omega_j) = sum_k a[i][k] (omega_j)_k = delta_ij.
    auto inv = invert(cartan.a);
    rs.fundamental.assign(n, WeightVector(n));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) rs.fundamental[j][k] = inv[k][j];
    }

    // Dynkin involution: -w0 permutes the simple roots. Build the action of
    // the longest element by greedy ascent (right-multiply by s_i while the
    // i-th column stays positive) and read off the permutation.
    {
        std::vector<RootVec> cols(n);
        for (int i = 0; i < n; ++i) {
            cols[i] = RootVec(n, 0);
            cols[i][i] = 1;
        }
        auto col_positive = [&](const RootVec& v) {
            for (int c : v) {
                if (c > 0) return true;
                if (c < 0) return false;
            }
            return false;
        };
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i = 0; i < n; ++i) {
                if (!col_positive(cols[i])) continue;
                // right-multiply by s_i: new column i' of w*s_i is
                // w(s_i(b_j)) = w(b_j) - a[i][j] w(b_i).
                std::vector<RootVec> nc = cols;
                for (int j = 0; j < n; ++j) {
                    for (int k = 0; k < n; ++k) {
                        nc[j][k] -= cartan.a[i][j] * cols[i][k];
                    }
                }
                cols = std::move(nc);
                progress = true;
                break;
            }
        }
        rs.involution.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            // cols[i] = w0(b_i) must equal minus a simple root.
            RootVec neg(n, 0);
            int hits = 0, star = -1;
            for (int k = 0; k < n; ++k) {
                if (cols[i][k] == -1) { star = k; ++hits; }
                else if (cols[i][k] != 0) { hits = -100; }
                neg[k] = -cols[i][k];
            }
            if (hits != 1 || !rs.is_positive_root(neg)) {
                throw InternalInconsistencyError("longest element does not negate the simple roots");
            }
            rs.involution[i] = star;
        }
    }

    return rs;
}

} // namespace eqsc
