#include "eqsc/weyl.hpp"

#include <algorithm>

#include "eqsc/errors.hpp"

namespace eqsc {

WeylElem WeylElem::identity(int n) {
    WeylElem w;
    w.n = n;
    w.m.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) w.m[static_cast<size_t>(i) * n + i] = 1;
    return w;
}

WeylContext::WeylContext(const RootSystemData* rs) : rs_(rs) {
    const int n = rs_->rank;
    for (int i = 0; i < n; ++i) {
        WeylElem s = WeylElem::identity(n);
        // column j of s_i is b_j - a[i][j] b_i
        for (int j = 0; j < n; ++j) {
            s.m[static_cast<size_t>(i) * n + j] -= rs_->cartan.a[i][j];
        }
        simple_.push_back(std::move(s));
    }
    WeylElem w = WeylElem::identity(n);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; ++i) {
            if (!sends_simple_negative(w, i)) {
                w = multiply(w, simple_[i]);
                progress = true;
                break;
            }
        }
    }
    w0_ = w;
}

const WeylElem& WeylContext::simple_reflection(int i) const {
    if (i < 0 || i >= rank()) throw IndexOutOfRangeError("simple index out of range");
    return simple_[i];
}

WeylElem WeylContext::reflection(int root_idx) const {
    const int n = rank();
    if (root_idx < 0 || root_idx >= static_cast<int>(rs_->positive_roots.size())) {
        throw IndexOutOfRangeError("root index out of range");
    }
    const RootVec& alpha = rs_->positive_roots[root_idx];
    WeylElem s = WeylElem::identity(n);
    for (int j = 0; j < n; ++j) {
        RootVec ej(n, 0);
        ej[j] = 1;
        int h = rs_->coroot_value(root_idx, ej);
        for (int k = 0; k < n; ++k) {
            s.m[static_cast<size_t>(k) * n + j] -= h * alpha[k];
        }
    }
    return s;
}

WeylElem WeylContext::multiply(const WeylElem& a, const WeylElem& b) const {
    const int n = rank();
    WeylElem c;
    c.n = n;
    c.m.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                c.m[static_cast<size_t>(i) * n + j] += aik * b.at(k, j);
            }
        }
    }
    return c;
}

WeylElem WeylContext::inverse(const WeylElem& w) const {
    auto word = reduced_word(w);
    WeylElem r = WeylElem::identity(rank());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        r = multiply(r, simple_[*it]);
    }
    return r;
}

RootVec WeylContext::act_root(const WeylElem& w, const RootVec& v) const {
    const int n = rank();
    RootVec out(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (v[j] != 0) out[i] += w.at(i, j) * v[j];
        }
    }
    return out;
}

WeightVector WeylContext::act_weight(const WeylElem& w, const WeightVector& v) const {
    const int n = rank();
    WeightVector out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (v[j] != 0) out[i] += Rat(w.at(i, j)) * v[j];
        }
    }
    return out;
}

bool WeylContext::sends_simple_negative(const WeylElem& w, int i) const {
    // image of b_i is column i; sign of the first nonzero coordinate decides.
    for (int r = 0; r < rank(); ++r) {
        int v = w.at(r, i);
        if (v > 0) return false;
        if (v < 0) return true;
    }
    throw InternalInconsistencyError("zero column in a Weyl matrix");
}

int WeylContext::length(const WeylElem& w) const {
    int count = 0;
    for (const auto& alpha : rs_->positive_roots) {
        RootVec img = act_root(w, alpha);
        for (int c : img) {
            if (c < 0) { ++count; break; }
            if (c > 0) break;
        }
    }
    return count;
}

std::vector<int> WeylContext::reduced_word(const WeylElem& w) const {
    std::vector<int> word;
    WeylElem cur = w;
    WeylElem id = WeylElem::identity(rank());
    while (!(cur == id)) {
        int pick = -1;
        for (int i = 0; i < rank(); ++i) {
            if (sends_simple_negative(cur, i)) { pick = i; break; }
        }
        if (pick < 0) throw InternalInconsistencyError("non-identity element with no descent");
        word.push_back(pick);
        cur = multiply(cur, simple_[pick]);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> WeylContext::reduced_word_alt(const WeylElem& w) const {
    std::vector<int> word;
    WeylElem cur = w;
    WeylElem id = WeylElem::identity(rank());
    while (!(cur == id)) {
        int pick = -1;
        for (int i = rank() - 1; i >= 0; --i) {
            if (sends_simple_negative(cur, i)) { pick = i; break; }
        }
        if (pick < 0) throw InternalInconsistencyError("non-identity element with no descent");
        word.push_back(pick);
        cur = multiply(cur, simple_[pick]);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

WeylElem WeylContext::from_word(const std::vector<int>& word) const {
    WeylElem w = WeylElem::identity(rank());
    for (int i : word) {
        if (i < 0 || i >= rank()) throw IndexOutOfRangeError("letter out of range in word");
        w = multiply(w, simple_[i]);
    }
    return w;
}

} // namespace eqsc
