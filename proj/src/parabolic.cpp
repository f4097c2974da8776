#include "eqsc/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "eqsc/errors.hpp"

namespace eqsc {

ParabolicQuotient::ParabolicQuotient(std::shared_ptr<const RootSystemData> rs,
                                     std::vector<int> levi)
    : rs_(std::move(rs)), ctx_(rs_.get()), levi_(std::move(levi)) {
    const int n = rs_->rank;
    std::sort(levi_.begin(), levi_.end());
    levi_.erase(std::unique(levi_.begin(), levi_.end()), levi_.end());
    for (int i : levi_) {
        if (i < 0 || i >= n) throw IndexOutOfRangeError("Levi index out of range");
    }
    std::vector<char> is_levi(n, 0);
    for (int i : levi_) is_levi[i] = 1;
    for (int i = 0; i < n; ++i) {
        if (!is_levi[i]) free_.push_back(i);
    }

    const auto& pos = rs_->positive_roots;
    in_levi_.assign(pos.size(), 0);
    int levi_root_count = 0;
    for (size_t r = 0; r < pos.size(); ++r) {
        bool inside = true;
        for (int j = 0; j < n; ++j) {
            if (pos[r][j] != 0 && !is_levi[j]) { inside = false; break; }
        }
        if (inside) {
            in_levi_[r] = 1;
            ++levi_root_count;
        }
    }
    dim_ = static_cast<int>(pos.size()) - levi_root_count;

    // |W_P| by the same exponent identity as the full group, applied to the
    // Levi sub-root-system (heights are preserved since supports lie in P).
    {
        int max_h = 0;
        for (size_t r = 0; r < pos.size(); ++r) {
            if (in_levi_[r]) max_h = std::max(max_h, rs_->height[r]);
        }
        std::vector<int> count(max_h + 1, 0);
        for (size_t r = 0; r < pos.size(); ++r) {
            if (in_levi_[r]) ++count[rs_->height[r]];
        }
        levi_order_ = 1;
        for (size_t i = 0; i < levi_.size(); ++i) {
            int e = 0;
            while (e + 1 <= max_h && count[e + 1] > static_cast<int>(i)) ++e;
            levi_order_ *= static_cast<std::uint64_t>(e + 1);
        }
    }

    // Enumerate minimal representatives: left multiplication by simple
    // reflections acts on cosets; close up from the identity.
    {
        std::set<WeylElem> seen;
        std::deque<WeylElem> queue;
        WeylElem e = WeylElem::identity(n);
        seen.insert(e);
        queue.push_back(e);
        while (!queue.empty()) {
            WeylElem w = queue.front();
            queue.pop_front();
            for (int i = 0; i < n; ++i) {
                WeylElem t = min_rep(ctx_.multiply(ctx_.simple_reflection(i), w));
                if (seen.insert(t).second) queue.push_back(t);
            }
        }
        minreps_.assign(seen.begin(), seen.end());
    }
    std::vector<std::pair<std::vector<int>, int>> order;
    for (size_t i = 0; i < minreps_.size(); ++i) {
        order.emplace_back(ctx_.reduced_word(minreps_[i]), static_cast<int>(i));
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    {
        std::vector<WeylElem> sorted;
        for (const auto& [word, idx] : order) sorted.push_back(minreps_[idx]);
        minreps_ = std::move(sorted);
    }
    if (rs_->weyl_order % levi_order_ != 0 ||
        minreps_.size() != rs_->weyl_order / levi_order_) {
        throw InternalInconsistencyError("minimal representative count mismatch");
    }
    for (size_t i = 0; i < minreps_.size(); ++i) {
        index_[minreps_[i]] = static_cast<int>(i);
        length_.push_back(ctx_.length(minreps_[i]));
    }

    const WeylElem& w0 = ctx_.longest_element();
    for (size_t i = 0; i < minreps_.size(); ++i) {
        WeylElem d = min_rep(ctx_.multiply(w0, minreps_[i]));
        auto it = index_.find(d);
        if (it == index_.end()) throw InternalInconsistencyError("dual escaped the quotient");
        dual_.push_back(it->second);
        codim_.push_back(ctx_.length(d));
        if (codim_.back() != dim_ - length_[i]) {
            throw InternalInconsistencyError("codimension bookkeeping mismatch");
        }
    }
    for (size_t i = 0; i < minreps_.size(); ++i) {
        if (dual_[static_cast<size_t>(dual_[i])] != static_cast<int>(i)) {
            throw InternalInconsistencyError("dual is not an involution");
        }
        if (codim_[i] == 0) wbar0_ = static_cast<int>(i);
    }

    for (int fpos = 0; fpos < static_cast<int>(free_.size()); ++fpos) {
        WeylElem s = ctx_.simple_reflection(free_[fpos]);
        WeylElem d = min_rep(ctx_.multiply(w0, s));
        int idx = index_.at(d);
        if (codim_[idx] != 1) {
            throw InternalInconsistencyError("divisor class has wrong codimension");
        }
        s_beta_.push_back(idx);
    }

    // Reversed Bruhat order via duals and the subword criterion.
    const size_t N = minreps_.size();
    prec_.assign(N * N, 0);
    for (size_t u = 0; u < N; ++u) {
        for (size_t w = 0; w < N; ++w) {
            if (u == w) {
                prec_[u * N + w] = 1;
            } else if (codim_[u] < codim_[w]) {
                prec_[u * N + w] =
                    bruhat_leq(minreps_[dual_[u]], minreps_[dual_[w]]) ? 1 : 0;
            }
        }
    }

    covers_.resize(N);
    for (size_t u = 0; u < N; ++u) {
        for (size_t r = 0; r < pos.size(); ++r) {
            if (in_levi_[r]) continue;
            WeylElem t = ctx_.multiply(minreps_[u], ctx_.reflection(static_cast<int>(r)));
            if (!is_minimal(t)) continue;
            auto it = index_.find(t);
            if (it == index_.end()) throw InternalInconsistencyError("minimality test disagrees with the index");
            if (codim_[it->second] == codim_[u] + 1) {
                covers_[u].emplace_back(static_cast<int>(r), it->second);
            }
        }
    }
}

int ParabolicQuotient::s_of_beta(int free_pos) const {
    if (free_pos < 0 || free_pos >= static_cast<int>(free_.size())) {
        throw IndexOutOfRangeError("free simple index position out of range");
    }
    return s_beta_[free_pos];
}

bool ParabolicQuotient::is_minimal(const WeylElem& w) const {
    for (int i : levi_) {
        if (ctx_.sends_simple_negative(w, i)) return false;
    }
    return true;
}

WeylElem ParabolicQuotient::min_rep(const WeylElem& w) const {
    WeylElem cur = w;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i : levi_) {
            if (ctx_.sends_simple_negative(cur, i)) {
                cur = ctx_.multiply(cur, ctx_.simple_reflection(i));
                progress = true;
                break;
            }
        }
    }
    return cur;
}

int ParabolicQuotient::index_of(const WeylElem& w) const {
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    WeylElem p = min_rep(w);
    auto jt = index_.find(p);
    std::string hint = jt == index_.end() ? std::string("?") : elem_string(jt->second);
    throw NotMinimalRepresentativeError(
        "element \"" + word_string(ctx_.reduced_word(w)) +
        "\" is not a minimal representative; its projection is \"" + hint + "\"");
}

int ParabolicQuotient::project(const WeylElem& w) const {
    return index_.at(min_rep(w));
}

std::vector<std::pair<int, int>> ParabolicQuotient::cov(int u, int w) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [r, t] : covers_[u]) {
        if (prec(t, w)) out.emplace_back(r, t);
    }
    return out;
}

bool ParabolicQuotient::bruhat_leq(const WeylElem& a, const WeylElem& b) const {
    // Scan the canonical reduced word of b right to left; multiply the
    // descent into the candidate whenever one appears (lifting property).
    std::vector<int> word = ctx_.reduced_word(b);
    WeylElem v = a;
    WeylElem id = WeylElem::identity(rs_->rank);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (v == id) return true;
        if (ctx_.sends_simple_negative(v, *it)) {
            v = ctx_.multiply(v, ctx_.simple_reflection(*it));
        }
    }
    return v == id;
}

std::string ParabolicQuotient::elem_string(int idx) const {
    return word_string(ctx_.reduced_word(minreps_[idx]));
}

std::string ParabolicQuotient::word_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(word[i] + 1);
    }
    return s;
}

} // namespace eqsc
