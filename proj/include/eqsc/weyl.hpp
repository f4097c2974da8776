#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "eqsc/root_system.hpp"

namespace eqsc {

// A Weyl group element stored as its integer action matrix on the root
// lattice in simple-root coordinates (row-major, column j = image of the j-th
// simple root). Immutable value type.
struct WeylElem {
    int n = 0;
    std::vector<int> m; // n*n, row-major

    static WeylElem identity(int n);
    bool operator==(const WeylElem& o) const { return n == o.n && m == o.m; }
    bool operator<(const WeylElem& o) const { return m < o.m; }
    int at(int r, int c) const { return m[static_cast<size_t>(r) * n + c]; }
};

struct WeylElemHash {
    size_t operator()(const WeylElem& w) const {
        size_t h = 1469598103934665603ull;
        for (int v : w.m) {
            h ^= static_cast<size_t>(v + 7);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Operations on Weyl elements relative to a fixed root system.
class WeylContext {
  public:
    explicit WeylContext(const RootSystemData* rs);

    const RootSystemData& roots() const { return *rs_; }
    int rank() const { return rs_->rank; }

    const WeylElem& simple_reflection(int i) const;
    // Reflection in the positive root with the given index.
    WeylElem reflection(int root_idx) const;

    WeylElem multiply(const WeylElem& a, const WeylElem& b) const;
    WeylElem inverse(const WeylElem& w) const;

    RootVec act_root(const WeylElem& w, const RootVec& v) const;
    WeightVector act_weight(const WeylElem& w, const WeightVector& v) const;

    // True if w maps the i-th simple root to a negative root.
    bool sends_simple_negative(const WeylElem& w, int i) const;

    // Number of positive roots made negative.
    int length(const WeylElem& w) const;

    // Canonical reduced word (0-based letters), built by greedy descent on
    // the smallest index. Empty for the identity.
    std::vector<int> reduced_word(const WeylElem& w) const;
    // Variant descending on the largest index; used to cross-check
    // word-independent constructions.
    std::vector<int> reduced_word_alt(const WeylElem& w) const;

    WeylElem from_word(const std::vector<int>& word) const;

    const WeylElem& longest_element() const { return w0_; }

  private:
    const RootSystemData* rs_;
    std::vector<WeylElem> simple_;
    WeylElem w0_;
};

} // namespace eqsc
