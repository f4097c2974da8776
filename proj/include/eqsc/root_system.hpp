#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "eqsc/cartan.hpp"
#include "eqsc/numeric.hpp"

namespace eqsc {

// A root or weight in simple-root coordinates.
using RootVec = std::vector<int>;
using WeightVector = std::vector<Rat>; // rational coordinates in simple roots

struct Limits {
    int max_rank = 8;
    std::uint64_t max_weyl_order = 1000000;
};

struct RootSystemData {
    CartanData cartan;
    int rank = 0;

    // Positive roots sorted by (height, lexicographic coordinates).
    std::vector<RootVec> positive_roots;
    std::vector<int> height; // per positive root

    // coroot[r][j]: coefficient of the j-th simple coroot in the coroot of
    // positive root r. Always a nonnegative integer for positive roots.
    std::vector<std::vector<int>> coroot;

    // involution[i] = i* where the longest element maps the i-th simple root
    // to minus the (i*)-th.
    std::vector<int> involution;

    // Fundamental weights in simple-root coordinates: fundamental[j] is the
    // weight dual to the j-th simple coroot.
    std::vector<WeightVector> fundamental;

    std::uint64_t weyl_order = 0;
    std::vector<int> exponents;

    // Index of a positive root, or -1.
    int index_of(const RootVec& r) const;
    bool is_positive_root(const RootVec& r) const;

    // h_alpha(omega_j) for alpha any root of the system (either sign).
    // Throws NotARootError if alpha is not a root, IndexOutOfRangeError for j.
    int pairing(const RootVec& alpha, int j) const;

    // h_alpha applied to an integral root-lattice vector; alpha a positive
    // root given by index.
    int coroot_value(int root_idx, const RootVec& v) const;

    std::map<RootVec, int> root_index_;
};

// Builds the root system by reflection closure; computes coroots, the Dynkin
// involution, fundamental weights and the Weyl group order. Enforces the rank
// and group-order guards from `limits`.
RootSystemData build_root_system(const CartanData& cartan, const Limits& limits = {});

} // namespace eqsc
