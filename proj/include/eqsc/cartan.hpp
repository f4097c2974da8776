#pragma once

#include <string>
#include <vector>

namespace eqsc {

// Integer Cartan matrix together with its symmetrizer.
//
// Convention: a[i][j] is the value of the coroot of the i-th simple root on
// the j-th simple root, i.e. a[i][j] = 2(b_i, b_j) / (b_i, b_i) where b_k are
// the simple roots. Consequently the simple reflection s_i acts on the root
// lattice by s_i(b_j) = b_j - a[i][j] * b_i, and the symmetrizer d satisfies
// d[i] * a[i][j] = d[j] * a[j][i] with (b_i, b_i) = 2 * d[i].
struct CartanData {
    int rank = 0;
    std::vector<std::vector<int>> a; // rank x rank
    std::vector<int> d;              // positive symmetrizer, minimal

    // Validates shape (2 on the diagonal, nonpositive integers off it,
    // a[i][j] = 0 iff a[j][i] = 0), computes the minimal positive symmetrizer
    // and checks that d*a is symmetric positive definite (finite type).
    static CartanData from_matrix(const std::vector<std::vector<int>>& m);

    // Named presets: "A1".."A8", "B2".."B8", "C2".."C8", "D4".."D8",
    // "E6","E7","E8", "F4", "G2".
    static CartanData preset(const std::string& name);

    // (b_i, b_j) in the normalization (b_i, b_i) = 2 d[i].
    int inner(int i, int j) const;
};

} // namespace eqsc
