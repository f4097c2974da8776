#include "eqsc/cartan.hpp"

#include <cctype>
#include <numeric>

#include "eqsc/errors.hpp"
#include "eqsc/numeric.hpp"

namespace eqsc {

namespace {

// Leading principal minors of a symmetric integer matrix, all required > 0.
// Exact computation via fraction-free (Bareiss) elimination on Int entries.
bool positive_definite(const std::vector<std::vector<Int>>& s) {
    const int n = static_cast<int>(s.size());
    std::vector<std::vector<Int>> m = s;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false; // pivot equals k-th leading minor / prev
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return true;
}

std::vector<int> find_symmetrizer(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    // d[i]*a[i][j] = d[j]*a[j][i] forces the ratio d[j]/d[i] = a[i][j]/a[j][i]
    // along every edge of the Dynkin graph. Propagate rationals per component,
    // scale each component to minimal positive integers.
    std::vector<Rat> r(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = ncomp;
        r[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rat want = r[i] * Rat(a[i][j]) / Rat(a[j][i]);
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    r[j] = want;
                    stack.push_back(j);
                } else if (r[j] != want) {
                    throw NonFiniteTypeError("Cartan matrix admits no symmetrizer");
                }
            }
        }
        ++ncomp;
    }
    // Scale each component: multiply by lcm of denominators, divide by gcd.
    std::vector<int> d(n, 0);
    for (int c = 0; c < ncomp; ++c) {
        Int lcm = 1;
        for (int i = 0; i < n; ++i) {
            if (comp[i] != c) continue;
            Int den = rat_den(r[i]);
            lcm = lcm / int_gcd(lcm, den) * den;
        }
        Int g = 0;
        std::vector<Int> scaled(n);
        for (int i = 0; i < n; ++i) {
            if (comp[i] != c) continue;
            scaled[i] = rat_num(r[i]) * (lcm / rat_den(r[i]));
            g = int_gcd(g, scaled[i]);
        }
        for (int i = 0; i < n; ++i) {
            if (comp[i] != c) continue;
            Int v = scaled[i] / g;
            if (v <= 0 || v > 1000000) {
                throw NonFiniteTypeError("symmetrizer entry out of range");
            }
            d[i] = static_cast<int>(v);
        }
    }
    return d;
}

} // namespace

CartanData CartanData::from_matrix(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw NonFiniteTypeError("empty Cartan matrix");
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) {
            throw NonFiniteTypeError("Cartan matrix is not square");
        }
    }
    for (int i = 0; i < n; ++i) {
        if (m[i][i] != 2) throw NonFiniteTypeError("Cartan diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) {
                throw NonFiniteTypeError("off-diagonal Cartan entries must be <= 0");
            }
            if ((m[i][j] == 0) != (m[j][i] == 0)) {
                throw NonFiniteTypeError("Cartan zero pattern must be symmetric");
            }
        }
    }
    CartanData cd;
    cd.rank = n;
    cd.a = m;
    cd.d = find_symmetrizer(m);
    std::vector<std::vector<Int>> s(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            s[i][j] = Int(cd.d[i]) * m[i][j];
            if (i > j && s[i][j] != Int(cd.d[j]) * m[j][i]) {
                throw NonFiniteTypeError("symmetrizer check failed");
            }
        }
    }
    if (!positive_definite(s)) {
        throw NonFiniteTypeError("Cartan matrix is not of finite type");
    }
    return cd;
}

int CartanData::inner(int i, int j) const {
    return d[i] * a[i][j];
}

namespace {

std::vector<std::vector<int>> chain(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 2;
        if (i + 1 < n) {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    return m;
}

} // namespace

CartanData CartanData::preset(const std::string& name) {
    if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        throw BadIndexError("unknown group preset: " + name);
    }
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(name.substr(1), &pos);
        if (pos + 1 != name.size()) n = -1;
    } catch (...) {
        n = -1;
    }
    if (n <= 0) throw BadIndexError("unknown group preset: " + name);

    auto out_of_family = [&]() -> CartanData {
        throw BadIndexError("unsupported preset rank: " + name);
    };

    switch (family) {
        case 'A': {
            if (n < 1 || n > 8) return out_of_family();
            return from_matrix(chain(n));
        }
        case 'B': {
            // last node short: a[n-1][n] = -1, a[n][n-1] = -2 (1-based)
            if (n < 2 || n > 8) return out_of_family();
            auto m = chain(n);
            m[n - 1][n - 2] = -2;
            return from_matrix(m);
        }
        case 'C': {
            // last node long
            if (n < 2 || n > 8) return out_of_family();
            auto m = chain(n);
            m[n - 2][n - 1] = -2;
            return from_matrix(m);
        }
        case 'D': {
            if (n < 4 || n > 8) return out_of_family();
            auto m = chain(n - 1);
            for (auto& row : m) row.push_back(0);
            m.push_back(std::vector<int>(n, 0));
            m[n - 1][n - 1] = 2;
            m[n - 1][n - 3] = -1;
            m[n - 3][n - 1] = -1;
            return from_matrix(m);
        }
        case 'E': {
            if (n < 6 || n > 8) return out_of_family();
            // Nodes 1..n-1 form a chain, node n attaches to node 3.
            auto m = chain(n - 1);
            for (auto& row : m) row.push_back(0);
            m.push_back(std::vector<int>(n, 0));
            m[n - 1][n - 1] = 2;
            m[n - 1][2] = -1;
            m[2][n - 1] = -1;
            return from_matrix(m);
        }
        case 'F': {
            if (n != 4) return out_of_family();
            auto m = chain(4);
            m[2][1] = -2; // nodes 1,2 long, nodes 3,4 short
            return from_matrix(m);
        }
        case 'G': {
            if (n != 2) return out_of_family();
            return from_matrix({{2, -1}, {-3, 2}});
        }
        default:
            throw BadIndexError("unknown group preset: " + name);
    }
}

} // namespace eqsc
