#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqsc/numeric.hpp"
#include "eqsc/root_system.hpp"

namespace eqsc {

using ExpVec = std::vector<int>;

inline int exp_total(const ExpVec& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
}

// Graded lexicographic order, biggest term first: higher total degree wins,
// ties broken lexicographically on the exponent vector.
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = exp_total(a), db = exp_total(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// Exact multivariate polynomial with arbitrary-precision integer
// coefficients. Variables x1..xn are the negatives of the simple roots; that
// convention lives in the callers, the type itself is plain Z[x1..xn].
class Polynomial {
  public:
    using TermMap = std::map<ExpVec, Int, GradedLexGreater>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Int& c);
    static Polynomial variable(int nvars, int i, int power = 1);
    static Polynomial monomial(int nvars, const ExpVec& e, const Int& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    Int coeff_of(const ExpVec& e) const;
    Int constant_term() const;
    size_t term_count() const { return terms_.size(); }

    // Largest term in the graded-lex order; polynomial must be nonzero.
    const std::pair<const ExpVec, Int>& leading() const;

    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;
    // Degree if homogeneous; zero polynomial counts as homogeneous of the
    // requested degree.
    bool is_homogeneous_of(int deg) const;
    bool nonneg_coeffs() const;

    void add_term(const ExpVec& e, const Int& c); // merges, drops zeros

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Int& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

    // Canonical text form, e.g. "x1^2*x2 + 3*x1" or "0".
    std::string str() const;
    static Polynomial parse(const std::string& text, int nvars);

  private:
    int nvars_ = 0;
    TermMap terms_;
};

// Quotient and remainder-free division: returns the quotient iff den divides
// num exactly over the integers.
std::optional<Polynomial> try_divexact(const Polynomial& num, const Polynomial& den);
// Same but throws InternalInconsistencyError when not divisible.
Polynomial divexact(const Polynomial& num, const Polynomial& den);

// Sign-normalized gcd (leading coefficient positive), computed by the
// content / primitive-part recursion with a primitive pseudo-remainder
// sequence in the top variable.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Reduced fraction of polynomials. Canonical form: gcd(num, den) = 1, the
// denominator's leading coefficient positive, zero stored as 0/1.
class RatFn {
  public:
    RatFn() = default;
    explicit RatFn(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(num_.nvars(), 1)) {}
    RatFn(Polynomial num, Polynomial den);

    static RatFn zero(int nvars) { return RatFn(Polynomial::zero(nvars)); }
    static RatFn one(int nvars) { return RatFn(Polynomial::constant(nvars, 1)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    // Throws InternalInconsistencyError if the denominator did not clear.
    const Polynomial& as_polynomial() const;

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void normalize();
    Polynomial num_; // zero polynomial by default
    Polynomial den_ = Polynomial::constant(0, 1);
};

// The ring automorphism induced by the longest element: the i-th simple root
// is sent to the variable x_{i*} (its image under minus the Dynkin
// involution). Extended linearly; input coordinates must be integral.
Polynomial phi(const WeightVector& v, const std::vector<int>& involution);
Polynomial phi(const RootVec& v, const std::vector<int>& involution);

} // namespace eqsc
