#include "eqsc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eqsc/errors.hpp"

namespace eqsc {

Polynomial Polynomial::constant(int nvars, const Int& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[ExpVec(nvars, 0)] = c;
    return p;
}

Polynomial Polynomial::variable(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw IndexOutOfRangeError("variable index out of range");
    Polynomial p(nvars);
    ExpVec e(nvars, 0);
    e[i] = power;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::monomial(int nvars, const ExpVec& e, const Int& c) {
    if (static_cast<int>(e.size()) != nvars) throw BadIndexError("exponent vector has wrong arity");
    Polynomial p(nvars);
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0;
}

Int Polynomial::coeff_of(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int Polynomial::constant_term() const {
    return coeff_of(ExpVec(nvars_, 0));
}

const std::pair<const ExpVec, Int>& Polynomial::leading() const {
    if (terms_.empty()) throw InternalInconsistencyError("leading term of zero polynomial");
    return *terms_.begin();
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return exp_total(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = exp_total(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (exp_total(e) != d) return false;
    }
    return true;
}

bool Polynomial::is_homogeneous_of(int deg) const {
    for (const auto& [e, c] : terms_) {
        if (exp_total(e) != deg) return false;
    }
    return true;
}

bool Polynomial::nonneg_coeffs() const {
    for (const auto& [e, c] : terms_) {
        if (c < 0) return false;
    }
    return true;
}

void Polynomial::add_term(const ExpVec& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p = *this;
    p += o;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial p = *this;
    p -= o;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial p(nvars_);
    if (is_zero() || o.is_zero()) return p;
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Polynomial Polynomial::scaled(const Int& c) const {
    Polynomial p(nvars_);
    if (c == 0) return p;
    for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
    return p;
}

namespace {

std::string monomial_str(const ExpVec& e, const Int& c, bool first) {
    std::ostringstream out;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    bool has_var = exp_total(e) > 0;
    if (a != 1 || !has_var) {
        out << a;
        if (has_var) out << "*";
    }
    bool printed = false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) out << "*";
        out << "x" << (i + 1);
        if (e[i] > 1) out << "^" << e[i];
        printed = true;
    }
    return out.str();
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        s += monomial_str(e, c, first);
        first = false;
    }
    return s;
}

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    Polynomial out(nvars);
    size_t i = 0;
    auto skip = [&]() { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> Int {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw UsageError("expected a number in polynomial at offset " + std::to_string(i));
        return Int(text.substr(start, i - start));
    };
    skip();
    if (i == text.size()) throw UsageError("empty polynomial text");
    bool first = true;
    while (i < text.size()) {
        skip();
        int sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-')) {
                throw UsageError("expected + or - in polynomial at offset " + std::to_string(i));
            }
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        }
        first = false;
        Int coeff = 1;
        ExpVec e(nvars, 0);
        bool any = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff *= read_int();
                any = true;
            } else if (i < text.size() && text[i] == 'x') {
                ++i;
                Int vi = read_int();
                if (vi < 1 || vi > nvars) throw UsageError("variable index out of range in polynomial");
                int v = static_cast<int>(vi) - 1;
                int power = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    power = static_cast<int>(read_int());
                }
                e[v] += power;
                any = true;
            } else {
                throw UsageError("expected a factor in polynomial at offset " + std::to_string(i));
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
            } else {
                expect_factor = false;
            }
        }
        if (!any) throw UsageError("empty term in polynomial");
        out.add_term(e, sign * coeff);
        skip();
    }
    return out;
}

std::optional<Polynomial> try_divexact(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Polynomial q(num.nvars());
    if (num.is_zero()) return q;
    Polynomial r = num;
    const auto& dl = den.leading();
    ExpVec e(num.nvars());
    while (!r.is_zero()) {
        const auto& rl = r.leading();
        for (int i = 0; i < num.nvars(); ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        if (rl.second % dl.second != 0) return std::nullopt;
        Int c = rl.second / dl.second;
        Polynomial t = Polynomial::monomial(num.nvars(), e, c);
        q += t;
        r -= t * den;
    }
    return q;
}

Polynomial divexact(const Polynomial& num, const Polynomial& den) {
    auto q = try_divexact(num, den);
    if (!q) throw InternalInconsistencyError("expected exact polynomial division");
    return *q;
}

namespace {

int deg_in(const Polynomial& p, int v) {
    int d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

Polynomial coeff_of_power(const Polynomial& p, int v, int k) {
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        ExpVec f = e;
        f[v] = 0;
        out.add_term(f, c);
    }
    return out;
}

Polynomial shift_var(const Polynomial& p, int v, int k) {
    if (k == 0) return p;
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        f[v] += k;
        out.add_term(f, c);
    }
    return out;
}

Polynomial sign_normalized(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (p.leading().second < 0) return -p;
    return p;
}

Polynomial content_wrt(const Polynomial& p, int v) {
    Polynomial g(p.nvars());
    for (int k = deg_in(p, v); k >= 0; --k) {
        Polynomial c = coeff_of_power(p, v, k);
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero() && g.leading().second == 1) break;
    }
    return g;
}

// Pseudo-remainder of a by b in the variable v.
Polynomial prem(const Polynomial& a, const Polynomial& b, int v) {
    int e = deg_in(b, v);
    Polynomial lcb = coeff_of_power(b, v, e);
    Polynomial r = a;
    while (!r.is_zero()) {
        int dr = deg_in(r, v);
        if (dr < e) break;
        Polynomial lcr = coeff_of_power(r, v, dr);
        r = r * lcb - shift_var(lcr * b, v, dr - e);
    }
    return r;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    if (a.is_constant() && b.is_constant()) {
        return Polynomial::constant(a.nvars(), int_gcd(a.leading().second, b.leading().second));
    }
    int v = -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (deg_in(a, i) > 0 || deg_in(b, i) > 0) { v = i; break; }
    }
    if (v < 0) throw InternalInconsistencyError("gcd variable selection failed");

    Polynomial ca = content_wrt(a, v);
    Polynomial cb = content_wrt(b, v);
    Polynomial pa = divexact(a, ca);
    Polynomial pb = divexact(b, cb);
    Polynomial g = poly_gcd(ca, cb);

    if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
    Polynomial res(a.nvars());
    while (true) {
        if (pb.is_zero()) { res = pa; break; }
        if (deg_in(pb, v) == 0) { res = Polynomial::constant(a.nvars(), 1); break; }
        Polynomial r = prem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) { res = pa; break; }
        pb = divexact(r, content_wrt(r, v));
    }
    return sign_normalized(g * res);
}

RatFn::RatFn(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFn::normalize() {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars(), 1);
        return;
    }
    if (!(den_.is_constant() && den_.leading().second == 1)) {
        if (auto q = try_divexact(num_, den_)) {
            num_ = *q;
            den_ = Polynomial::constant(num_.nvars(), 1);
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (!(g.is_constant() && g.leading().second == 1)) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RatFn::is_polynomial() const {
    return den_.is_constant() && !den_.is_zero() && den_.leading().second == 1;
}

const Polynomial& RatFn::as_polynomial() const {
    if (!is_polynomial()) {
        throw InternalInconsistencyError("denominator did not clear: " + str());
    }
    return num_;
}

RatFn RatFn::operator-() const {
    RatFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return *this + (-o);
}

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return RatFn::zero(nvars());
    // cross-cancel before multiplying to keep intermediates small
    RatFn left(num_, o.den_);
    RatFn right(o.num_, den_);
    RatFn r;
    r.num_ = left.num_ * right.num_;
    r.den_ = left.den_ * right.den_;
    if (r.den_.leading().second < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by a zero rational function");
    RatFn flip;
    flip.num_ = o.den_;
    flip.den_ = o.num_;
    if (flip.den_.leading().second < 0) {
        flip.num_ = -flip.num_;
        flip.den_ = -flip.den_;
    }
    return *this * flip;
}

std::string RatFn::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Polynomial phi(const WeightVector& v, const std::vector<int>& involution) {
    const int n = static_cast<int>(involution.size());
    Polynomial out(n);
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        if (!is_integral(v[i])) {
            throw NonIntegralInputError("weight is not in the root lattice");
        }
        out.add_term([&] {
            ExpVec e(n, 0);
            e[involution[i]] = 1;
            return e;
        }(), rat_num(v[i]));
    }
    return out;
}

Polynomial phi(const RootVec& v, const std::vector<int>& involution) {
    WeightVector w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i];
    return phi(w, involution);
}

} // namespace eqsc
