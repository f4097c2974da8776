#include "eqsc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "eqsc/errors.hpp"

namespace eqsc {

namespace {

Polynomial billey_core(const ParabolicQuotient& q, int u, const std::vector<int>& word) {
    const WeylContext& cx = q.ctx();
    const RootSystemData& rs = q.roots();
    const int nv = rs.rank;
    const int len = static_cast<int>(word.size());
    if (len > 20)
        throw PreconditionViolatedError("reduced word too long for the subword enumeration");
    const WeylElem ud = q.elem(q.dual(u));
    const int lu = q.codim(u);
    Polynomial sum = Polynomial::zero(nv);
    if (lu > len) return sum;

    std::vector<Polynomial> factor(len);
    {
        WeylElem prefix = WeylElem::identity(nv);
        for (int j = 0; j < len; ++j) {
            RootVec e(nv, 0);
            e[word[j]] = 1;
            factor[j] = phi(cx.act_root(prefix, e), rs.involution);
            prefix = cx.multiply(prefix, cx.simple_reflection(word[j]));
        }
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << len); ++mask) {
        if (std::popcount(mask) != lu) continue;
        WeylElem m = WeylElem::identity(nv);
        for (int j = 0; j < len; ++j)
            if (mask & (std::uint32_t(1) << j)) m = cx.multiply(m, cx.simple_reflection(word[j]));
        if (!(m == ud)) continue;
        Polynomial term = Polynomial::constant(nv, 1);
        for (int j = 0; j < len; ++j)
            if (mask & (std::uint32_t(1) << j)) term = term * factor[j];
        sum += term;
    }
    return sum;
}

} // namespace

Polynomial billey_cuw(const ParabolicQuotient& q, int u, int w) {
    return billey_core(q, u, q.ctx().reduced_word(q.elem(q.dual(w))));
}

Polynomial billey_cuw_with_word(const ParabolicQuotient& q, int u, int w,
                                const std::vector<int>& word) {
    const WeylContext& cx = q.ctx();
    for (int letter : word)
        if (letter < 0 || letter >= q.rank())
            throw PreconditionViolatedError("word letter out of range");
    const WeylElem wd = q.elem(q.dual(w));
    if (!(cx.from_word(word) == wd) || static_cast<int>(word.size()) != q.codim(w))
        throw PreconditionViolatedError("not a reduced word of the dual element");
    return billey_core(q, u, word);
}

std::vector<Polynomial> gkm_constants(const ParabolicQuotient& q, int u, int v) {
    if (!q.levi().empty())
        throw PreconditionViolatedError("fixed-point elimination needs the full flag quotient");
    const int N = q.size();
    const int nv = q.rank();

    std::vector<Polynomial> xi(static_cast<size_t>(N) * N, Polynomial::zero(nv));
    for (int a = 0; a < N; ++a)
        for (int x = 0; x < N; ++x)
            if (q.prec(a, x)) xi[static_cast<size_t>(a) * N + x] = billey_cuw(q, a, x);
    auto at = [&](int a, int x) -> const Polynomial& { return xi[static_cast<size_t>(a) * N + x]; };

    std::vector<int> order(N);
    for (int i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (q.codim(a) != q.codim(b)) return q.codim(a) < q.codim(b);
        return a < b;
    });

    std::vector<Polynomial> c(N, Polynomial::zero(nv));
    std::vector<char> solved(N, 0);
    for (int x : order) {
        RatFn rhs(at(u, x) * at(v, x));
        for (int w = 0; w < N; ++w) {
            if (!solved[w] || c[w].is_zero()) continue;
            rhs = rhs - RatFn(c[w] * at(w, x));
        }
        const Polynomial& pivot = at(x, x);
        if (pivot.is_zero()) throw SingularSystemError("vanishing pivot in the fixed-point system");
        c[x] = (rhs / RatFn(pivot)).as_polynomial();
        solved[x] = 1;
    }

    for (int x = 0; x < N; ++x) {
        Polynomial lhs = Polynomial::zero(nv);
        for (int w = 0; w < N; ++w)
            if (!c[w].is_zero()) lhs += c[w] * at(w, x);
        if (lhs != at(u, x) * at(v, x))
            throw SingularSystemError("fixed-point system admits no exact solution");
    }
    return c;
}

OracleReport billey_check(EqlrEngine& eng) {
    const ParabolicQuotient& q = eng.quotient();
    OracleReport rep;
    DegreeVec zero = eng.grading().zero();
    eng.ensure_weight(0);
    for (int u = 0; u < q.size(); ++u) {
        for (int w = 0; w < q.size(); ++w) {
            Polynomial expected = billey_cuw(q, u, w);
            const Polynomial& got = eng.coeff(u, w, w, zero);
            if (got == expected) {
                rep.pass();
            } else {
                std::ostringstream os;
                os << "c[" << q.elem_string(u) << ", " << q.elem_string(w) << "; "
                   << q.elem_string(w) << "] = " << got.str() << ", subword sum "
                   << expected.str();
                rep.fail(os.str());
            }
        }
    }
    return rep;
}

OracleReport gkm_check(EqlrEngine& eng) {
    const ParabolicQuotient& q = eng.quotient();
    OracleReport rep;
    DegreeVec zero = eng.grading().zero();
    eng.ensure_weight(0);
    for (int u = 0; u < q.size(); ++u) {
        for (int v = u; v < q.size(); ++v) {
            std::vector<Polynomial> expected = gkm_constants(q, u, v);
            for (int w = 0; w < q.size(); ++w) {
                const Polynomial& got = eng.coeff(u, v, w, zero);
                if (got == expected[w]) {
                    rep.pass();
                } else {
                    std::ostringstream os;
                    os << "c[" << q.elem_string(u) << ", " << q.elem_string(v) << "; "
                       << q.elem_string(w) << "] = " << got.str() << ", elimination gives "
                       << expected[w].str();
                    rep.fail(os.str());
                }
            }
        }
    }
    return rep;
}

OracleReport invariant_check(EqlrEngine& eng, int max_weight) {
    const ParabolicQuotient& q = eng.quotient();
    const QuantumGrading& g = eng.grading();
    OracleReport rep;
    const int bound = max_weight < 0 ? q.dim() : max_weight;
    eng.ensure_weight(bound);

    // Stored-cell invariants: homogeneity of the right degree, nonnegative
    // coefficients, and the degree-support vanishing statement.
    for (const auto& [u, v, w, did] : eng.stored_cells()) {
        const DegreeVec& d = eng.degree_of(did);
        const int wd = g.weighted_deg(d);
        if (wd > bound) continue;
        const Polynomial& p = eng.get(u, v, w, d);
        const int deg = q.codim(u) + q.codim(v) - q.codim(w) - wd;
        std::ostringstream cell;
        cell << "c[" << q.elem_string(u) << ", " << q.elem_string(v) << "; " << q.elem_string(w)
             << ", " << QuantumGrading::str(d) << "]";
        if (!p.is_homogeneous_of(deg))
            rep.fail(cell.str() + " is not homogeneous of degree " + std::to_string(deg));
        else
            rep.pass();
        if (!p.nonneg_coeffs())
            rep.fail(cell.str() + " has a negative coefficient");
        else
            rep.pass();
        bool support_ok = true;
        if (!g.is_zero(d) &&
            (q.codim(u) + 1 > q.codim(w) + wd || q.codim(v) + 1 > q.codim(w) + wd))
            support_ok = false;
        if (g.is_zero(d) && (!q.prec(u, w) || !q.prec(v, w))) support_ok = false;
        if (!support_ok)
            rep.fail(cell.str() + " should vanish but is " + p.str());
        else
            rep.pass();
    }

    // Unit law.
    for (int w = 0; w < q.size(); ++w) {
        ClassVector prod = eng.multiply(q.wbar0(), w);
        ClassVector expected;
        expected.emplace(std::make_tuple(0, g.zero(), w), Polynomial::constant(q.rank(), 1));
        if (prod == expected)
            rep.pass();
        else
            rep.fail("unit law fails at " + q.elem_string(w));
    }

    // Divisor products must agree with their direct expansions.
    ChevalleyContext& chev = eng.chevalley();
    for (int pos = 0; pos < g.qvars(); ++pos) {
        for (int w = 0; w < q.size(); ++w) {
            ClassVector expected;
            const ChevalleyExpansion& ex = chev.expand(pos, w);
            if (!ex.diag.is_zero()) expected.emplace(std::make_tuple(0, g.zero(), w), ex.diag);
            for (const ChevalleyTerm& t : ex.classical)
                expected.emplace(std::make_tuple(0, g.zero(), t.target),
                                 Polynomial::constant(q.rank(), t.h));
            for (const ChevalleyTerm& t : ex.quantum)
                expected.emplace(std::make_tuple(g.weighted_deg(t.deg), t.deg, t.target),
                                 Polynomial::constant(q.rank(), t.h));
            ClassVector prod = eng.multiply(q.s_of_beta(pos), w);
            if (prod == expected)
                rep.pass();
            else
                rep.fail("divisor product at position " + std::to_string(pos + 1) + " times " +
                         q.elem_string(w) + " disagrees with its expansion");
        }
    }
    return rep;
}

OracleReport projective_space_check(int n) {
    if (n < 1 || n > 3)
        throw PreconditionViolatedError("projective check supports ranks 1 through 3");
    OracleReport rep;
    auto rs = std::make_shared<const RootSystemData>(
        build_root_system(CartanData::preset("A" + std::to_string(n))));
    std::vector<int> levi;
    for (int i = 1; i < n; ++i) levi.push_back(i);
    auto q = std::make_shared<const ParabolicQuotient>(rs, levi);
    EqlrEngine eng(q);
    const QuantumGrading& g = eng.grading();

    std::vector<int> bycodim(n + 1, -1);
    bool chain = q->size() == n + 1;
    for (int i = 0; i < q->size() && chain; ++i) {
        if (bycodim[q->codim(i)] != -1)
            chain = false;
        else
            bycodim[q->codim(i)] = i;
    }
    if (!chain) {
        rep.fail("basis is not a single chain of classes");
        return rep;
    }
    rep.pass();

    const int h = q->s_of_beta(0);
    if (h != bycodim[1]) {
        rep.fail("divisor class is not the unique class in degree one");
        return rep;
    }
    rep.pass();

    ClassVector cur;
    cur.emplace(std::make_tuple(0, g.zero(), h), Polynomial::constant(q->rank(), 1));
    for (int k = 1; k <= n + 1; ++k) {
        if (k > 1) cur = eng.cv_mul_basis(cur, h);
        // Specialize every coefficient at x -> 0 and compare with the single
        // expected term.
        std::map<std::tuple<int, DegreeVec, int>, Int> spec;
        for (const auto& [key, p] : cur) {
            Int c0 = p.constant_term();
            if (c0 != 0) spec[key] = c0;
        }
        std::map<std::tuple<int, DegreeVec, int>, Int> want;
        if (k <= n) {
            want[std::make_tuple(0, g.zero(), bycodim[k])] = 1;
        } else {
            DegreeVec one = g.zero();
            one[0] = 1;
            want[std::make_tuple(g.weighted_deg(one), one, q->wbar0())] = 1;
        }
        if (spec == want) {
            rep.pass();
        } else {
            std::ostringstream os;
            os << "power " << k << " of the divisor specializes incorrectly";
            rep.fail(os.str());
        }
    }
    return rep;
}

} // namespace eqsc
