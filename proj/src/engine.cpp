#include "eqsc/engine.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "eqsc/errors.hpp"

namespace eqsc {

namespace {

RatFn scale_rat(const RatFn& x, const Int& h) {
    if (h == 0 || x.is_zero()) return RatFn::zero(x.nvars());
    return RatFn(x.num().scaled(h), x.den());
}

} // namespace

EqlrEngine::EqlrEngine(std::shared_ptr<const ParabolicQuotient> q, EngineOptions opt)
    : q_(std::move(q)), opt_(opt), grading_(q_.get()), chev_(q_.get(), &grading_),
      zero_(Polynomial::zero(q_->rank())) {
    if (q_->size() >= 65536)
        throw PreconditionViolatedError("basis too large for the coefficient table");
    if (opt_.threads < 1) opt_.threads = 1;
}

EqlrEngine::Key EqlrEngine::key(int u, int v, int w, int did) const {
    if (u > v) std::swap(u, v);
    return (Key(did) << 48) | (Key(u) << 32) | (Key(v) << 16) | Key(w);
}

const Polynomial& EqlrEngine::table_at(Key k) const {
    auto it = table_.find(k);
    return it == table_.end() ? zero_ : it->second;
}

int EqlrEngine::degree_id(const DegreeVec& d) {
    if (static_cast<int>(d.size()) != grading_.qvars())
        throw IndexOutOfRangeError("degree vector has the wrong length");
    auto it = degree_ids_.find(d);
    if (it != degree_ids_.end()) return it->second;
    if (degrees_.size() >= 65536)
        throw PreconditionViolatedError("too many degree strata for the coefficient table");
    int id = static_cast<int>(degrees_.size());
    degrees_.push_back(d);
    degree_ids_.emplace(d, id);
    return id;
}

int EqlrEngine::did_of_completed(const DegreeVec& d) const {
    auto it = degree_ids_.find(d);
    if (it == degree_ids_.end())
        throw InternalInconsistencyError("referenced degree was never interned");
    return it->second;
}

void EqlrEngine::check_indices(int u, int v, int w) const {
    const int N = q_->size();
    if (u < 0 || u >= N || v < 0 || v >= N || w < 0 || w >= N)
        throw IndexOutOfRangeError("class index out of range");
}

void EqlrEngine::ensure_weight(int wdeg) {
    for (int level = completed_weight_ + 1; level <= wdeg; ++level) {
        complete_weight_level(level);
        completed_weight_ = level;
    }
}

const Polynomial& EqlrEngine::coeff(int u, int v, int w, const DegreeVec& d) {
    check_indices(u, v, w);
    for (int c : d)
        if (c < 0) throw PreconditionViolatedError("degree coordinates must be nonnegative");
    int wd = grading_.weighted_deg(d);
    ensure_weight(wd);
    return table_at(key(u, v, w, did_of_completed(d)));
}

const Polynomial& EqlrEngine::get(int u, int v, int w, const DegreeVec& d) const {
    check_indices(u, v, w);
    for (int c : d)
        if (c < 0) throw PreconditionViolatedError("degree coordinates must be nonnegative");
    int wd = grading_.weighted_deg(d);
    if (wd > completed_weight_)
        throw StratumNotReadyError("stratum of weighted degree " + std::to_string(wd) +
                                   " has not been completed");
    return table_at(key(u, v, w, did_of_completed(d)));
}

std::vector<int> EqlrEngine::assignment_impl(int w, bool largest) {
    const int N = q_->size();
    std::vector<int> out(N, -1);
    for (int v = 0; v < N; ++v) {
        if (v == w || !q_->prec(v, w)) continue;
        int found = -1;
        for (int k = 0; k < grading_.qvars(); ++k) {
            int pos = largest ? grading_.qvars() - 1 - k : k;
            if (!chev_.f_form(pos, w, v).is_zero()) {
                found = pos;
                break;
            }
        }
        if (found < 0)
            throw InternalInconsistencyError("no divisor separates " + q_->elem_string(v) +
                                             " from " + q_->elem_string(w));
        out[v] = found;
    }
    return out;
}

std::vector<int> EqlrEngine::default_assignment(int w) { return assignment_impl(w, false); }
std::vector<int> EqlrEngine::alt_assignment(int w) { return assignment_impl(w, true); }

EqlrEngine::PathData EqlrEngine::build_path_data(int w, const std::vector<int>& assign) {
    const int N = q_->size();
    const int nv = q_->rank();
    PathData pd;
    pd.assign = assign;
    for (int v = 0; v < N; ++v)
        if (q_->prec(v, w)) pd.order.push_back(v);
    std::sort(pd.order.begin(), pd.order.end(), [this](int a, int b) {
        if (q_->codim(a) != q_->codim(b)) return q_->codim(a) > q_->codim(b);
        return a < b;
    });
    pd.invf.assign(N, RatFn::zero(nv));
    pd.r.assign(N, RatFn::zero(nv));
    pd.edges.resize(N);
    pd.loose.resize(N);
    pd.qterms.resize(N);
    for (int v : pd.order) {
        if (v == w) {
            pd.r[v] = RatFn::one(nv);
            continue;
        }
        int pos = (v < static_cast<int>(assign.size())) ? assign[v] : -1;
        if (pos < 0 || pos >= grading_.qvars())
            throw PreconditionViolatedError("assignment misses " + q_->elem_string(v));
        Polynomial f = chev_.f_form(pos, w, v);
        if (f.is_zero())
            throw PreconditionViolatedError("assignment fails to separate " + q_->elem_string(v) +
                                            " from " + q_->elem_string(w));
        pd.invf[v] = RatFn(Polynomial::constant(nv, 1), f);
        const ChevalleyExpansion& ex = chev_.expand(pos, v);
        for (const ChevalleyTerm& t : ex.classical) {
            if (q_->prec(t.target, w))
                pd.edges[v].push_back({RatFn(Polynomial::constant(nv, t.h), f), t.target});
            else
                pd.loose[v].push_back({t.h, t.target});
        }
        for (const ChevalleyTerm& t : ex.quantum) pd.qterms[v].push_back({t.h, t.target, t.deg});
        RatFn r = RatFn::zero(nv);
        for (const PathEdge& ed : pd.edges[v]) r += ed.weight * pd.r[ed.target];
        pd.r[v] = r;
    }
    return pd;
}

const EqlrEngine::PathData& EqlrEngine::path_data(int w) {
    auto it = paths_.find(w);
    if (it == paths_.end())
        it = paths_.emplace(w, build_path_data(w, default_assignment(w))).first;
    return it->second;
}

RatFn EqlrEngine::path_r(int u, int w, const std::vector<int>& assign) {
    check_indices(u, u, w);
    if (!q_->prec(u, w))
        throw PreconditionViolatedError(q_->elem_string(u) + " does not lie below " +
                                        q_->elem_string(w));
    PathData pd = build_path_data(w, assign);
    return pd.r[u];
}

RatFn EqlrEngine::diagonal_value(int w, int did, const PathData& pd, Memo& memo) {
    const DegreeVec& d = degrees_[did];
    const int nv = q_->rank();
    const bool dz = grading_.is_zero(d);
    std::vector<RatFn> eprime(q_->size(), RatFn::zero(nv));
    for (int v : pd.order) {
        if (v == w) continue; // its accumulated remainder is zero
        RatFn acc = RatFn::zero(nv);
        for (const HTerm& t : pd.loose[v])
            acc += scale_rat(reduce_impl(t.target, w, w, did, memo), t.h);
        for (const QTerm& t : pd.qterms[v]) {
            if (!QuantumGrading::dominated(t.deg, d)) continue;
            int did2 = did_of_completed(QuantumGrading::subtract(d, t.deg));
            acc += RatFn(table_at(key(t.target, w, w, did2)).scaled(t.h));
        }
        for (const ReverseTerm& t : chev_.reverse(pd.assign[v], w)) {
            if (grading_.is_zero(t.deg)) {
                acc -= scale_rat(reduce_impl(w, v, t.source, did, memo), t.h);
            } else if (QuantumGrading::dominated(t.deg, d)) {
                int did2 = did_of_completed(QuantumGrading::subtract(d, t.deg));
                acc -= RatFn(table_at(key(v, w, t.source, did2)).scaled(t.h));
            }
        }
        RatFn e = acc * pd.invf[v];
        for (const PathEdge& ed : pd.edges[v]) e += ed.weight * eprime[ed.target];
        eprime[v] = e;
    }
    const RatFn& rbar = pd.r[q_->wbar0()];
    if (rbar.is_zero())
        throw ZeroRError("chain sum to " + q_->elem_string(w) + " vanished");
    RatFn delta = dz ? RatFn::one(nv) : RatFn::zero(nv);
    return (delta - eprime[q_->wbar0()]) / rbar;
}

RatFn EqlrEngine::diagonal_under(int w, const DegreeVec& d, const std::vector<int>& assign) {
    check_indices(w, w, w);
    int wd = grading_.weighted_deg(d);
    ensure_weight(wd - 1);
    int did = degree_id(d);
    PathData pd = build_path_data(w, assign);
    Memo memo;
    return diagonal_value(w, did, pd, memo);
}

RatFn EqlrEngine::step_sum(int first, int second, int target, int did) {
    const DegreeVec& d = degrees_[did];
    const int nv = q_->rank();
    int pos = chev_.choose_beta(target, first);
    Polynomial f = chev_.f_form(pos, target, first);
    RatFn acc = RatFn::zero(nv);
    const ChevalleyExpansion& ex = chev_.expand(pos, first);
    for (const ChevalleyTerm& t : ex.classical)
        acc += RatFn(table_at(key(t.target, second, target, did)).scaled(t.h));
    for (const ChevalleyTerm& t : ex.quantum) {
        if (!QuantumGrading::dominated(t.deg, d)) continue;
        int did2 = did_of_completed(QuantumGrading::subtract(d, t.deg));
        acc += RatFn(table_at(key(t.target, second, target, did2)).scaled(t.h));
    }
    for (const ReverseTerm& t : chev_.reverse(pos, target)) {
        if (grading_.is_zero(t.deg)) {
            acc -= RatFn(table_at(key(first, second, t.source, did)).scaled(t.h));
        } else if (QuantumGrading::dominated(t.deg, d)) {
            int did2 = did_of_completed(QuantumGrading::subtract(d, t.deg));
            acc -= RatFn(table_at(key(first, second, t.source, did2)).scaled(t.h));
        }
    }
    return acc / RatFn(f);
}

RatFn EqlrEngine::reduce_impl(int first, int second, int target, int did, Memo& memo) {
    if (q_->prec(first, target)) {
        if (q_->prec(second, target))
            throw PreconditionViolatedError("both arguments lie below the target");
        std::swap(first, second);
    }
    const DegreeVec& d = degrees_[did];
    const int nv = q_->rank();
    if (grading_.is_zero(d)) return RatFn::zero(nv);
    Key k = key(first, second, target, did);
    auto hit = memo.find(k);
    if (hit != memo.end()) return hit->second;
    int pos = chev_.choose_beta(target, first);
    Polynomial f = chev_.f_form(pos, target, first);
    RatFn acc = RatFn::zero(nv);
    const ChevalleyExpansion& ex = chev_.expand(pos, first);
    for (const ChevalleyTerm& t : ex.classical)
        acc += scale_rat(reduce_impl(t.target, second, target, did, memo), t.h);
    for (const ChevalleyTerm& t : ex.quantum) {
        if (!QuantumGrading::dominated(t.deg, d)) continue;
        int did2 = did_of_completed(QuantumGrading::subtract(d, t.deg));
        acc += RatFn(table_at(key(t.target, second, target, did2)).scaled(t.h));
    }
    for (const ReverseTerm& t : chev_.reverse(pos, target)) {
        if (grading_.is_zero(t.deg)) {
            acc -= scale_rat(reduce_impl(first, second, t.source, did, memo), t.h);
        } else if (QuantumGrading::dominated(t.deg, d)) {
            int did2 = did_of_completed(QuantumGrading::subtract(d, t.deg));
            acc -= RatFn(table_at(key(first, second, t.source, did2)).scaled(t.h));
        }
    }
    RatFn val = acc / RatFn(f);
    memo.emplace(k, val);
    return val;
}

RatFn EqlrEngine::reduce_nonprec(int first, int second, int target, const DegreeVec& d) {
    check_indices(first, second, target);
    for (int c : d)
        if (c < 0) throw PreconditionViolatedError("degree coordinates must be nonnegative");
    int wd = grading_.weighted_deg(d);
    ensure_weight(wd - 1);
    int did = degree_id(d);
    return reduce_impl(first, second, target, did, ememo_);
}

Polynomial EqlrEngine::cell_value(int u, int v, int w, int did, Memo& memo) {
    const DegreeVec& d = degrees_[did];
    const int wd = grading_.weighted_deg(d);
    const bool dz = grading_.is_zero(d);
    if (opt_.prune) {
        if (q_->codim(u) + q_->codim(v) - q_->codim(w) - wd < 0) return zero_;
        if (!dz && (q_->codim(u) + 1 > q_->codim(w) + wd || q_->codim(v) + 1 > q_->codim(w) + wd))
            return zero_;
    }
    const bool up = q_->prec(u, w);
    const bool vp = q_->prec(v, w);
    if (!up || !vp) {
        if (dz) return zero_; // support rule for the undeformed part
        int first = !up ? u : v;
        int second = (first == u) ? v : u;
        return reduce_impl(first, second, w, did, memo).as_polynomial();
    }
    int first = (u != w) ? u : v;
    int second = (first == u) ? v : u;
    return step_sum(first, second, w, did).as_polynomial();
}

Polynomial EqlrEngine::recompute_cell(int first, int second, int target, const DegreeVec& d) {
    check_indices(first, second, target);
    if (first == target)
        throw PreconditionViolatedError("recomputation must be anchored away from the target");
    for (int c : d)
        if (c < 0) throw PreconditionViolatedError("degree coordinates must be nonnegative");
    int wd = grading_.weighted_deg(d);
    ensure_weight(wd);
    return step_sum(first, second, target, did_of_completed(d)).as_polynomial();
}

void EqlrEngine::complete_weight_level(int level) {
    if (opt_.threads > 1 && !warmed_) {
        chev_.warm_all();
        warmed_ = true;
    }
    std::vector<int> dids;
    for (const DegreeVec& d : grading_.degrees_of_weight(level)) dids.push_back(degree_id(d));
    if (dids.empty()) return;

    const int N = q_->size();
    const int dim = q_->dim();
    Memo memo;

    // First the diagonal cells, by chain elimination toward each target.
    for (int did : dids) {
        for (int w = 0; w < N; ++w) {
            if (opt_.prune && q_->codim(w) - level < 0) continue;
            RatFn x = diagonal_value(w, did, path_data(w), memo);
            const Polynomial& p = x.as_polynomial();
            if (!p.is_zero()) table_.emplace(key(w, w, w, did), p);
        }
    }

    // Then every other cell, in layers of descending coefficient degree: each
    // cell only consumes cells one degree higher, so cells of one layer are
    // mutually independent.
    std::vector<std::vector<int>> byc(dim + 1);
    for (int i = 0; i < N; ++i) byc[q_->codim(i)].push_back(i);
    for (int did : dids) {
        for (int s = 2 * dim; s >= 0; --s) {
            if (opt_.prune && s - level < 0) break;
            std::vector<std::tuple<int, int, int>> cells;
            for (int ca = 0; ca <= dim; ++ca) {
                for (int cb = 0; cb <= dim; ++cb) {
                    int cc = ca + cb - s;
                    if (cc < 0 || cc > dim) continue;
                    for (int u : byc[ca]) {
                        for (int v : byc[cb]) {
                            if (v < u) continue;
                            for (int w : byc[cc]) {
                                if (u == v && v == w) continue;
                                cells.emplace_back(u, v, w);
                            }
                        }
                    }
                }
            }
            if (opt_.threads == 1 || cells.size() < 64) {
                for (auto [u, v, w] : cells) {
                    Polynomial val = cell_value(u, v, w, did, memo);
                    if (!val.is_zero()) table_.emplace(key(u, v, w, did), val);
                }
            } else {
                const int nthreads = std::min<int>(opt_.threads, static_cast<int>(cells.size()));
                std::vector<std::vector<std::pair<Key, Polynomial>>> results(nthreads);
                std::vector<std::exception_ptr> errors(nthreads);
                std::vector<std::thread> pool;
                const size_t chunk = (cells.size() + nthreads - 1) / nthreads;
                for (int t = 0; t < nthreads; ++t) {
                    pool.emplace_back([&, t]() {
                        try {
                            Memo local;
                            const size_t lo = t * chunk;
                            const size_t hi = std::min(cells.size(), lo + chunk);
                            for (size_t i = lo; i < hi; ++i) {
                                auto [u, v, w] = cells[i];
                                Polynomial val = cell_value(u, v, w, did, local);
                                if (!val.is_zero())
                                    results[t].emplace_back(key(u, v, w, did), std::move(val));
                            }
                        } catch (...) {
                            errors[t] = std::current_exception();
                        }
                    });
                }
                for (auto& th : pool) th.join();
                for (auto& err : errors)
                    if (err) std::rethrow_exception(err);
                for (auto& part : results)
                    for (auto& [k, p] : part) table_.emplace(k, std::move(p));
            }
        }
    }
}

std::vector<std::tuple<int, int, int, int>> EqlrEngine::stored_cells() const {
    std::vector<std::tuple<int, int, int, int>> out;
    out.reserve(table_.size());
    for (const auto& [k, p] : table_) {
        (void)p;
        out.emplace_back(static_cast<int>((k >> 32) & 0xffff), static_cast<int>((k >> 16) & 0xffff),
                         static_cast<int>(k & 0xffff), static_cast<int>(k >> 48));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassVector EqlrEngine::multiply(int u, int v) {
    check_indices(u, v, 0);
    const int bound = q_->codim(u) + q_->codim(v);
    ensure_weight(bound);
    ClassVector out;
    for (int did = 0; did < degree_count(); ++did) {
        const DegreeVec& d = degrees_[did];
        int wd = grading_.weighted_deg(d);
        if (wd > bound) continue;
        for (int w = 0; w < q_->size(); ++w) {
            const Polynomial& p = table_at(key(u, v, w, did));
            if (!p.is_zero()) out.emplace(std::make_tuple(wd, d, w), p);
        }
    }
    return out;
}

ClassVector EqlrEngine::cv_mul_basis(const ClassVector& cv, int t) {
    check_indices(t, t, t);
    ClassVector out;
    for (const auto& [ku, pu] : cv) {
        const auto& [wd1, d1, w1] = ku;
        ClassVector part = multiply(w1, t);
        for (const auto& [kp, pp] : part) {
            const auto& [wd2, d2, w2] = kp;
            DegreeVec d(d1);
            for (size_t i = 0; i < d.size(); ++i) d[i] += d2[i];
            auto key2 = std::make_tuple(wd1 + wd2, d, w2);
            auto it = out.find(key2);
            if (it == out.end())
                out.emplace(key2, pu * pp);
            else
                it->second += pu * pp;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

} // namespace eqsc
