#include "w22/tensor.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "w22/detid.hpp"

namespace w22 {

int lex_compare(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw std::domain_error("lex_compare: tuples of different length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i])
            return -1;
        if (a[i] > b[i])
            return 1;
    }
    return 0;
}

// -------------------------------------------------------------- TensorVector

void TensorVector::add_term(const Exponents& e, const RestrictedVector& v) {
    if (v.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero())
        terms_.erase(it);
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
    if (module_ != o.module_)
        throw std::domain_error("TensorVector: mixing vectors from different modules");
    TensorVector r = *this;
    for (const auto& [e, v] : o.terms_)
        r.add_term(e, v);
    return r;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
    return *this + o * Scalar(-1);
}

TensorVector TensorVector::operator*(const Scalar& c) const {
    TensorVector r;
    r.module_ = module_;
    if (c.is_zero())
        return r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(e, v * c);
    return r;
}

bool TensorVector::operator==(const TensorVector& o) const {
    return module_ == o.module_ && terms_ == o.terms_;
}

Exponents TensorVector::degree() const {
    if (terms_.empty())
        throw std::domain_error("TensorVector::degree: zero vector has no degree");
    return terms_.rbegin()->first;
}

std::map<TensorVector::FlatKey, Scalar> TensorVector::flatten() const {
    std::map<FlatKey, Scalar> out;
    for (const auto& [e, v] : terms_)
        for (const auto& [label, c] : v.terms())
            out.emplace(FlatKey{e, label}, c);
    return out;
}

std::string TensorVector::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    std::size_t m = terms_.begin()->first.size() / 2;
    for (const auto& [e, v] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        for (std::size_t k = 0; k < m; ++k) {
            if (e[k] > 0)
                out << "s" << k + 1 << "^" << e[k] << ".";
            if (e[m + k] > 0)
                out << "t" << k + 1 << "^" << e[m + k] << ".";
        }
        out << "[" << v.str() << "]";
    }
    return out.str();
}

// -------------------------------------------------------------- TensorModule

TensorModule::TensorModule(std::vector<OmegaParams> factors, RestrictedModulePtr v)
    : factors_(std::move(factors)), v_(std::move(v)) {
    if (factors_.empty())
        throw std::domain_error("TensorModule: need at least one polynomial factor");
    if (!v_)
        throw std::domain_error("TensorModule: missing restricted factor");
    RingPtr ring = std::make_shared<PolyRing>(std::vector<std::string>{"s", "t"});
    for (const auto& p : factors_) {
        if (p.alpha.is_zero())
            throw std::domain_error("TensorModule: factor alphas must be nonzero");
        slot_modules_.emplace_back(p, ring);
    }
}

bool TensorModule::lambdas_distinct() const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (std::size_t j = i + 1; j < factors_.size(); ++j)
            if (factors_[i].lambda == factors_[j].lambda)
                return false;
    return true;
}

TensorVector TensorModule::zero() const {
    TensorVector v;
    v.module_ = this;
    return v;
}

TensorVector TensorModule::monomial(const Exponents& e, const RestrictedVector& v) const {
    if (e.size() != 2 * slots())
        throw std::domain_error("TensorModule::monomial: tuple must have length 2m");
    for (std::int64_t x : e)
        if (x < 0)
            throw std::domain_error("TensorModule::monomial: negative exponent");
    if (!v_->contains(v))
        throw std::domain_error("TensorModule::monomial: V-component from a different module");
    TensorVector r = zero();
    r.add_term(e, v);
    return r;
}

TensorVector TensorModule::vacuum(const RestrictedVector& v) const {
    return monomial(Exponents(2 * slots(), 0), v);
}

TensorVector TensorModule::act(const Generator& g, const TensorVector& v) const {
    if (!contains(v))
        throw std::domain_error("TensorModule::act: vector from a different module");
    std::size_t m = slots();
    TensorVector out = zero();
    for (const auto& [e, vec] : v.terms()) {
        // polynomial slots (C acts as zero there)
        if (!g.is_central()) {
            for (std::size_t k = 0; k < m; ++k) {
                MultiPoly image = slot_modules_[k].act_monomial(g, e[k], e[m + k]);
                for (const auto& [st, c] : image.terms()) {
                    Exponents e2 = e;
                    e2[k] = st[0];
                    e2[m + k] = st[1];
                    out.add_term(e2, vec * c);
                }
            }
        }
        // restricted slot
        out.add_term(e, v_->act(g, vec));
    }
    return out;
}

// ----------------------------------------------------------------- analyses

std::int64_t v_restriction_bound(const TensorVector& g) {
    std::int64_t best = 0;
    for (const auto& [e, v] : g.terms())
        best = std::max(best, restriction_bound(v));
    return best;
}

std::vector<std::int64_t> slot_s_degrees(const TensorVector& g) {
    if (g.is_zero() || !g.module())
        throw std::domain_error("slot_s_degrees: nonzero vector required");
    std::size_t m = g.module()->slots();
    std::vector<std::int64_t> P(m, 0);
    for (const auto& [e, v] : g.terms())
        for (std::size_t k = 0; k < m; ++k)
            P[k] = std::max(P[k], e[k]);
    return P;
}

std::vector<std::vector<TensorVector>> w_coefficient_elements(const TensorVector& g) {
    const TensorModule* mod = g.module();
    if (g.is_zero() || !mod)
        throw std::domain_error("w_coefficient_elements: nonzero vector required");
    std::size_t m = mod->slots();
    auto P = slot_s_degrees(g);
    std::vector<std::vector<TensorVector>> w(m);
    for (std::size_t k = 0; k < m; ++k)
        w[k].assign(static_cast<std::size_t>(P[k]) + 2, mod->zero());
    for (const auto& [e, vec] : g.terms())
        for (std::size_t k = 0; k < m; ++k) {
            std::int64_t pk = e[k];
            const Scalar& alpha = mod->factor(k).alpha;
            for (std::int64_t j = 0; j <= P[k] + 1; ++j) {
                Scalar c1 = binomial(pk, j);
                if (!c1.is_zero()) {
                    Exponents e1 = e;
                    e1[k] = pk - j;
                    e1[m + k] = e[m + k] + 1;
                    w[k][static_cast<std::size_t>(j)].add_term(e1, vec * c1);
                }
                Scalar c2 = binomial(pk, j - 1) * alpha;
                if (!c2.is_zero()) {
                    Exponents e2 = e;
                    e2[k] = pk - j + 1;
                    w[k][static_cast<std::size_t>(j)].add_term(e2, vec * c2);
                }
            }
        }
    return w;
}

std::vector<std::vector<TensorVector>> l_coefficient_elements(const TensorVector& g) {
    const TensorModule* mod = g.module();
    if (g.is_zero() || !mod)
        throw std::domain_error("l_coefficient_elements: nonzero vector required");
    std::size_t m = mod->slots();
    auto P = slot_s_degrees(g);
    std::vector<std::vector<TensorVector>> l(m);
    for (std::size_t k = 0; k < m; ++k)
        l[k].assign(static_cast<std::size_t>(P[k]) + 3, mod->zero());
    for (const auto& [e, vec] : g.terms())
        for (std::size_t k = 0; k < m; ++k) {
            std::int64_t pk = e[k], qk = e[m + k];
            const OmegaParams& par = mod->factor(k);
            UniPoly tq = UniPoly::monomial(Scalar(1), qk);
            UniPoly Gq = g_map(par, tq), Fq = f_map(par, tq);
            for (std::int64_t j = 0; j <= P[k] + 2; ++j) {
                auto& dest = l[k][static_cast<std::size_t>(j)];
                Scalar cA = binomial(pk, j);
                if (!cA.is_zero()) {
                    Exponents e1 = e;
                    e1[k] = pk - j + 1;
                    dest.add_term(e1, vec * cA);
                }
                Scalar cB = binomial(pk, j - 1);
                if (!cB.is_zero())
                    for (const auto& [d, gc] : Gq.terms()) {
                        Exponents e2 = e;
                        e2[k] = pk - j + 1;
                        e2[m + k] = d;
                        dest.add_term(e2, vec * (-(cB * gc)));
                    }
                Scalar cC = binomial(pk, j - 2) * par.alpha;
                if (!cC.is_zero())
                    for (const auto& [d, fc] : Fq.terms()) {
                        Exponents e3 = e;
                        e3[k] = pk - j + 2;
                        e3[m + k] = d;
                        dest.add_term(e3, vec * (-(cC * fc)));
                    }
            }
        }
    return l;
}

TensorVector strip_element(const TensorVector& g, std::size_t k) {
    const TensorModule* mod = g.module();
    if (g.is_zero() || !mod)
        throw std::domain_error("strip_element: nonzero vector required");
    if (k >= mod->slots())
        throw std::domain_error("strip_element: no such slot");
    std::int64_t P = slot_s_degrees(g)[k];
    TensorVector out = mod->zero();
    for (const auto& [e, vec] : g.terms())
        if (e[k] == P) {
            Exponents e2 = e;
            e2[k] = 0;
            out.add_term(e2, vec);
        }
    return out;
}

std::size_t rank_rg(const TensorVector& g) {
    if (g.is_zero())
        throw std::domain_error("rank_rg: nonzero vector required");
    LinearSpan<TensorVector::FlatKey> span;
    span.insert(g.flatten());
    for (const auto& row : w_coefficient_elements(g))
        for (const auto& v : row)
            if (!v.is_zero())
                span.insert(v.flatten());
    return span.dimension();
}

LinearSpan<TensorVector::FlatKey> operator_window_span(const TensorVector& g, std::int64_t n_lo,
                                                       std::int64_t n_hi) {
    const TensorModule* mod = g.module();
    if (g.is_zero() || !mod)
        throw std::domain_error("operator_window_span: nonzero vector required");
    LinearSpan<TensorVector::FlatKey> span;
    span.insert(g.flatten());
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        TensorVector lv = mod->act(Generator::L(n), g);
        if (!lv.is_zero())
            span.insert(lv.flatten());
        TensorVector wv = mod->act(Generator::W(n), g);
        if (!wv.is_zero())
            span.insert(wv.flatten());
    }
    return span;
}

bool ReductionReport::all_passed() const {
    for (const auto& s : slots)
        if (!(s.strip_in_span && s.t_bump_in_span && s.s_bump_in_span))
            return false;
    return !slots.empty();
}

ReductionReport verify_reductions(const TensorVector& g) {
    std::int64_t i = v_restriction_bound(g);
    std::int64_t needed = 2;
    for (std::int64_t P : slot_s_degrees(g))
        needed += P + 3;
    return verify_reductions(g, i, i + needed - 1);
}

ReductionReport verify_reductions(const TensorVector& g, std::int64_t n_lo, std::int64_t n_hi) {
    const TensorModule* mod = g.module();
    if (g.is_zero() || !mod)
        throw std::domain_error("verify_reductions: nonzero vector required");
    if (!mod->lambdas_distinct())
        throw std::domain_error("verify_reductions: factor lambdas must be pairwise distinct");

    ReductionReport rep;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    std::int64_t needed = 0;
    for (std::int64_t P : slot_s_degrees(g))
        needed += P + 3;
    rep.window_sufficient =
        n_lo >= v_restriction_bound(g) && (n_hi - n_lo + 1) >= needed;

    auto span = operator_window_span(g, n_lo, n_hi);
    auto w = w_coefficient_elements(g);
    auto l = l_coefficient_elements(g);
    for (std::size_t k = 0; k < mod->slots(); ++k) {
        ReductionReport::PerSlot slot;
        slot.strip_in_span = span.contains(strip_element(g, k).flatten());
        slot.t_bump_in_span = span.contains(w[k][0].flatten());
        slot.s_bump_in_span = span.contains(l[k][0].flatten());
        rep.slots.push_back(slot);
    }
    return rep;
}

ReachReport submodule_reach(const TensorVector& start, const TensorVector& target,
                            std::size_t max_rounds, std::int64_t lookback) {
    const TensorModule* mod = start.module();
    if (start.is_zero() || !mod)
        throw std::domain_error("submodule_reach: nonzero start vector required");
    if (!mod->contains(target))
        throw std::domain_error("submodule_reach: target from a different module");

    LinearSpan<TensorVector::FlatKey> span;
    auto flat_target = target.flatten();
    std::deque<TensorVector> queue;

    span.insert(start.flatten());
    queue.push_back(start);

    ReachReport rep;
    rep.dimension = span.dimension();
    if (span.contains(flat_target)) {
        rep.reached = true;
        return rep;
    }

    for (std::size_t round = 1; round <= max_rounds && !queue.empty(); ++round) {
        std::size_t expand = queue.size();
        bool grew = false;
        for (std::size_t q = 0; q < expand; ++q) {
            TensorVector b = std::move(queue.front());
            queue.pop_front();
            std::int64_t lo = v_restriction_bound(b);
            std::int64_t len = 2;
            for (std::int64_t P : slot_s_degrees(b))
                len += P + 3;
            std::vector<std::int64_t> window;
            for (std::int64_t n = -lookback; n < 0; ++n)
                window.push_back(n);
            for (std::int64_t n = lo; n < lo + len; ++n)
                window.push_back(n);
            for (std::int64_t n : window) {
                for (const Generator& x : {Generator::L(n), Generator::W(n)}) {
                    TensorVector img = mod->act(x, b);
                    if (img.is_zero())
                        continue;
                    if (span.insert(img.flatten())) {
                        grew = true;
                        queue.push_back(std::move(img));
                    }
                }
            }
        }
        rep.rounds_used = round;
        rep.dimension = span.dimension();
        if (span.contains(flat_target)) {
            rep.reached = true;
            return rep;
        }
        if (!grew) {
            rep.saturated = true;
            return rep;
        }
    }
    rep.saturated = queue.empty();
    return rep;
}

ReachReport generator_reach(const TensorModule& mod, const RestrictedVector& v0,
                            const TensorVector& target, std::size_t max_rounds,
                            std::int64_t lookback) {
    if (v0.is_zero())
        throw std::domain_error("generator_reach: zero generating vector");
    return submodule_reach(mod.vacuum(v0), target, max_rounds, lookback);
}

namespace {

/// t_1^{a} t_2^{b} (s_1 + s_2)^r (x) v0 inside a two-slot tensor module.
TensorVector degenerate_spanning_element(const TensorModule& mod, const RestrictedVector& v0,
                                         std::int64_t a, std::int64_t b, std::int64_t r) {
    TensorVector out = mod.zero();
    for (std::int64_t u = 0; u <= r; ++u)
        out = out + mod.monomial({u, r - u, a, b}, v0 * binomial(r, u));
    return out;
}

} // namespace

DegenerateReport degenerate_submodule_check(const OmegaParams& pi, const OmegaParams& pj,
                                            std::int64_t r_bound, std::int64_t n_window) {
    if (!(pi.lambda == pj.lambda))
        throw std::domain_error("degenerate_submodule_check: needs coincident lambdas");
    if (r_bound < 1 || n_window < 1)
        throw std::domain_error("degenerate_submodule_check: bounds must be >= 1");

    TensorModule mod({pi, pj}, RestrictedModule::trivial());
    RestrictedVector v0 = mod.v_module()->generator();

    // Truncation of M guaranteed to contain every image below: the action
    // raises total s-degree by at most 1 and the slot t-degree by at most
    // max(deg h, 1).  Membership in the truncation is then exact membership
    // in M, because M decomposes as the direct sum of its (a, b, r) lines.
    std::int64_t R = r_bound + 1;
    std::int64_t T1 = r_bound + std::max<std::int64_t>(pi.h.degree(), 1);
    std::int64_t T2 = r_bound + std::max<std::int64_t>(pj.h.degree(), 1);

    LinearSpan<TensorVector::FlatKey> trunc;
    for (std::int64_t a = 0; a <= T1; ++a)
        for (std::int64_t b = 0; b <= T2; ++b)
            for (std::int64_t r = 0; r <= R; ++r)
                trunc.insert(degenerate_spanning_element(mod, v0, a, b, r).flatten());

    DegenerateReport rep;
    rep.contains_vacuum = trunc.contains(mod.vacuum(v0).flatten());
    rep.proper = !trunc.contains(mod.monomial({1, 0, 0, 0}, v0).flatten());

    rep.closure_ok = true;
    for (std::int64_t a = 0; a <= r_bound; ++a)
        for (std::int64_t b = 0; b <= r_bound; ++b)
            for (std::int64_t r = 0; r <= r_bound; ++r) {
                TensorVector base = degenerate_spanning_element(mod, v0, a, b, r);
                for (std::int64_t n = -n_window; n <= n_window; ++n)
                    for (const Generator& x : {Generator::L(n), Generator::W(n)}) {
                        TensorVector img = mod.act(x, base);
                        ++rep.images_checked;
                        if (img.is_zero())
                            continue;
                        // degree bookkeeping guard: images must fit the truncation
                        for (const auto& [e, vv] : img.terms()) {
                            if (e[0] + e[1] > R || e[2] > T1 || e[3] > T2)
                                throw std::logic_error(
                                    "degenerate_submodule_check: truncation bound too small");
                        }
                        if (!trunc.contains(img.flatten()))
                            rep.closure_ok = false;
                    }
            }
    return rep;
}

// --------------------------------------------------------------- fingerprint

bool Fingerprint::operator==(const Fingerprint& o) const {
    return m == o.m && r_min == o.r_min && slots == o.slots;
}

std::string Fingerprint::str() const {
    std::ostringstream out;
    out << "{m=" << m << ", r_min=" << r_min;
    for (const auto& s : slots)
        out << ", (lambda=" << s.lambda.str() << ", alpha=" << s.alpha.str()
            << ", h=" << s.h.str() << ")";
    out << "}";
    return out.str();
}

namespace {

int unipoly_order(const UniPoly& a, const UniPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first != ib->first)
            return ia->first < ib->first ? -1 : 1;
        int c = Scalar::order(ia->second, ib->second);
        if (c != 0)
            return c;
        ++ia;
        ++ib;
    }
    if (ia != a.terms().end())
        return 1;
    if (ib != b.terms().end())
        return -1;
    return 0;
}

Scalar flat_coeff(const std::map<TensorVector::FlatKey, Scalar>& flat, const Exponents& e,
                  const PBWMonomial& label) {
    auto it = flat.find({e, label});
    return it == flat.end() ? Scalar(0) : it->second;
}

/// Solve the block generalized-Vandermonde fit A x = y sampled at
/// n = r .. r+rows-1 and cross-check the prediction at n = r+rows.
std::vector<Scalar> fit_exponential(const std::vector<Scalar>& lambdas, std::int64_t block,
                                    std::int64_t r, const std::vector<Scalar>& y) {
    BlockSpec spec;
    spec.sizes.assign(lambdas.size(), block);
    spec.lambdas = lambdas;
    spec.r = r;
    std::size_t rows = static_cast<std::size_t>(spec.total());
    if (y.size() != rows + 1)
        throw std::logic_error("fit_exponential: sample length mismatch");
    Matrix a = build_matrix(spec);
    std::vector<Scalar> rhs(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(rows));
    auto x = solve(std::move(a), std::move(rhs));
    if (!x)
        throw std::runtime_error("fingerprint: exponential fit is singular");
    // prediction at the extra sample point n = r + rows
    Scalar predicted(0);
    std::int64_t n = r + static_cast<std::int64_t>(rows);
    std::size_t col = 0;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        Scalar ln = pow(lambdas[k], n);
        for (std::int64_t j = 0; j < block; ++j)
            predicted += (*x)[col++] * pow(Scalar(n), j) * ln;
    }
    if (!(predicted == y[rows]))
        throw std::runtime_error("fingerprint: exponential fit fails cross-validation");
    return *x;
}

} // namespace

Fingerprint fingerprint(const TensorModule& mod, const RestrictedVector& sample) {
    if (sample.is_zero())
        throw std::domain_error("fingerprint: zero sample vector");
    if (!mod.v_module()->contains(sample))
        throw std::domain_error("fingerprint: sample from a different module");
    if (!mod.lambdas_distinct())
        throw std::runtime_error("fingerprint: coincident lambdas make the fit singular");

    std::size_t m = mod.slots();
    std::int64_t i0 = restriction_bound(sample);
    TensorVector g0 = mod.vacuum(sample);
    const PBWMonomial& label = sample.terms().begin()->first;
    Scalar val = sample.terms().begin()->second;
    Exponents zero_tuple(2 * m, 0);

    // operator-window data, three fit rows per slot plus one check row
    std::int64_t samples = static_cast<std::int64_t>(3 * m) + 1;
    std::vector<std::map<TensorVector::FlatKey, Scalar>> wdata, ldata;
    for (std::int64_t n = i0; n < i0 + samples; ++n) {
        wdata.push_back(mod.act(Generator::W(n), g0).flatten());
        ldata.push_back(mod.act(Generator::L(n), g0).flatten());
    }

    // lambda_k from consecutive ratios of the t_k-slot coordinate
    std::vector<Scalar> lambdas;
    for (std::size_t k = 0; k < m; ++k) {
        Exponents tk = zero_tuple;
        tk[m + k] = 1;
        Scalar a0 = flat_coeff(wdata[0], tk, label);
        Scalar a1 = flat_coeff(wdata[1], tk, label);
        Scalar a2 = flat_coeff(wdata[2], tk, label);
        if (a0.is_zero() || a1.is_zero())
            throw std::runtime_error("fingerprint: missing t-slot coordinate data");
        Scalar lam = a1 / a0;
        if (!(a2 == a1 * lam))
            throw std::runtime_error("fingerprint: lambda ratios are inconsistent");
        lambdas.push_back(lam);
    }

    // alpha_k from the vacuum coordinate of W_n g0: c_n = -n sum_k alpha_k lambda_k^n
    std::vector<Scalar> y;
    for (std::int64_t n = 0; n < 2 * static_cast<std::int64_t>(m) + 1; ++n)
        y.push_back(flat_coeff(wdata[static_cast<std::size_t>(n)], zero_tuple, label) / val);
    auto x = fit_exponential(lambdas, 2, i0, y);
    std::vector<Scalar> alphas;
    for (std::size_t k = 0; k < m; ++k) {
        if (!x[2 * k].is_zero())
            throw std::runtime_error("fingerprint: unexpected constant term in alpha fit");
        alphas.push_back(-x[2 * k + 1]);
    }

    // G_k(1), F_k(1) from the t-coordinates of L_n g0:
    //   y_n = sum_k lambda_k^n ( n [t^d]G_k(1) - n^2 alpha_k [t^d]F_k(1) )
    std::vector<std::int64_t> dmax(m, 0);
    for (const auto& flat : ldata)
        for (const auto& [key, c] : flat) {
            const Exponents& e = key.first;
            bool s_free = true;
            for (std::size_t k = 0; k < m; ++k)
                if (e[k] != 0)
                    s_free = false;
            if (!s_free)
                continue;
            for (std::size_t k = 0; k < m; ++k)
                dmax[k] = std::max(dmax[k], e[m + k]);
        }

    std::vector<SlotFingerprint> slots;
    for (std::size_t k = 0; k < m; ++k) {
        UniPoly G1, F1;
        for (std::int64_t d = 0; d <= dmax[k]; ++d) {
            Exponents e = zero_tuple;
            e[m + k] = d;
            std::vector<Scalar> probe;
            for (std::int64_t n = 0; n < 3 * static_cast<std::int64_t>(m) + 1; ++n)
                probe.push_back(flat_coeff(ldata[static_cast<std::size_t>(n)], e, label) / val);
            auto fit = fit_exponential(lambdas, 3, i0, probe);
            G1 = G1 + UniPoly::monomial(fit[3 * k + 1], d);
            F1 = F1 + UniPoly::monomial(-(fit[3 * k + 2] / alphas[k]), d);
        }
        // g = F(1); G(1) = t g + h(alpha) pins h(alpha); then
        // h = (t - alpha) g + h(alpha) reconstructs h exactly.
        UniPoly h_alpha_poly = G1 - UniPoly::variable() * F1;
        if (h_alpha_poly.degree() > 0)
            throw std::runtime_error("fingerprint: G/F probe inconsistency");
        Scalar h_alpha = h_alpha_poly.coeff(0);
        UniPoly h = (UniPoly::variable() - UniPoly(alphas[k])) * F1 + UniPoly(h_alpha);
        slots.push_back(SlotFingerprint{lambdas[k], alphas[k], h});
    }

    // minimal observed rank over a fixed probe sample inside N
    std::vector<TensorVector> probes;
    probes.push_back(g0);
    Exponents all_t = zero_tuple;
    for (std::size_t k = 0; k < m; ++k) {
        Exponents e = zero_tuple;
        e[m + k] = 1;
        probes.push_back(mod.monomial(e, sample));
        all_t[m + k] = 1;
    }
    probes.push_back(mod.monomial(all_t, sample));
    Exponents tsq = zero_tuple;
    tsq[m] = 2;
    probes.push_back(mod.monomial(tsq, sample));

    Fingerprint fp;
    fp.m = m;
    fp.r_min = rank_rg(probes[0]);
    for (const auto& p : probes)
        fp.r_min = std::min(fp.r_min, rank_rg(p));
    fp.slots = std::move(slots);
    std::sort(fp.slots.begin(), fp.slots.end(),
              [](const SlotFingerprint& a, const SlotFingerprint& b) {
                  int c = Scalar::order(a.lambda, b.lambda);
                  if (c != 0)
                      return c < 0;
                  c = Scalar::order(a.alpha, b.alpha);
                  if (c != 0)
                      return c < 0;
                  return unipoly_order(a.h, b.h) < 0;
              });
    return fp;
}

} // namespace w22
