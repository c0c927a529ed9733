#pragma once

// Structure constants X_{lam,mu}^nu of the rank-26 vertex algebra, their
// recursion and ratio consistency, and the locality checks: Laurent matrix
// coefficients, phi_{k,l} regularity/symmetry, binomial-sum regularity, and
// the z->w limit formula that forces the X values.

#include "vir26/correlator.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vir26 {

// X_{lam,mu}^nu = C(lam,l)C(mu,l)/C((lam+mu+nu+2)/2, l) *
//                 prod_{j=nu+2}^{(lam+mu+nu+2)/2} (j^2 - k^2)^{-1},
// l = (lam+mu-nu)/2; zero unless lam+mu+nu is even and the triangle holds.
inline RatFunc structure_constant(int lam, int mu, int nu) {
    if (lam < 0 || mu < 0 || nu < 0) return RatFunc();
    if ((lam + mu + nu) % 2 != 0) return RatFunc();
    int ell2 = lam + mu - nu;
    if (ell2 < 0) return RatFunc();
    int ell = ell2 / 2;
    if (ell > lam || ell > mu) return RatFunc();
    long top = (lam + mu + nu + 2) / 2;
    Rat scalar = Rat(Int::binomial(static_cast<unsigned long>(lam), static_cast<unsigned long>(ell)) *
                         Int::binomial(static_cast<unsigned long>(mu), static_cast<unsigned long>(ell)),
                     Int::binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(ell)));
    RatFunc out{scalar};
    const KPoly k2 = KPoly::kappa() * KPoly::kappa();
    for (long j = nu + 2; j <= top; ++j) {
        out = out / RatFunc(KPoly(Rat(j * j)) - k2);
    }
    return out;
}

// (nu+1)(lam+mu-nu+1) X_{lam+1,mu}^nu = -(lam+1)(lam-mu-nu-1) X_{1,nu+1}^nu X_{lam,mu}^{nu+1},
// the recursion in cross-multiplied form (covers the nu = lam+mu+1 pole by 0 = 0).
inline bool recursion_check(int lam, int mu, int nu) {
    RatFunc lhs = RatFunc(Rat(static_cast<long>(nu + 1) * (lam + mu - nu + 1))) *
                  structure_constant(lam + 1, mu, nu);
    RatFunc rhs = RatFunc(Rat(-static_cast<long>(lam + 1) * (lam - mu - nu - 1))) *
                  structure_constant(1, nu + 1, nu) * structure_constant(lam, mu, nu + 1);
    return lhs == rhs;
}

// X_{lam,mu}^{nu-1} / (X_{1,nu+1}^nu X_{lam,mu}^{nu+1}) against both printed
// forms of the guessed ratio, in cross-multiplied shape.
inline bool ratio_check(int lam, int mu, int nu) {
    // vacuous when the nu+1 channel is empty (then c - b - 1 can vanish too)
    if (structure_constant(lam, mu, nu + 1).is_zero()) return true;
    const auto p = hyp_params_channel(lam, mu, nu);
    const RatFunc &a = p.a, &b = p.b, &c = p.c;
    const RatFunc one(1), two(2);
    RatFunc ratio1 = a * b * (b + one) * (b + two) * (a - c) /
                     (c * c * (c + one) * (c - one) * (c - b - one));
    // second form, purely in lam, mu, nu and kappa
    RatFunc k2 = RatFunc::kappa() * RatFunc::kappa();
    RatFunc bigsq = RatFunc(Rat(lam + mu + nu + 3, 2));
    RatFunc ratio2 = -(RatFunc(Rat(lam - mu + nu + 1, 2)) * RatFunc(Rat(lam - mu - nu - 1, 2)) *
                       bigsq / (RatFunc(Rat(static_cast<long>(nu + 1) * (nu + 1))) *
                                RatFunc(Rat(lam + mu - nu + 1, 2)))) *
                     (bigsq * bigsq - k2) / (RatFunc(Rat(static_cast<long>(nu + 1) * (nu + 1))) - k2);
    if (ratio1 != ratio2) return false;
    RatFunc lhs = structure_constant(lam, mu, nu >= 1 ? nu - 1 : -1);
    RatFunc rhs = ratio1 * structure_constant(1, nu + 1, nu) * structure_constant(lam, mu, nu + 1);
    return lhs == rhs;
}

// Laurent polynomial in z, w recorded together with the pole order m it was
// extracted at (an element of A_m with (z-w)^m cleared).
struct LaurentBi {
    int m = 0;
    std::map<std::pair<long, long>, RatFunc> terms;

    void add(long ze, long we, const RatFunc& co) {
        if (co.is_zero()) return;
        auto key = std::make_pair(ze, we);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, co);
        } else {
            it->second += co;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    RatFunc coeff(long ze, long we) const {
        auto it = terms.find({ze, we});
        return it == terms.end() ? RatFunc() : it->second;
    }
    bool operator==(const LaurentBi& o) const { return m == o.m && terms == o.terms; }

    // z <-> w swap
    LaurentBi swapped() const {
        LaurentBi r;
        r.m = m;
        for (const auto& [k, v] : terms) r.terms.emplace(std::make_pair(k.second, k.first), v);
        return r;
    }
    LaurentBi scaled(const RatFunc& s) const {
        LaurentBi r;
        r.m = m;
        if (s.is_zero()) return r;
        for (const auto& [k, v] : terms) r.terms.emplace(k, v * s);
        return r;
    }
};

namespace detail {

// Apply k d/dz and l d/dw to z^alpha w^beta H(t) and return the series factor;
// the exponents drop to alpha-k, beta-l.
template <ExactField K>
TruncSeries<K> derive_series(const CorrelatorSpec& s, int k, int l, long order) {
    TruncSeries<K> h = s.h_series_t<K>(order);
    K b = FieldOf<K>::from(s.beta);
    for (int i = 0; i < l; ++i) {
        h = euler_dw(b, h);
        b = b - K::one();
    }
    K a = FieldOf<K>::from(s.alpha);
    for (int i = 0; i < k; ++i) {
        h = euler_dz(a, h);
        a = a - K::one();
    }
    return h;
}

inline long as_integer(const RatFunc& v, const char* what) {
    if (v.is_zero()) return 0;
    if (v.den().degree() != 0 || v.num().degree() != 0)
        throw std::logic_error(std::string("expected integer exponent in ") + what);
    Rat c = v.num().constant() / v.den().constant();
    if (!c.den().is_one()) throw std::logic_error(std::string("non-integer exponent in ") + what);
    return std::stol(c.num().str());
}

// Extract z^{zbase} w^{wbase} T(t) (T a terminating series) into a Laurent
// polynomial; coefficients beyond degree_bound must vanish up to the
// truncation order, otherwise the A_m membership fails.
template <ExactField K>
std::optional<LaurentBi> extract_laurent(long zbase, long wbase, const TruncSeries<K>& t_series,
                                         long degree_bound, int m) {
    if (!t_series.is_polynomial_of_degree(degree_bound)) return std::nullopt;
    LaurentBi out;
    out.m = m;
    for (long d = 0; d <= std::min(degree_bound, t_series.order()); ++d)
        out.add(zbase - d, wbase + d, FieldOf<K>::to(t_series[d]));
    return out;
}

}  // namespace detail

// The three Laurent matrix coefficients of Y(v1,z)Y(v1,w) on W(n): the top
// channel is 1, the middle is X_{1,n+1}^n (z^2 - 2/(n+1) zw + w^2), the bottom
// (n >= 2) is X_{1,n}^{n-1} X_{1,n-1}^{n-2} z^2 w^2.
struct LocalityRows {
    LaurentBi top;
    LaurentBi middle;
    std::optional<LaurentBi> bottom;
};

// Assembles the rows from correlator pairs and verifies the series terminate;
// `middle_perturb` scales the +- structure constant (negative controls).
template <ExactField K = FactRat>
LocalityRows locality_matrix_coeffs(int n, long order, const RatFunc& middle_perturb = RatFunc(1)) {
    if (n < 0) throw std::invalid_argument("locality_matrix_coeffs: n >= 0");
    LocalityRows rows;
    // top: ++ pair
    {
        CorrelatorSpec pp = correlator_spec_31x(Channel::PlusPlus, n);
        CorrelatorSpec ppb = pp.bar();
        TruncSeries<K> prod = pp.h_series_t<K>(order) * ppb.h_series_t<K>(order);
        long zb = detail::as_integer(pp.alpha + ppb.alpha, "top z");
        long wb = detail::as_integer(pp.beta + ppb.beta, "top w");
        auto lb = detail::extract_laurent(zb, wb, prod, 0, 0);
        if (!lb) throw std::domain_error("locality violation");
        rows.top = *lb;
    }
    // middle: X_{1,n+1}^n * (-+ pair) + X_{1,n}^{n-1} * (+- pair)
    {
        CorrelatorSpec mp = correlator_spec_31x(Channel::MinusPlus, n);
        CorrelatorSpec mpb = mp.bar();
        TruncSeries<K> acc = (mp.h_series_t<K>(order) * mpb.h_series_t<K>(order))
                                 .scaled(FieldOf<K>::from(structure_constant(1, n + 1, n)));
        if (n >= 1) {
            CorrelatorSpec pm = correlator_spec_31x(Channel::PlusMinus, n);
            CorrelatorSpec pmb = pm.bar();
            RatFunc x = structure_constant(1, n, n - 1) * middle_perturb;
            acc = acc + (pm.h_series_t<K>(order) * pmb.h_series_t<K>(order))
                            .shifted(2)
                            .scaled(FieldOf<K>::from(x));
        }
        long zb = detail::as_integer(mp.alpha + mpb.alpha, "middle z");
        long wb = detail::as_integer(mp.beta + mpb.beta, "middle w");
        auto lb = detail::extract_laurent(zb, wb, acc, 2, 0);
        if (!lb) throw std::domain_error("locality violation");
        rows.middle = *lb;
    }
    // bottom: X_{1,n}^{n-1} X_{1,n-1}^{n-2} * (-- pair)
    if (n >= 2) {
        CorrelatorSpec mm = correlator_spec_31x(Channel::MinusMinus, n);
        CorrelatorSpec mmb = mm.bar();
        RatFunc x = structure_constant(1, n, n - 1) * structure_constant(1, n - 1, n - 2);
        TruncSeries<K> prod = (mm.h_series_t<K>(order) * mmb.h_series_t<K>(order))
                                  .scaled(FieldOf<K>::from(x));
        long zb = detail::as_integer(mm.alpha + mmb.alpha, "bottom z");
        long wb = detail::as_integer(mm.beta + mmb.beta, "bottom w");
        auto lb = detail::extract_laurent(zb, wb, prod, 0, 0);
        if (!lb) throw std::domain_error("locality violation");
        rows.bottom = *lb;
    }
    return rows;
}

// Expected row values for comparison.
inline LocalityRows locality_rows_expected(int n) {
    LocalityRows rows;
    rows.top.add(0, 0, RatFunc(1));
    RatFunc x1 = structure_constant(1, n + 1, n);
    rows.middle.add(2, 0, x1);
    rows.middle.add(1, 1, RatFunc(Rat(-2, n + 1)) * x1);
    rows.middle.add(0, 2, x1);
    if (n >= 2) {
        LaurentBi b;
        b.add(2, 2, structure_constant(1, n, n - 1) * structure_constant(1, n - 1, n - 2));
        rows.bottom = b;
    }
    return rows;
}

// Shared per-n state for the phi_{k,l} family: the channel base series and a
// cache of assembled phi series, reused across the (k,l) grid.
template <ExactField K = FactRat>
class ChannelWorkspace {
public:
    ChannelWorkspace(int n, long order) : n_(n), order_(order) {
        p1_ = correlator_spec_31x(Channel::MinusPlus, n);
        h1bar_ = p1_.bar().template h_series_t<K>(order);
        if (n >= 1) {
            p2_ = correlator_spec_31x(Channel::PlusMinus, n);
            h2bar_ = p2_->bar().template h_series_t<K>(order);
            ratio_ = FieldOf<K>::from(structure_constant(1, n, n - 1) /
                                      structure_constant(1, n + 1, n));
        }
    }
    int n() const { return n_; }
    long order() const { return order_; }

    // phi_{k,l} as the series factor of z^{2-k} w^{-l}
    const TruncSeries<K>& phi_series(int k, int l) {
        auto it = cache_.find({k, l});
        if (it != cache_.end()) return it->second;
        TruncSeries<K> s = detail::derive_series<K>(p1_, k, l, order_) * h1bar_;
        if (p2_) {
            s = s + (detail::derive_series<K>(*p2_, k, l, order_) * h2bar_)
                        .shifted(2)
                        .scaled(ratio_);
        }
        return cache_.emplace(std::make_pair(k, l), std::move(s)).first->second;
    }

private:
    int n_;
    long order_;
    CorrelatorSpec p1_;
    std::optional<CorrelatorSpec> p2_;
    TruncSeries<K> h1bar_, h2bar_;
    K ratio_ = K::zero();
    std::map<std::pair<int, int>, TruncSeries<K>> cache_;
};

// phi_{k,l} in A_{k+l} (termination after multiplying by (1-t)^{k+l}) together
// with the exact swap symmetry phi_{k,l}(z,w) = phi_{l,k}(w,z).
template <ExactField K>
bool phi_kl_check(ChannelWorkspace<K>& ws, int k, int l) {
    const int m = k + l;
    const long order = ws.order();
    TruncSeries<K> t1 = binom_series(K::from_long(m), order) * ws.phi_series(k, l);
    auto lb1 = detail::extract_laurent(2 + l, -l, t1, m + 2, m);
    if (!lb1) return false;
    TruncSeries<K> t2 = binom_series(K::from_long(m), order) * ws.phi_series(l, k);
    auto lb2 = detail::extract_laurent(2 + k, -k, t2, m + 2, m);
    if (!lb2) return false;
    // phi_{k,l}(z,w) (z-w)^m = (-1)^m [phi_{l,k}(u,v)(u-v)^m] at u=w, v=z
    LaurentBi sw = lb2->swapped();
    if (m % 2 == 1) sw = sw.scaled(RatFunc(-1));
    return *lb1 == sw;
}

template <ExactField K = FactRat>
bool phi_kl_check(int n, int k, int l, long order) {
    ChannelWorkspace<K> ws(n, order);
    return phi_kl_check(ws, k, l);
}

// sum_{i=0}^{N} C(N,i) phi_{k+i, l+N-i} lies in A_{k+l}.
template <ExactField K>
bool binomial_sum_regularity(ChannelWorkspace<K>& ws, int k, int l, int nsum) {
    const long order = ws.order();
    TruncSeries<K> acc(order);
    for (int i = 0; i <= nsum; ++i) {
        Rat c(Int::binomial(static_cast<unsigned long>(nsum), static_cast<unsigned long>(i)),
              Int(1));
        acc = acc + ws.phi_series(k + i, l + nsum - i).shifted(i).scaled(
                        FieldOf<K>::from(RatFunc(c)));
    }
    TruncSeries<K> t = binom_series(K::from_long(k + l), order) * acc;
    return t.is_polynomial_of_degree(k + l + nsum + 2);
}

template <ExactField K = FactRat>
bool binomial_sum_regularity(int n, int k, int l, int nsum, long order) {
    ChannelWorkspace<K> ws(n, order);
    return binomial_sum_regularity(ws, k, l, nsum);
}

// The limit identity: phi^lam(v_nu^*, v_mu, 0,0,l,0) lies in A_l and
//   [(z-w)^l phi^lam(...)]|_{z=w} = X_{lam+1,mu}^nu (-1)^l gamma(gamma-1)...(gamma-l+1)
//                                   * w^{lam+1+mu-nu},
// gamma = lam/(2 kappa). Channels whose intertwiner is absent contribute zero.
template <ExactField K = FactRat>
bool zw_limit_check(int lam, int mu, int nu, int l, long order) {
    TruncSeries<K> acc(order);
    if (fusion_admissible(lam, mu, nu + 1)) {
        CorrelatorSpec s1 = correlator_spec_4x(Channel::MinusPlus, lam, mu, nu);
        CorrelatorSpec s1b = s1.bar();  // the second Virasoro copy
        if (detail::as_integer(s1.alpha + s1b.alpha, "zw -+ z") != 2 ||
            detail::as_integer(s1.beta + s1b.beta, "zw -+ w") != lam + mu - nu - 1)
            throw std::logic_error("zw_limit_check: exponent bookkeeping (-+)");
        TruncSeries<K> part = detail::derive_series<K>(s1, 0, l, order) * s1b.h_series_t<K>(order);
        RatFunc x = structure_constant(1, nu + 1, nu) * structure_constant(lam, mu, nu + 1);
        acc = acc + part.scaled(FieldOf<K>::from(x));
    }
    if (nu >= 1 && fusion_admissible(lam, mu, nu - 1)) {
        CorrelatorSpec s2 = correlator_spec_4x(Channel::PlusMinus, lam, mu, nu);
        CorrelatorSpec s2b = s2.bar();
        if (detail::as_integer(s2.alpha + s2b.alpha, "zw +- z") != 0 ||
            detail::as_integer(s2.beta + s2b.beta, "zw +- w") != lam + mu - nu + 1)
            throw std::logic_error("zw_limit_check: exponent bookkeeping (+-)");
        TruncSeries<K> part = detail::derive_series<K>(s2, 0, l, order) * s2b.h_series_t<K>(order);
        acc = acc + part.shifted(2).scaled(FieldOf<K>::from(structure_constant(lam, mu, nu - 1)));
    }
    TruncSeries<K> t = binom_series(K::from_long(l), order) * acc;
    if (!t.is_polynomial_of_degree(l + 2)) return false;
    RatFunc lhs_at_1 = FieldOf<K>::to(t.sum_coeffs(l + 2));
    RatFunc gamma = RatFunc(Rat(lam, 2)) * RatFunc::kappa_inv();
    RatFunc rhs = structure_constant(lam + 1, mu, nu) * falling(gamma, l);
    if (l % 2 == 1) rhs = -rhs;
    return lhs_at_1 == rhs;
}

// C(N,i) C(k+i,q) = sum_{j=0}^q C(N,j) C(k,q-j) C(N-j,N-i) for all 0 <= i <= N.
inline bool lemma_l2_check(int n, int k, int q) {
    auto binom = [](long a, long b) -> Int {
        if (b < 0 || b > a) return Int(0);
        return Int::binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    };
    for (int i = 0; i <= n; ++i) {
        Int lhs = binom(n, i) * binom(k + i, q);
        Int rhs(0);
        for (int j = 0; j <= q; ++j) rhs += binom(n, j) * binom(k, q - j) * binom(n - j, n - i);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace vir26
