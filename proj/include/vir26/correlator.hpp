#pragma once

// Closed-form correlators z^alpha w^beta (1-t)^gamma 2F1(a,b,c;t), the BPZ
// operators they satisfy, and the binomial derivative expansion for mixed
// z/w derivatives of z^Lambda h(t).
//
// The whole module reduces two-variable statements to series in t = w/z using
//   d/dz [z^a w^b H(t)] = z^{a-1} w^b (a H - t H'),
//   d/dw [z^a w^b H(t)] = z^a w^{b-1} (b H + t H'),
// both diagonal on coefficients. Series run over any exact field; verification
// sweeps instantiate the factored-denominator field, the canonical RatFunc
// instantiation is the reference.

#include "vir26/factrat.hpp"
#include "vir26/hyp.hpp"
#include "vir26/zhu.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace vir26 {

enum class Channel { PlusPlus, MinusPlus, PlusMinus, MinusMinus };

inline std::string to_string(Channel k) {
    switch (k) {
        case Channel::PlusPlus: return "++";
        case Channel::MinusPlus: return "-+";
        case Channel::PlusMinus: return "+-";
        case Channel::MinusMinus: return "--";
    }
    return "?";
}

template <ExactField K>
HypergeomParams<K> convert_params(const HypergeomParams<RatFunc>& p) {
    return {FieldOf<K>::from(p.a), FieldOf<K>::from(p.b), FieldOf<K>::from(p.c)};
}

struct CorrelatorSpec {
    RatFunc alpha, beta, gamma;
    std::optional<HypergeomParams<RatFunc>> hyp;  // nullopt: the series factor is 1
    Channel kind = Channel::PlusPlus;

    // (1-t)^gamma * 2F1 as a truncated series over the chosen field
    template <ExactField K>
    TruncSeries<K> h_series_t(long order) const {
        TruncSeries<K> h = binom_series(FieldOf<K>::from(gamma), order);
        if (hyp) h = h * gauss_2f1(convert_params<K>(*hyp), order);
        return h;
    }
    KSeries h_series(long order) const { return h_series_t<RatFunc>(order); }

    // the kappa -> -kappa image (the correlator for the second Virasoro copy)
    CorrelatorSpec bar() const {
        CorrelatorSpec r;
        r.alpha = alpha.bar();
        r.beta = beta.bar();
        r.gamma = gamma.bar();
        if (hyp) r.hyp = HypergeomParams<RatFunc>{hyp->a.bar(), hyp->b.bar(), hyp->c.bar()};
        r.kind = kind;
        return r;
    }
};

namespace detail {
inline RatFunc half_inv_kappa(long num) {  // num / (2 kappa)
    return RatFunc(Rat(num, 2)) * RatFunc::kappa_inv();
}
}  // namespace detail

// Matrix-coefficient rows for the degree-1 intertwiner pair on L(Delta(n)):
//   ++ : z^{(n+1)/2k} w^{n/2k} (1-t)^{1/2k}
//   -+ : z^{1-(n+3)/2k} w^{n/2k} (1-t)^{1/2k} F(1/k, (n+2)/k - 1, (n+1)/k)
//   +- : z^{(n-1)/2k} w^{1-(n+2)/2k} (1-t)^{1/2k} F(1 - n/k, 1/k, 2 - (n+1)/k)
//   -- : z^{1-(n+1)/2k} w^{1-(n+2)/2k} (1-t)^{1/2k}
// n = 0 has only the first two rows and n = 1 the first three.
inline CorrelatorSpec correlator_spec_31x(Channel kind, int n) {
    if (n < 0) throw std::invalid_argument("correlator_spec_31x: n must be nonnegative");
    const RatFunc one(1);
    const RatFunc ki = RatFunc::kappa_inv();
    CorrelatorSpec s;
    s.kind = kind;
    s.gamma = detail::half_inv_kappa(1);
    switch (kind) {
        case Channel::PlusPlus:
            s.alpha = detail::half_inv_kappa(n + 1);
            s.beta = detail::half_inv_kappa(n);
            return s;
        case Channel::MinusPlus:
            s.alpha = one - detail::half_inv_kappa(n + 3);
            s.beta = detail::half_inv_kappa(n);
            s.hyp = hyp_params_row(n);
            return s;
        case Channel::PlusMinus:
            if (n < 1) throw std::domain_error("channel absent");
            s.alpha = detail::half_inv_kappa(n - 1);
            s.beta = one - detail::half_inv_kappa(n + 2);
            s.hyp = HypergeomParams<RatFunc>{one - RatFunc(Rat(n)) * ki, ki,
                                             RatFunc(2) - RatFunc(Rat(n + 1)) * ki};
            return s;
        case Channel::MinusMinus:
            if (n < 2) throw std::domain_error("channel absent");
            s.alpha = one - detail::half_inv_kappa(n + 1);
            s.beta = one - detail::half_inv_kappa(n + 2);
            return s;
    }
    throw std::logic_error("correlator_spec_31x: bad kind");
}

// The general channel correlators Phi^{-+}, Phi^{+-} for Y(v_1,z) Y(v_lam,w) v_mu
// paired against v_nu^*:
//   -+ : alpha = 1-(nu+3)/2k, beta = Delta(nu+1)-Delta(lam)-Delta(mu),
//        params (a, b, c)
//   +- : alpha = (nu-1)/2k,   beta = Delta(nu-1)-Delta(lam)-Delta(mu),
//        params (a-c+1, b-c+1, 2-c)
// with gamma = lam/2k and (a,b,c) from hyp_params_channel.
inline CorrelatorSpec correlator_spec_4x(Channel kind, int lam, int mu, int nu) {
    const RatFunc one(1);
    CorrelatorSpec s;
    s.kind = kind;
    s.gamma = RatFunc(Rat(lam, 2)) * RatFunc::kappa_inv();
    auto p = hyp_params_channel(lam, mu, nu);
    if (kind == Channel::MinusPlus) {
        if (!fusion_admissible(lam, mu, nu + 1)) throw std::domain_error("channel absent");
        s.alpha = one - detail::half_inv_kappa(nu + 3);
        s.beta = delta(nu + 1) - delta(lam) - delta(mu);
        s.hyp = p;
        return s;
    }
    if (kind == Channel::PlusMinus) {
        if (nu < 1 || !fusion_admissible(lam, mu, nu - 1)) throw std::domain_error("channel absent");
        s.alpha = detail::half_inv_kappa(nu - 1);
        s.beta = delta(nu - 1) - delta(lam) - delta(mu);
        s.hyp = HypergeomParams<RatFunc>{p.a - p.c + one, p.b - p.c + one, RatFunc(2) - p.c};
        return s;
    }
    throw std::invalid_argument("correlator_spec_4x: only -+ and +- channels exist");
}

// BPZ operator: d^2/dvar^2 Phi = (1/k)[ w/((z-w)z) d_w - (1/z) d_z
//                + axis_weight/var^2 + pole_weight/(z-w)^2 ] Phi  (var = z),
// and the z<->w mirrored form for var = w.
struct BpzOperator {
    enum class Var { Z, W };
    RatFunc pole_weight;  // coefficient of (z-w)^{-2}
    RatFunc axis_weight;  // coefficient of var^{-2}
    Var var = Var::Z;
};

inline BpzOperator bpz_operator_z(int n) { return {delta(1), delta(n), BpzOperator::Var::Z}; }
inline BpzOperator bpz_operator_w(int n) { return {delta(1), delta(n), BpzOperator::Var::W}; }
// the second-order equation for Y(v_1,z) Y(v_lam,w) v_mu correlators
inline BpzOperator bpz_operator_channel(int lam, int mu) {
    return {delta(lam), delta(mu), BpzOperator::Var::Z};
}

// LHS - RHS of the BPZ equation applied to the correlator, reduced to a series
// in t times z^{alpha-2} w^{beta} (var Z) or z^{alpha} w^{beta-2} (var W).
template <ExactField K = RatFunc>
TruncSeries<K> bpz_residual(const CorrelatorSpec& spec, const BpzOperator& op, long order) {
    const K ki = FieldOf<K>::from(RatFunc::kappa_inv());
    const K alpha = FieldOf<K>::from(spec.alpha);
    const K beta = FieldOf<K>::from(spec.beta);
    const K axis = FieldOf<K>::from(op.axis_weight);
    const K pole = FieldOf<K>::from(op.pole_weight);
    TruncSeries<K> h = spec.h_series_t<K>(order);
    TruncSeries<K> hz = euler_dz(alpha, h);  // alpha H - t H'
    TruncSeries<K> hw = euler_dw(beta, h);   // beta H + t H'
    if (op.var == BpzOperator::Var::Z) {
        TruncSeries<K> d2 = euler_dz(alpha - K::one(), hz);
        TruncSeries<K> rhs = mul_geom1(hw) - hz + h.scaled(axis) +
                             mul_geom1(mul_geom1(h)).scaled(pole);
        return d2 - rhs.scaled(ki);
    }
    TruncSeries<K> d2 = euler_dw(beta - K::one(), hw);
    TruncSeries<K> rhs = -mul_geom1(hz).shifted(1) - hw + h.scaled(axis) +
                         mul_geom1(mul_geom1(h)).shifted(2).scaled(pole);
    return d2 - rhs.scaled(ki);
}

// The hypergeometric data of the reduced ODE t(1-t)g'' + [c-(a+b+1)t]g' - abg = 0
// after substituting Phi = z^alpha w^beta (1-t)^{1/2k} g(t) into the BPZ
// equation, for the four (alpha,beta) rows and either equation.
inline HypergeomParams<RatFunc> hypergeom_reduction(int row, BpzOperator::Var var, int n) {
    if (row < 1 || row > 4) throw std::invalid_argument("hypergeom_reduction: row in 1..4");
    const RatFunc one(1), two(2), zero;
    const RatFunc ki = RatFunc::kappa_inv();
    auto over_k = [&](long v) { return RatFunc(Rat(v)) * ki; };
    if (var == BpzOperator::Var::Z) {
        switch (row) {
            case 1: return {zero, one - over_k(n + 1), two - over_k(n + 3)};
            case 2: return hyp_params_row(n);
            case 3: return {one - over_k(n), ki, two - over_k(n + 1)};
            case 4: return {zero, over_k(n + 1) - one, over_k(n - 1)};
        }
    } else {
        switch (row) {
            case 1: return {zero, over_k(n + 3) - one, over_k(n + 1)};
            case 2: return hyp_params_row(n);
            case 3: return {one - over_k(n), ki, two - over_k(n + 1)};
            case 4: return {zero, one - over_k(n - 1), two - over_k(n + 1)};
        }
    }
    throw std::logic_error("hypergeom_reduction");
}

// Residual of the hypergeometric ODE itself, for cross-checking reductions.
template <ExactField K>
TruncSeries<K> hypergeom_ode_residual(const HypergeomParams<K>& p, const TruncSeries<K>& f) {
    long n = f.order() - 2;
    if (n < 0) throw std::invalid_argument("hypergeom_ode_residual: order too small");
    TruncSeries<K> r(n);
    // t(1-t)f'' + [c-(a+b+1)t]f' - ab f
    TruncSeries<K> f1 = series_derivative(f, 1);
    TruncSeries<K> f2 = series_derivative(f, 2);
    K abp1 = p.a + p.b + K::one();
    K ab = p.a * p.b;
    for (long i = 0; i <= n; ++i) {
        K v = K::zero();
        if (i >= 1) v = v + f2[i - 1];
        if (i >= 2) v = v - f2[i - 2];
        v = v + p.c * f1[i];
        if (i >= 1) v = v - abp1 * f1[i - 1];
        v = v - ab * f[i];
        r[i] = v;
    }
    return r;
}

// Closed form for the binomial sum of mixed derivatives:
//   sum_i C(N,i) dz^i dw^{N-i} [z^L h(t)]
//     = z^{L-N} sum_j C(N,j) (L-N+1)_j (1-t)^{N-j} d_t^{N-j} h(t).
// Returns the series factor of z^{L-N}.
template <ExactField K>
TruncSeries<K> binom_derivative_expand(const K& lambda, const TruncSeries<K>& h, int n) {
    if (n < 0 || n > h.order()) throw std::invalid_argument("binom_derivative_expand: bad N");
    TruncSeries<K> out(h.order() - n);
    K lshift = lambda - K::from_long(n - 1);  // (L-N+1)
    for (int j = 0; j <= n; ++j) {
        K coef = binom_general(K::from_long(n), static_cast<long>(j)) * pochhammer(lshift, j);
        TruncSeries<K> term = binom_series(K::from_long(n - j), h.order() - n) *
                              series_derivative(h, n - j).truncated(h.order() - n);
        out = out + term.scaled(coef);
    }
    return out;
}

// Inner expansion: dz^n (z^L h) = sum_i (-1)^i C(n,i) (L-n+1)_{n-i} z^{L-n-i} w^i d_t^i h.
// Collapsing w^i z^{-i} = t^i gives the series factor of z^{L-n}.
template <ExactField K>
TruncSeries<K> dz_pow_expand(const K& lambda, const TruncSeries<K>& h, int n) {
    if (n < 0 || n > h.order()) throw std::invalid_argument("dz_pow_expand: bad n");
    TruncSeries<K> out(h.order() - n);
    K lshift = lambda - K::from_long(n - 1);
    for (int i = 0; i <= n; ++i) {
        K coef = binom_general(K::from_long(n), static_cast<long>(i)) * pochhammer(lshift, n - i);
        if (i % 2 == 1) coef = -coef;
        TruncSeries<K> term = series_derivative(h, i).truncated(h.order() - n).shifted(i);
        out = out + term.scaled(coef);
    }
    return out;
}

// Brute-force mixed derivative on the (z-exponent, w-exponent, series) triple,
// the independent oracle for the closed forms above.
template <ExactField K>
struct ZwForm {  // z^a w^b H(t)
    K a, b;
    TruncSeries<K> h;
    ZwForm dz() const { return {a - K::one(), b, euler_dz(a, h)}; }
    ZwForm dw() const { return {a, b - K::one(), euler_dw(b, h)}; }
};

}  // namespace vir26
