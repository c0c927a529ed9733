#pragma once

// The five hypergeometric product identities H1, H2, H3, H51, H52 (successive
// members of the derivative-pairing family), assembled term by term and
// verified by exact truncated series, plus the pairing
// f_n = (d^n Phi_0 / dt^n)^T Q Psi_0 itself.

#include "vir26/series.hpp"
#include "vir26/weights.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace vir26 {

enum class IdentityId { H1, H2, H3, H51, H52 };

inline std::string to_string(IdentityId id) {
    switch (id) {
        case IdentityId::H1: return "H1";
        case IdentityId::H2: return "H2";
        case IdentityId::H3: return "H3";
        case IdentityId::H51: return "H51";
        case IdentityId::H52: return "H52";
    }
    return "?";
}

inline const std::array<IdentityId, 5> kAllIdentities{IdentityId::H1, IdentityId::H2,
                                                      IdentityId::H3, IdentityId::H51,
                                                      IdentityId::H52};

// Parameter families from the correlator solutions:
//   a = 1/k, b = (n+2)/k - 1, c = (n+1)/k
inline HypergeomParams<RatFunc> hyp_params_row(int n) {
    RatFunc ki = RatFunc::kappa_inv();
    return {ki, RatFunc(Rat(n + 2)) * ki - RatFunc::one(), RatFunc(Rat(n + 1)) * ki};
}

//   a = (lam-mu+nu+1)/(2k), b = (lam+mu+nu+3)/(2k) - 1, c = (nu+1)/k
inline HypergeomParams<RatFunc> hyp_params_channel(int lam, int mu, int nu) {
    RatFunc half_ki = RatFunc(Rat(1, 2)) * RatFunc::kappa_inv();
    return {RatFunc(Rat(lam - mu + nu + 1)) * half_ki,
            RatFunc(Rat(lam + mu + nu + 3)) * half_ki - RatFunc::one(),
            RatFunc(Rat(nu + 1)) * RatFunc::kappa_inv()};
}

namespace detail {

template <ExactField K>
void require_nonzero(const K& x) {
    if (x.is_zero()) throw std::domain_error("parameter pole");
}

template <ExactField K>
K safe_div(const K& n, const K& d) {
    require_nonzero(d);
    return n / d;
}

}  // namespace detail

// Lazily shares the 2F1 x 2F1 products that the five identities have in common
// for one parameter triple (they overlap heavily).
template <ExactField K>
class IdentityWorkspace {
public:
    IdentityWorkspace(HypergeomParams<K> p, long order) : p_(std::move(p)), order_(order) {}

    const HypergeomParams<K>& params() const { return p_; }
    long order() const { return order_; }

    // F(a+j, b+j, c+j) * F(-a, -b-2, -c)
    const TruncSeries<K>& direct_product(int j) {
        auto& slot = direct_[static_cast<size_t>(j)];
        if (!slot) {
            K jj = K::from_long(j);
            TruncSeries<K> fj =
                gauss_2f1<K>({p_.a + jj, p_.b + jj, p_.c + jj}, order_);
            slot = fj * dual_base();
        }
        return *slot;
    }
    // F(a-c+m, b-c+m, m+1-c) * F(-a+c+1, -b+c-1, 2+c)
    const TruncSeries<K>& exchanged_product(int m) {
        auto& slot = exch_[static_cast<size_t>(m - 1)];
        if (!slot) {
            K mm = K::from_long(m);
            TruncSeries<K> gm = gauss_2f1<K>(
                {p_.a - p_.c + mm, p_.b - p_.c + mm, K::from_long(m + 1) - p_.c}, order_);
            slot = gm * exchanged_base();
        }
        return *slot;
    }

private:
    const TruncSeries<K>& dual_base() {
        if (!fb_) fb_ = gauss_2f1<K>({-p_.a, -p_.b - K::from_long(2), -p_.c}, order_);
        return *fb_;
    }
    const TruncSeries<K>& exchanged_base() {
        if (!fd_) {
            fd_ = gauss_2f1<K>(
                {-p_.a + p_.c + K::one(), -p_.b + p_.c - K::one(), K::from_long(2) + p_.c},
                order_);
        }
        return *fd_;
    }

    HypergeomParams<K> p_;
    long order_;
    std::optional<TruncSeries<K>> fb_, fd_;
    std::array<std::optional<TruncSeries<K>>, 5> direct_;
    std::array<std::optional<TruncSeries<K>>, 5> exch_;
};

// The printed right-hand side of each identity as a truncated series.
template <ExactField K>
TruncSeries<K> rhs_polynomials(IdentityId id, const HypergeomParams<K>& p, long order) {
    using detail::safe_div;
    const K &a = p.a, &b = p.b, &c = p.c;
    const K one = K::one(), two = K::from_long(2);
    TruncSeries<K> r(order);
    switch (id) {
        case IdentityId::H1:
            r[0] = one;
            if (order >= 1) r[1] = -safe_div(two * a, c);
            if (order >= 2) r[2] = safe_div(a * (a - b - one), c * (c - b - one));
            return r;
        case IdentityId::H2:
            r[0] = one;
            if (order >= 1) r[1] = safe_div(a * (b - two * c + two), c * (c - one));
            if (order >= 2) r[2] = safe_div(a * (a - b - one), c * (c - one));
            return r;
        case IdentityId::H3:
            r[0] = one;
            if (order >= 1) r[1] = safe_div(two * a * (b - c + two), c * (c - two));
            if (order >= 2)
                r[2] = safe_div(a * (a - b - one) * (c - b - two), (c - two) * (c - one) * c);
            return r;
        case IdentityId::H51: {
            const K c3 = c - K::from_long(3);
            r[0] = one;
            if (order >= 1) r[1] = safe_div(a * (K::from_long(3) * b - two * c + K::from_long(6)), c * c3);
            if (order >= 2)
                r[2] = safe_div(a * (a - b - one) * pochhammer(c - b - K::from_long(3), 2),
                                pochhammer(c3, 4));
            K tail = safe_div(a * pochhammer(b, 3), pochhammer(c3, 4));
            return r + geom_pole_series<K>(1, order).shifted(2).scaled(tail);
        }
        case IdentityId::H52: {
            const K c4 = c - K::from_long(4);
            r[0] = one;
            if (order >= 1) r[1] = safe_div(a * (K::from_long(4) * b - two * c + K::from_long(8)), c * c4);
            if (order >= 2)
                r[2] = safe_div(a * (a - b - one) * pochhammer(c - b - K::from_long(4), 3),
                                pochhammer(c4, 5));
            K t1 = safe_div(a * pochhammer(b, 3) * (a - b + K::from_long(3) * c - K::from_long(7)),
                            pochhammer(c4, 5));
            K t2 = safe_div(a * pochhammer(b, 3) * (a + b - c + K::from_long(3)),
                            pochhammer(c4, 5));
            return r + geom_pole_series<K>(1, order).shifted(2).scaled(t1) +
                   geom_pole_series<K>(2, order).shifted(3).scaled(t2);
        }
    }
    throw std::logic_error("rhs_polynomials: bad id");
}

// LHS - RHS of the selected identity; the zero series when the identity holds.
template <ExactField K>
TruncSeries<K> identity_residual(IdentityId id, IdentityWorkspace<K>& ws) {
    using detail::safe_div;
    const auto& p = ws.params();
    const K &a = p.a, &b = p.b, &c = p.c;
    const K one = K::one(), two = K::from_long(2);
    const long order = ws.order();
    TruncSeries<K> lhs = ws.direct_product(0);
    switch (id) {
        case IdentityId::H1: {
            K coef = safe_div(a * pochhammer(b, 3) * (a - c),
                              c * pochhammer(c - one, 3) * (c - b - one));
            lhs = lhs + ws.exchanged_product(1).shifted(2).scaled(coef);
            break;
        }
        case IdentityId::H2: {
            lhs = lhs + ws.direct_product(1).shifted(1).scaled(safe_div(a * b, c * (c - one)));
            K coef = safe_div(a * pochhammer(b, 3) * pochhammer(a - c, 2),
                              pochhammer(c - two, 3) * pochhammer(c - one, 3));
            lhs = lhs + ws.exchanged_product(2).shifted(3).scaled(coef);
            break;
        }
        case IdentityId::H3: {
            lhs = lhs + ws.direct_product(1).shifted(1).scaled(
                            safe_div(two * a * b, c * (c - two)));
            lhs = lhs + ws.direct_product(2).shifted(2).scaled(
                            safe_div(pochhammer(a, 2) * pochhammer(b, 2), pochhammer(c - two, 4)));
            K coef = safe_div(a * pochhammer(b, 3) * pochhammer(a - c, 3) * (c - b - two),
                              pochhammer(c - K::from_long(3), 4) * pochhammer(c - two, 4));
            lhs = lhs + ws.exchanged_product(3).shifted(4).scaled(coef);
            break;
        }
        case IdentityId::H51: {
            const K c3 = c - K::from_long(3);
            lhs = lhs + ws.direct_product(1).shifted(1).scaled(
                            safe_div(K::from_long(3) * a * b, c * c3));
            lhs = lhs + ws.direct_product(2).shifted(2).scaled(
                            safe_div(K::from_long(3) * pochhammer(a, 2) * pochhammer(b, 2),
                                     pochhammer(c, 2) * pochhammer(c3, 2)));
            lhs = lhs + ws.direct_product(3).shifted(3).scaled(
                            safe_div(pochhammer(a, 3) * pochhammer(b, 3), pochhammer(c3, 6)));
            K coef = safe_div(a * pochhammer(b, 3) * pochhammer(a - c, 4) *
                                  pochhammer(c - b - K::from_long(3), 2),
                              pochhammer(c - K::from_long(4), 5) * pochhammer(c3, 5));
            lhs = lhs + ws.exchanged_product(4).shifted(5).scaled(coef);
            break;
        }
        case IdentityId::H52: {
            const K c4 = c - K::from_long(4);
            lhs = lhs + ws.direct_product(1).shifted(1).scaled(
                            safe_div(K::from_long(4) * a * b, c * c4));
            lhs = lhs + ws.direct_product(2).shifted(2).scaled(
                            safe_div(K::from_long(6) * pochhammer(a, 2) * pochhammer(b, 2),
                                     pochhammer(c, 2) * pochhammer(c4, 2)));
            lhs = lhs + ws.direct_product(3).shifted(3).scaled(
                            safe_div(K::from_long(4) * pochhammer(a, 3) * pochhammer(b, 3),
                                     pochhammer(c, 3) * pochhammer(c4, 3)));
            lhs = lhs + ws.direct_product(4).shifted(4).scaled(
                            safe_div(pochhammer(a, 4) * pochhammer(b, 4), pochhammer(c4, 8)));
            K coef = safe_div(a * pochhammer(b, 3) * pochhammer(a - c, 5) *
                                  pochhammer(c - b - K::from_long(4), 3),
                              pochhammer(c - K::from_long(5), 6) * pochhammer(c4, 6));
            lhs = lhs + ws.exchanged_product(5).shifted(6).scaled(coef);
            break;
        }
    }
    return lhs - rhs_polynomials(id, p, order);
}

template <ExactField K>
TruncSeries<K> identity_residual(IdentityId id, const HypergeomParams<K>& p, long order) {
    IdentityWorkspace<K> ws(p, order);
    return identity_residual(id, ws);
}

// Cheap pole screen: every Pochhammer chain and printed coefficient denominator
// the identity needs must be nonzero. Used for sample rejection, never repair.
template <ExactField K>
bool identity_params_valid(IdentityId id, const HypergeomParams<K>& p, long order) {
    const K &a = p.a, &b = p.b, &c = p.c;
    (void)a;
    auto chain_ok = [&](const K& base) {
        for (long i = 0; i < order; ++i)
            if ((base + K::from_long(i)).is_zero()) return false;
        return true;
    };
    int jmax = 0, m = 1;
    switch (id) {
        case IdentityId::H1: jmax = 0; m = 1; break;
        case IdentityId::H2: jmax = 1; m = 2; break;
        case IdentityId::H3: jmax = 2; m = 3; break;
        case IdentityId::H51: jmax = 3; m = 4; break;
        case IdentityId::H52: jmax = 4; m = 5; break;
    }
    for (int j = 0; j <= jmax; ++j)
        if (!chain_ok(c + K::from_long(j))) return false;
    if (!chain_ok(-c) || !chain_ok(K::from_long(m + 1) - c) || !chain_ok(K::from_long(2) + c))
        return false;
    // coefficient denominators: c-5..c+5 factors and c-b-1 cover every identity
    for (int s = -5; s <= 5; ++s)
        if ((c + K::from_long(s)).is_zero()) return false;
    if ((c - b - K::one()).is_zero()) return false;
    return true;
}

// f_n = (d^n Phi_0/dt^n)^T Q Psi_0 represented as t^{-pole_order} * series.
template <ExactField K>
struct PairingResult {
    long pole_order;  // 0 for n <= 2, n-2 otherwise
    TruncSeries<K> series;
};

template <ExactField K>
PairingResult<K> derivative_pairing(int n, const HypergeomParams<K>& p, long order) {
    using detail::safe_div;
    const K &a = p.a, &b = p.b, &c = p.c;
    const K one = K::one();
    const K q22 = safe_div(a * b * (b + one) * (b + K::from_long(2)) * (a - c),
                           (c - one) * c * c * (c + one) * (c - b - one));
    const long pole = std::max(0, n - 2);
    TruncSeries<K> f = gauss_2f1<K>({a, b, c}, order + n);
    TruncSeries<K> fdual = gauss_2f1<K>({-a, -b - K::from_long(2), -c}, order);
    TruncSeries<K> g =
        gauss_2f1<K>({a - c + one, b - c + one, K::from_long(2) - c}, order + n);
    TruncSeries<K> gdual = gauss_2f1<K>(
        {-a + c + one, -b + c - one, K::from_long(2) + c}, order);

    TruncSeries<K> out =
        (series_derivative(f, n).truncated(order) * fdual).shifted(pole);
    // d^n/dt^n [t^{1-c} G] * t^{1+c} Gdual = sum_i C(n,i) ff(1-c,i) t^{2-i} G^{(n-i)} Gdual
    for (int i = 0; i <= n; ++i) {
        K coef = q22 * binom_general(K::from_long(n), static_cast<long>(i)) * falling(one - c, i);
        long tpow = pole + 2 - i;  // = n - i for n >= 3, 2 - i otherwise
        TruncSeries<K> gi = series_derivative(g, n - i).truncated(order) * gdual;
        out = out + gi.shifted(tpow).scaled(coef);
    }
    return {pole, out};
}

}  // namespace vir26
