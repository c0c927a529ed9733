#pragma once

// Truncated formal power series in t over an exact field (Rat or RatFunc),
// with the hypergeometric and binomial series used throughout.

#include "vir26/ratfunc.hpp"

#include <concepts>
#include <stdexcept>
#include <vector>

namespace vir26 {

template <typename K>
concept ExactField = requires(K a, K b, long n) {
    { K::zero() } -> std::convertible_to<K>;
    { K::one() } -> std::convertible_to<K>;
    { K::from_long(n) } -> std::convertible_to<K>;
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

template <ExactField K>
K pochhammer(const K& x, long n) {
    K r = K::one();
    for (long i = 0; i < n; ++i) r = r * (x + K::from_long(i));
    return r;
}

// Falling factorial x(x-1)...(x-n+1); C(x,n) = falling(x,n)/n!.
template <ExactField K>
K falling(const K& x, long n) {
    K r = K::one();
    for (long i = 0; i < n; ++i) r = r * (x - K::from_long(i));
    return r;
}

template <ExactField K>
K binom_general(const K& x, long n) {
    K r = falling(x, n);
    for (long i = 2; i <= n; ++i) r = r / K::from_long(i);
    return r;
}

template <ExactField K>
struct HypergeomParams {
    K a, b, c;
};

template <ExactField K>
class TruncSeries {
public:
    TruncSeries() : c_(1, K::zero()) {}
    explicit TruncSeries(long order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
        c_.assign(static_cast<size_t>(order) + 1, K::zero());
    }
    explicit TruncSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(K::zero());
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const K& operator[](long i) const { return c_[static_cast<size_t>(i)]; }
    K& operator[](long i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<K>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    // true if all coefficients beyond `deg` vanish
    bool is_polynomial_of_degree(long deg) const {
        for (long i = deg + 1; i <= order(); ++i)
            if (!c_[static_cast<size_t>(i)].is_zero()) return false;
        return true;
    }
    K sum_coeffs(long upto) const {  // evaluation at t=1 of a terminating series
        K s = K::zero();
        for (long i = 0; i <= std::min(upto, order()); ++i) s = s + c_[static_cast<size_t>(i)];
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        long n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (long i = 0; i <= n; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        long n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (long i = 0; i <= n; ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries r(a.order());
        for (long i = 0; i <= a.order(); ++i) r[i] = -a[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        long n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (long i = 0; i <= n; ++i) {
            if (a[i].is_zero()) continue;
            for (long j = 0; j + i <= n; ++j) {
                if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
            }
        }
        return r;
    }
    TruncSeries scaled(const K& s) const {
        TruncSeries r(order());
        if (s.is_zero()) return r;
        for (long i = 0; i <= order(); ++i)
            if (!c_[static_cast<size_t>(i)].is_zero()) r[i] = c_[static_cast<size_t>(i)] * s;
        return r;
    }
    // multiply by t^j, same truncation order
    TruncSeries shifted(long j) const {
        TruncSeries r(order());
        for (long i = 0; i + j <= order(); ++i) r[i + j] = c_[static_cast<size_t>(i)];
        return r;
    }
    TruncSeries truncated(long new_order) const {
        TruncSeries r(std::min(new_order, order()));
        for (long i = 0; i <= r.order(); ++i) r[i] = c_[static_cast<size_t>(i)];
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    static TruncSeries one(long order) {
        TruncSeries r(order);
        r[0] = K::one();
        return r;
    }

private:
    std::vector<K> c_;
};

// 2F1(a,b,c;t) to order N. Requires (c)_k invertible for 1 <= k <= N.
template <ExactField K>
TruncSeries<K> gauss_2f1(const HypergeomParams<K>& p, long order) {
    TruncSeries<K> r(order);
    r[0] = K::one();
    for (long k = 0; k < order; ++k) {
        K ck = p.c + K::from_long(k);
        if (ck.is_zero()) throw std::domain_error("parameter pole");
        r[k + 1] = r[k] * (p.a + K::from_long(k)) * (p.b + K::from_long(k)) /
                   (K::from_long(k + 1) * ck);
    }
    return r;
}

// (1-t)^gamma to order N (generalized binomial).
template <ExactField K>
TruncSeries<K> binom_series(const K& gamma, long order) {
    TruncSeries<K> r(order);
    r[0] = K::one();
    for (long k = 0; k < order; ++k) {
        r[k + 1] = -(r[k] * (gamma - K::from_long(k)) / K::from_long(k + 1));
    }
    return r;
}

// (1-t)^-m for positive integer m: coefficient of t^k is C(m-1+k, k).
template <ExactField K>
TruncSeries<K> geom_pole_series(long m, long order) {
    if (m <= 0) throw std::invalid_argument("geom_pole_series: m must be positive");
    TruncSeries<K> r(order);
    r[0] = K::one();
    for (long k = 0; k < order; ++k)
        r[k + 1] = r[k] * K::from_long(m + k) / K::from_long(k + 1);
    return r;
}

// k-th formal derivative; order drops by k.
template <ExactField K>
TruncSeries<K> series_derivative(const TruncSeries<K>& s, long k) {
    if (k < 0 || k > s.order()) throw std::domain_error("series_derivative: order exceeded");
    if (k == 0) return s;
    TruncSeries<K> r(s.order() - k);
    for (long i = 0; i <= r.order(); ++i) {
        K f = K::one();
        for (long j = 1; j <= k; ++j) f = f * K::from_long(i + j);
        r[i] = s[i + k] * f;
    }
    return r;
}

// Multiplication by (1-t)^-1 at the same order (prefix sums).
template <ExactField K>
TruncSeries<K> mul_geom1(const TruncSeries<K>& s) {
    TruncSeries<K> r(s.order());
    K acc = K::zero();
    for (long i = 0; i <= s.order(); ++i) {
        acc = acc + s[i];
        r[i] = acc;
    }
    return r;
}

// d/dw acting on z^alpha w^beta H(t), t = w/z:  H -> beta*H + t*H'.
// Diagonal in the coefficients: (beta + k) h_k. The beta exponent drops by 1.
template <ExactField K>
TruncSeries<K> euler_dw(const K& beta, const TruncSeries<K>& h) {
    TruncSeries<K> r(h.order());
    for (long k = 0; k <= h.order(); ++k)
        if (!h[k].is_zero()) r[k] = h[k] * (beta + K::from_long(k));
    return r;
}

// d/dz acting on z^alpha w^beta H(t):  H -> alpha*H - t*H'; alpha drops by 1.
template <ExactField K>
TruncSeries<K> euler_dz(const K& alpha, const TruncSeries<K>& h) {
    TruncSeries<K> r(h.order());
    for (long k = 0; k <= h.order(); ++k)
        if (!h[k].is_zero()) r[k] = h[k] * (alpha - K::from_long(k));
    return r;
}

using QSeries = TruncSeries<Rat>;
using KSeries = TruncSeries<RatFunc>;

}  // namespace vir26
