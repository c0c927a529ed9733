#pragma once

// Zhu-bimodule polynomials f_n, g_s in Q(kappa)[x,y], the determinant
// realization of f_n, and the fusion-rule predicate.

#include "vir26/verma.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vir26 {

class BiPoly {
public:
    using Key = std::pair<int, int>;  // (x-degree, y-degree)

    BiPoly() = default;
    explicit BiPoly(RatFunc c) {
        if (!c.is_zero()) c_[{0, 0}] = std::move(c);
    }
    static BiPoly x() {
        BiPoly p;
        p.c_[{1, 0}] = RatFunc::one();
        return p;
    }
    static BiPoly y() {
        BiPoly p;
        p.c_[{0, 1}] = RatFunc::one();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, RatFunc>& terms() const { return c_; }
    RatFunc coeff(int dx, int dy) const {
        auto it = c_.find({dx, dy});
        return it == c_.end() ? RatFunc::zero() : it->second;
    }
    int x_degree() const {
        int d = -1;
        for (const auto& [k, v] : c_) {
            (void)v;
            d = std::max(d, k.first);
        }
        return d;
    }

    void add_term(int dx, int dy, const RatFunc& co) {
        if (co.is_zero()) return;
        Key k{dx, dy};
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, co);
        } else {
            it->second += co;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, v);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.c_) r.add_term(k.first, k.second, -v);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [k, v] : a.c_) r.c_.emplace(k, -v);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) { *this = *this + o; return *this; }
    BiPoly& operator-=(const BiPoly& o) { *this = *this - o; return *this; }
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }
    BiPoly scaled(const RatFunc& s) const {
        BiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [k, v] : c_) r.c_.emplace(k, v * s);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    RatFunc eval(const RatFunc& xv, const RatFunc& yv) const {
        // Horner in x with y-polynomial coefficients
        int dx = x_degree();
        RatFunc out;
        for (int i = dx; i >= 0; --i) {
            RatFunc row;
            // y-Horner for fixed x-degree i
            int dy = -1;
            for (const auto& [k, v] : c_) {
                (void)v;
                if (k.first == i) dy = std::max(dy, k.second);
            }
            for (int j = dy; j >= 0; --j) row = row * yv + coeff(i, j);
            out = out * xv + row;
        }
        return out;
    }

    // Exact division by lex-leading-term elimination (x > y). Throws if inexact.
    static BiPoly divexact(const BiPoly& a, const BiPoly& b);

private:
    std::map<Key, RatFunc> c_;
};

inline BiPoly BiPoly::divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("BiPoly: division by zero");
    auto lex_lead = [](const BiPoly& p) -> const std::pair<const Key, RatFunc>& {
        // std::map with pair keys is already lex-ordered; leading = last
        return *p.c_.rbegin();
    };
    BiPoly rem = a, quo;
    const auto& lb = lex_lead(b);
    while (!rem.is_zero()) {
        const auto& lr = *rem.c_.rbegin();
        int dx = lr.first.first - lb.first.first;
        int dy = lr.first.second - lb.first.second;
        if (dx < 0 || dy < 0) throw std::logic_error("BiPoly: inexact division");
        RatFunc f = lr.second / lb.second;
        quo.add_term(dx, dy, f);
        BiPoly t;
        t.c_.emplace(Key{dx, dy}, f);
        rem = rem - t * b;
    }
    return quo;
}

// g_0 = x - y;  g_s = (x - y - Delta(s))(x - y - Delta(-s)) - (s^2/kappa) y.
inline BiPoly g_poly(int s) {
    if (s < 0) throw std::invalid_argument("g_poly: s must be nonnegative");
    BiPoly xy = BiPoly::x() - BiPoly::y();
    if (s == 0) return xy;
    BiPoly lhs = (xy - BiPoly(delta(s))) * (xy - BiPoly(delta(-s)));
    RatFunc s2k = RatFunc(Rat(static_cast<long>(s) * s)) * RatFunc::kappa_inv();
    return lhs - BiPoly::y().scaled(s2k);
}

// f_n from the explicit composition sum of the Zhu-image of S_{1,n+1}.
inline BiPoly f_poly(int n) {
    if (n < 0) throw std::invalid_argument("f_poly: n must be nonnegative");
    RatFunc dn = delta(n);
    Rat nfact2(1);
    for (long i = 2; i <= n; ++i) nfact2 *= Rat(i);
    nfact2 *= nfact2;
    BiPoly out;
    for (const auto& comp : compositions(n + 1)) {
        int r = static_cast<int>(comp.size());
        Rat denom(1);
        long prefix = 0;
        long total = n + 1;
        for (int i = 0; i + 1 < r; ++i) {
            prefix += comp[static_cast<size_t>(i)];
            denom *= Rat(prefix) * Rat(total - prefix);
        }
        // kappa^{-n-1+r}
        RatFunc coeff(nfact2 / denom);
        for (int e = 0; e < n + 1 - r; ++e) coeff *= RatFunc::kappa_inv();
        BiPoly prod(RatFunc::one());
        long suffix = total;
        for (int j = 0; j < r; ++j) {
            suffix -= comp[static_cast<size_t>(j)];
            // x - p_j y - (p_{j+1}+...+p_r) - Delta(n)
            BiPoly factor = BiPoly::x() - BiPoly::y().scaled(RatFunc(Rat(comp[static_cast<size_t>(j)]))) -
                            BiPoly(RatFunc(Rat(suffix)) + dn);
            prod *= factor;
        }
        out += prod.scaled(coeff);
    }
    return out;
}

// f_{2k} = g_0 g_2 ... g_{2k}  and  f_{2k+1} = g_1 g_3 ... g_{2k+1}.
inline bool factorization_check(int k) {
    BiPoly even(RatFunc::one()), odd(RatFunc::one());
    for (int s = 0; s <= 2 * k; s += 2) even *= g_poly(s);
    for (int s = 1; s <= 2 * k + 1; s += 2) odd *= g_poly(s);
    return f_poly(2 * k) == even && f_poly(2 * k + 1) == odd;
}

// The (n+1)x(n+1) matrix A_n whose determinant realizes f_n:
//   A[i][j] = t - (j-i) y - (n-j+1)   for j >= i   (t = x - y - Delta(n)),
//   A[j+1][j] = -j(n+1-j)/kappa, zero below the subdiagonal (1-based indices).
inline std::vector<std::vector<BiPoly>> zhu_matrix(int n) {
    BiPoly t = BiPoly::x() - BiPoly::y() - BiPoly(delta(n));
    int dim = n + 1;
    std::vector<std::vector<BiPoly>> a(static_cast<size_t>(dim),
                                       std::vector<BiPoly>(static_cast<size_t>(dim)));
    for (int i = 1; i <= dim; ++i) {
        for (int j = 1; j <= dim; ++j) {
            if (j >= i) {
                a[i - 1][j - 1] = t - BiPoly::y().scaled(RatFunc(Rat(j - i))) -
                                  BiPoly(RatFunc(Rat(n - j + 1)));
            } else if (j == i - 1) {
                RatFunc co = RatFunc(Rat(-static_cast<long>(j) * (n + 1 - j))) * RatFunc::kappa_inv();
                a[i - 1][j - 1] = BiPoly(co);
            }
        }
    }
    return a;
}

// Fraction-free (Bareiss) determinant over BiPoly.
inline BiPoly det_An(int n, int bound = 6) {
    if (n > bound) throw std::domain_error("desk-scale limit");
    auto m = zhu_matrix(n);
    int dim = n + 1;
    BiPoly prev(RatFunc::one());
    for (int k = 0; k < dim - 1; ++k) {
        if (m[k][k].is_zero()) throw std::logic_error("det_An: zero pivot");
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                BiPoly numd = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = BiPoly::divexact(numd, prev);
            }
            m[i][k] = BiPoly();
        }
        prev = m[k][k];
    }
    return m[dim - 1][dim - 1];
}

// Parity plus triangle condition of the fusion Proposition.
inline bool fusion_admissible(int k1, int k2, int k3) {
    if ((k1 + k2 + k3) % 2 != 0) return false;
    return std::abs(k1 - k2) <= k3 && k3 <= k1 + k2;
}

namespace detail {
inline const BiPoly& f_poly_cached(int n) {
    static std::mutex mu;
    static std::map<int, BiPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, f_poly(n)).first;
    return it->second;
}
}  // namespace detail

// Vanishing conditions: all three f-evaluations are zero.
inline bool fusion_vanishing_check(int k1, int k2, int k3) {
    const RatFunc d1 = delta(k1), d2 = delta(k2), d3 = delta(k3);
    return detail::f_poly_cached(k1).eval(d2, d3).is_zero() &&
           detail::f_poly_cached(k2).eval(d1, d3).is_zero() &&
           detail::f_poly_cached(k3).eval(d1, d2).is_zero();
}

}  // namespace vir26
