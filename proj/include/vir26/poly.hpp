#pragma once

// Dense univariate polynomials over Q in the parameter kappa, stored as a
// rational scalar times a primitive integer polynomial (positive leading
// coefficient). All inner loops (multiply, exact divide, gcd) then run on
// mpz only; scaling and monic normalization touch just the scalar.
// gcd is Brown-style modular: word-size prime images, CRT lift, division check.

#include "vir26/int.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vir26 {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    return powmod_u64(a % p, p - 2, p);
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Monic gcd of two polynomials mod p, coefficients in [0, p).
inline std::vector<std::uint64_t> gcd_modp(std::vector<std::uint64_t> a,
                                           std::vector<std::uint64_t> b, std::uint64_t p) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::uint64_t lb_inv = invmod_u64(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t f = mulmod_u64(a.back(), lb_inv, p);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = mulmod_u64(f, b[i], p);
                std::uint64_t& tgt = a[off + i];
                tgt = (tgt >= sub) ? tgt - sub : tgt + (p - sub);
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (a.empty()) return a;
    std::uint64_t la_inv = invmod_u64(a.back(), p);
    for (auto& x : a) x = mulmod_u64(x, la_inv, p);
    return a;
}

// Exact division of integer-coefficient polynomials; returns false if inexact.
inline bool int_poly_divides(const std::vector<Int>& num, const std::vector<Int>& den,
                             std::vector<Int>* quotient = nullptr) {
    if (den.empty()) return false;
    if (num.empty()) {
        if (quotient) quotient->clear();
        return true;
    }
    if (num.size() < den.size()) return false;
    std::vector<Int> rem = num;
    const size_t dq = num.size() - den.size();
    std::vector<Int> quo(dq + 1);
    const Int& ld = den.back();
    for (size_t k = dq + 1; k-- > 0;) {
        Int& top = rem[k + den.size() - 1];
        if (top.is_zero()) continue;
        if (!(top % ld).is_zero()) return false;
        Int f = Int::exact_div(top, ld);
        for (size_t j = 0; j < den.size(); ++j) rem[k + j].submul(f, den[j]);
        quo[k] = std::move(f);
    }
    for (const auto& x : rem)
        if (!x.is_zero()) return false;
    if (quotient) *quotient = std::move(quo);
    return true;
}

// Divide by content and force a positive leading coefficient.
inline void int_poly_make_primitive(std::vector<Int>& v, Int* content_out = nullptr) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    if (v.empty()) {
        if (content_out) *content_out = Int(0);
        return;
    }
    Int g(0);
    for (const auto& x : v) {
        g = Int::gcd(g, x);
        if (g.is_one()) break;
    }
    if (v.back().sign() < 0) g = -g;
    if (!g.is_one()) {
        for (auto& x : v) x = Int::exact_div(x, g);
    }
    if (content_out) *content_out = std::move(g);
}

inline const std::vector<std::uint64_t>& prime_table() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> t;
        t.reserve(512);
        std::uint64_t p = (1ull << 62);
        while (t.size() < 512) {
            do { --p; } while (!is_prime_u64(p));
            t.push_back(p);
        }
        return t;
    }();
    return table;
}

// Primitive gcd of primitive integer polynomials (Brown's modular algorithm).
inline std::vector<Int> int_poly_gcd(const std::vector<Int>& a0, const std::vector<Int>& b0) {
    if (a0.empty()) return b0;
    if (b0.empty()) return a0;
    if (a0.size() == 1 || b0.size() == 1) return {Int(1)};
    if (a0 == b0) return a0;
    const std::vector<Int>* pa = &a0;
    const std::vector<Int>* pb = &b0;
    if (pa->size() < pb->size()) std::swap(pa, pb);
    const std::vector<Int>& az = *pa;
    const std::vector<Int>& bz = *pb;
    if (bz.size() == 2) {  // linear: divides or coprime
        if (int_poly_divides(az, bz)) return bz;
        return {Int(1)};
    }

    const Int lc_gcd = Int::gcd(az.back(), bz.back());

    std::vector<Int> cand;
    Int modulus(1);
    long cand_deg = -1;
    bool stable = false;

    const auto& primes = prime_table();
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        std::uint64_t p = primes[pi];
        if (az.back().mod_u64(p) == 0 || bz.back().mod_u64(p) == 0) continue;

        std::vector<std::uint64_t> ap(az.size()), bp(bz.size());
        for (size_t i = 0; i < az.size(); ++i) ap[i] = az[i].mod_u64(p);
        for (size_t i = 0; i < bz.size(); ++i) bp[i] = bz[i].mod_u64(p);
        std::vector<std::uint64_t> gp = gcd_modp(std::move(ap), std::move(bp), p);
        long dgp = static_cast<long>(gp.size()) - 1;
        if (dgp == 0) return {Int(1)};
        if (cand_deg != -1 && dgp > cand_deg) continue;  // unlucky prime

        std::uint64_t lcp = lc_gcd.mod_u64(p);
        for (auto& x : gp) x = mulmod_u64(x, lcp, p);

        const Int ip = Int::from_u64(p);
        if (cand_deg == -1 || dgp < cand_deg) {
            cand.assign(gp.size(), Int(0));
            for (size_t i = 0; i < gp.size(); ++i)
                cand[i] = (gp[i] > p / 2) ? -Int::from_u64(p - gp[i]) : Int::from_u64(gp[i]);
            modulus = ip;
            cand_deg = dgp;
            stable = false;
        } else {
            std::uint64_t minv = invmod_u64(modulus.mod_u64(p), p);
            bool changed = false;
            Int new_mod = modulus * ip;
            Int half = new_mod / Int(2);
            for (size_t i = 0; i < cand.size(); ++i) {
                std::uint64_t ci = cand[i].mod_u64(p);
                std::uint64_t dv = (gp[i] >= ci) ? gp[i] - ci : gp[i] + (p - ci);
                std::uint64_t t = mulmod_u64(dv, minv, p);
                if (t != 0) {
                    cand[i] += modulus * Int::from_u64(t);
                    changed = true;
                }
                if (half < cand[i]) cand[i] -= new_mod;
            }
            modulus = std::move(new_mod);
            stable = !changed;
        }

        if (stable) {
            std::vector<Int> pp = cand;
            int_poly_make_primitive(pp);
            if (int_poly_divides(az, pp) && int_poly_divides(bz, pp)) return pp;
        }
    }
    throw std::logic_error("int_poly_gcd: modular reconstruction failed");
}

}  // namespace detail

class KPoly {
public:
    KPoly() = default;
    KPoly(Rat c) {  // NOLINT: implicit constant
        if (!c.is_zero()) {
            scale_ = std::move(c);
            p_.push_back(Int(1));
        }
    }
    explicit KPoly(const std::vector<Rat>& coeffs) {
        Int den_lcm(1);
        for (const auto& c : coeffs)
            if (!c.is_zero()) den_lcm = Int::lcm(den_lcm, c.den());
        p_.resize(coeffs.size());
        Rat up(den_lcm, Int(1));
        for (size_t i = 0; i < coeffs.size(); ++i) p_[i] = (coeffs[i] * up).num();
        Int content;
        detail::int_poly_make_primitive(p_, &content);
        if (p_.empty()) {
            scale_ = Rat(0);
        } else {
            scale_ = Rat(content, den_lcm);
        }
    }
    KPoly(Rat scale, std::vector<Int> prim) : scale_(std::move(scale)), p_(std::move(prim)) {
        if (scale_.is_zero() || p_.empty()) {
            scale_ = Rat(0);
            p_.clear();
        }
    }

    static KPoly kappa() { return KPoly(Rat(1), {Int(0), Int(1)}); }
    static KPoly monomial(long deg, Rat coeff) {
        if (coeff.is_zero()) return KPoly();
        std::vector<Int> v(static_cast<size_t>(deg) + 1);
        v.back() = Int(1);
        return KPoly(std::move(coeff), std::move(v));
    }

    bool is_zero() const { return p_.empty(); }
    long degree() const { return static_cast<long>(p_.size()) - 1; }  // -1 for zero poly
    Rat leading() const { return p_.empty() ? Rat(0) : scale_ * Rat(p_.back()); }
    Rat coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(p_.size())) return Rat(0);
        return scale_ * Rat(p_[static_cast<size_t>(i)]);
    }
    bool is_constant() const { return p_.size() <= 1; }
    Rat constant() const { return coeff(0); }
    const Rat& scale() const { return scale_; }
    const std::vector<Int>& primitive() const { return p_; }

    friend KPoly operator+(const KPoly& a, const KPoly& b) { return combine(a, b, false); }
    friend KPoly operator-(const KPoly& a, const KPoly& b) { return combine(a, b, true); }
    friend KPoly operator-(const KPoly& a) {
        KPoly r = a;
        r.scale_ = -r.scale_;
        return r;
    }
    friend KPoly operator*(const KPoly& a, const KPoly& b) {
        if (a.is_zero() || b.is_zero()) return KPoly();
        std::vector<Int> r(a.p_.size() + b.p_.size() - 1);
        for (size_t i = 0; i < a.p_.size(); ++i) {
            if (a.p_[i].is_zero()) continue;
            for (size_t j = 0; j < b.p_.size(); ++j)
                if (!b.p_[j].is_zero()) r[i + j].addmul(a.p_[i], b.p_[j]);
        }
        // product of primitives is primitive (Gauss), leading sign stays positive
        return KPoly(a.scale_ * b.scale_, std::move(r));
    }
    KPoly& operator+=(const KPoly& o) { *this = *this + o; return *this; }
    KPoly& operator-=(const KPoly& o) { *this = *this - o; return *this; }
    KPoly& operator*=(const KPoly& o) { *this = *this * o; return *this; }

    KPoly scaled(const Rat& s) const {
        if (s.is_zero() || is_zero()) return KPoly();
        KPoly r = *this;
        r.scale_ *= s;
        return r;
    }

    friend bool operator==(const KPoly& a, const KPoly& b) {
        return a.scale_ == b.scale_ && a.p_ == b.p_;
    }
    friend bool operator!=(const KPoly& a, const KPoly& b) { return !(a == b); }

    Rat eval(const Rat& x) const {
        Rat r;
        for (size_t i = p_.size(); i-- > 0;) r = r * x + Rat(p_[i]);
        return r * scale_;
    }

    // kappa -> -kappa
    KPoly flip_sign_var() const {
        if (is_zero()) return KPoly();
        std::vector<Int> v = p_;
        for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
        Rat s = scale_;
        if (v.back().sign() < 0) {
            for (auto& x : v) x = -x;
            s = -s;
        }
        return KPoly(std::move(s), std::move(v));
    }

    // Exact division (throws if inexact).
    static KPoly divexact(const KPoly& a, const KPoly& b) {
        if (b.is_zero()) throw std::domain_error("KPoly: division by zero polynomial");
        if (a.is_zero()) return KPoly();
        std::vector<Int> q;
        if (!detail::int_poly_divides(a.p_, b.p_, &q))
            throw std::logic_error("KPoly: inexact division");
        // primitive / primitive with positive leads stays primitive, positive lead
        return KPoly(a.scale_ / b.scale_, std::move(q));
    }

    // Long division over Q.
    static void divrem(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);

    // Monic gcd over Q (1 for coprime inputs; gcd(0,b) = monic b).
    static KPoly gcd(const KPoly& a, const KPoly& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        std::vector<Int> g = detail::int_poly_gcd(a.p_, b.p_);
        Rat inv_lead(Int(1), g.back());
        return KPoly(std::move(inv_lead), std::move(g));
    }

    KPoly monic() const {
        if (is_zero()) return *this;
        KPoly r = *this;
        r.scale_ = Rat(Int(1), Int(1));
        if (!r.p_.back().is_one()) r.scale_ = Rat(Int(1), r.p_.back());
        return r;
    }

    // (primitive integer coefficients, rational scale); poly = scale * primitive.
    std::pair<std::vector<Int>, Rat> primitive_int() const { return {p_, scale_}; }

    std::string str(const std::string& var = "k") const;

private:
    static KPoly combine(const KPoly& a, const KPoly& b, bool negate_b) {
        if (a.is_zero()) return negate_b ? -b : b;
        if (b.is_zero()) return a;
        // a.scale*A + b.scale*B = (1/L) [ (a.scale*L) A + (b.scale*L) B ], L = lcm of dens
        Int L = Int::lcm(a.scale_.den(), b.scale_.den());
        Rat lr(L);
        Int ca = (a.scale_ * lr).num();
        Int cb = (b.scale_ * lr).num();
        if (negate_b) cb = -cb;
        std::vector<Int> v(std::max(a.p_.size(), b.p_.size()));
        for (size_t i = 0; i < a.p_.size(); ++i) v[i].addmul(ca, a.p_[i]);
        for (size_t i = 0; i < b.p_.size(); ++i) v[i].addmul(cb, b.p_[i]);
        Int content;
        detail::int_poly_make_primitive(v, &content);
        if (v.empty()) return KPoly();
        return KPoly(Rat(content, L), std::move(v));
    }

    Rat scale_;           // zero iff the polynomial is zero
    std::vector<Int> p_;  // primitive, positive leading coefficient; empty iff zero
};

inline void KPoly::divrem(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
    if (b.is_zero()) throw std::domain_error("KPoly: division by zero polynomial");
    long da = a.degree(), db = b.degree();
    if (da < db) {
        q = KPoly();
        r = a;
        return;
    }
    std::vector<Rat> rem(static_cast<size_t>(da) + 1);
    for (long i = 0; i <= da; ++i) rem[static_cast<size_t>(i)] = a.coeff(i);
    std::vector<Rat> quo(static_cast<size_t>(da - db) + 1);
    Rat lb_inv = b.leading().inv();
    for (long i = da; i >= db; --i) {
        Rat& top = rem[static_cast<size_t>(i)];
        if (top.is_zero()) continue;
        Rat f = top * lb_inv;
        quo[static_cast<size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= f * b.coeff(j);
    }
    q = KPoly(quo);
    r = KPoly(rem);
}

inline std::string KPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = p_.size(); i-- > 0;) {
        Rat c = scale_ * Rat(p_[i]);
        if (c.is_zero()) continue;
        Rat ac = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
        }
        bool unit = ac.is_one();
        if (i == 0) {
            out += ac.str();
        } else {
            if (!unit) out += ac.str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace vir26
