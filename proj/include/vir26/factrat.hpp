#pragma once

// A second representation of Q(kappa) used by the series pipelines: numerator
// polynomial over a denominator kept as a multiset of linear factors
// (c0 + c1*kappa). Every denominator this library ever divides by is a product
// of such factors, so lcm and cancellation are multiset operations and the
// hot loops never call a polynomial gcd. Fractions are not kept reduced;
// is_zero is just a numerator test, and conversion back to canonical RatFunc
// happens only at module boundaries.

#include "vir26/ratfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vir26 {

// c0 + c1*kappa with c1 >= 1 and gcd(|c0|, c1) = 1.
struct LinFactor {
    long c0 = 0;
    long c1 = 1;
    friend bool operator==(const LinFactor& a, const LinFactor& b) {
        return a.c0 == b.c0 && a.c1 == b.c1;
    }
    friend bool operator<(const LinFactor& a, const LinFactor& b) {
        return a.c1 != b.c1 ? a.c1 < b.c1 : a.c0 < b.c0;
    }
    KPoly poly() const { return KPoly(Rat(1), {Int(c0), Int(c1)}); }
};

class FactRat {
public:
    FactRat() = default;
    explicit FactRat(KPoly num) : num_(std::move(num)) {}
    FactRat(Rat c) : num_(std::move(c)) {}  // NOLINT
    FactRat(long c) : num_(Rat(c)) {}       // NOLINT

    static FactRat zero() { return FactRat(); }
    static FactRat one() { return FactRat(1); }
    static FactRat from_long(long x) { return FactRat(x); }
    static FactRat kappa() { return FactRat(KPoly::kappa()); }

    bool is_zero() const { return num_.is_zero(); }
    const KPoly& num() const { return num_; }
    const std::vector<std::pair<LinFactor, int>>& den() const { return den_; }

    friend FactRat operator-(const FactRat& a) {
        FactRat r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend FactRat operator*(const FactRat& a, const FactRat& b) {
        if (a.is_zero() || b.is_zero()) return FactRat();
        FactRat r;
        r.num_ = a.num_ * b.num_;
        r.den_ = merge_sum(a.den_, b.den_);
        return r;
    }

    friend FactRat operator+(const FactRat& a, const FactRat& b) { return combine(a, b, false); }
    friend FactRat operator-(const FactRat& a, const FactRat& b) { return combine(a, b, true); }

    friend FactRat operator/(const FactRat& a, const FactRat& b) {
        if (b.is_zero()) throw std::domain_error("zero divisor");
        if (a.is_zero()) return FactRat();
        FactRat r;
        r.num_ = a.num_;
        r.den_ = a.den_;
        // numerator of a gains b's denominator factors
        for (const auto& [f, m] : b.den_) {
            for (int i = 0; i < m; ++i) r.num_ = r.num_ * f.poly();
        }
        // b's numerator must factor into linears (rational roots)
        auto [factors, scalar] = factor_linear(b.num_);
        r.num_ = r.num_.scaled(scalar.inv());
        for (const auto& f : factors) r.append_den(f);
        return r;
    }

    FactRat& operator+=(const FactRat& o) { *this = *this + o; return *this; }
    FactRat& operator-=(const FactRat& o) { *this = *this - o; return *this; }
    FactRat& operator*=(const FactRat& o) { *this = *this * o; return *this; }
    FactRat& operator/=(const FactRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const FactRat& a, const FactRat& b) {
        if (a.is_zero()) return b.is_zero();
        if (b.is_zero()) return false;
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return (a - b).is_zero();
    }
    friend bool operator!=(const FactRat& a, const FactRat& b) { return !(a == b); }

    RatFunc to_ratfunc() const {
        if (is_zero()) return RatFunc();
        KPoly d(Rat(1));
        for (const auto& [f, m] : den_)
            for (int i = 0; i < m; ++i) d = d * f.poly();
        return RatFunc(num_, d);
    }

    static FactRat from_ratfunc(const RatFunc& v) {
        if (v.is_zero()) return FactRat();
        FactRat r;
        r.num_ = v.num();
        auto [factors, scalar] = factor_linear(v.den());
        r.num_ = r.num_.scaled(scalar.inv());
        for (const auto& f : factors) r.append_den(f);
        return r;
    }

    // Split a polynomial into linear factors (c0 + c1 k) and a rational scalar.
    // Throws if an irreducible part of degree >= 2 remains.
    static std::pair<std::vector<LinFactor>, Rat> factor_linear(const KPoly& p) {
        if (p.is_zero()) throw std::domain_error("factor_linear: zero polynomial");
        std::vector<LinFactor> out;
        std::vector<Int> cur = p.primitive();
        Rat scalar = p.scale();
        while (cur.size() > 1) {
            // strip kappa^v
            size_t v = 0;
            while (v < cur.size() && cur[v].is_zero()) ++v;
            if (v > 0) {
                for (size_t i = 0; i < v; ++i) out.push_back(LinFactor{0, 1});
                cur.erase(cur.begin(), cur.begin() + static_cast<long>(v));
                continue;
            }
            if (cur.size() == 2) {
                long c0 = to_long(cur[0]), c1 = to_long(cur[1]);
                out.push_back(normalize(c0, c1, scalar));
                cur = {Int(1)};
                continue;
            }
            // rational root candidates p/q: p | cur[0], q | cur.back()
            bool found = false;
            for (long q : divisors(cur.back())) {
                for (long pd : divisors(cur[0])) {
                    for (int sg = 0; sg < 2 && !found; ++sg) {
                        long pp = sg ? -pd : pd;
                        // test factor (q*k + ... ) root k = -pp/q -> factor pp... the
                        // linear factor with root -c0/c1 dividing cur is (c0 + c1 k)
                        // with c0 = pp, c1 = q; test by synthetic division
                        std::vector<Int> quo;
                        if (try_divide_linear(cur, pp, q, quo)) {
                            out.push_back(normalize(pp, q, scalar));
                            cur = std::move(quo);
                            found = true;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (!found) throw std::domain_error("factor_linear: irreducible denominator");
        }
        scalar = scalar * Rat(cur[0]);
        return {std::move(out), std::move(scalar)};
    }

private:
    static long to_long(const Int& v) {
        return std::stol(v.str());
    }
    static LinFactor normalize(long c0, long c1, Rat& scalar) {
        if (c1 < 0) {
            c0 = -c0;
            c1 = -c1;
            scalar = -scalar;
        }
        long g = std::gcd(std::abs(c0), c1);
        if (g > 1) {
            c0 /= g;
            c1 /= g;
            scalar = scalar * Rat(g);
        }
        return LinFactor{c0, c1};
    }
    static std::vector<long> divisors(const Int& v) {
        long a = std::labs(to_long(v));
        std::vector<long> out;
        for (long d = 1; d * d <= a; ++d) {
            if (a % d == 0) {
                out.push_back(d);
                if (d != a / d) out.push_back(a / d);
            }
        }
        return out;
    }
    // divide by (c0 + c1 k) exactly if possible
    static bool try_divide_linear(const std::vector<Int>& v, long c0, long c1,
                                  std::vector<Int>& quo) {
        // synthetic division from the top: v = (c0 + c1 k) * q + r
        const Int C0(c0), C1(c1);
        std::vector<Int> q(v.size() - 1);
        Int carry = v.back();
        for (size_t i = v.size() - 1; i-- > 0;) {
            if (!(carry % C1).is_zero()) return false;
            Int qi = Int::exact_div(carry, C1);
            q[i] = qi;
            carry = v[i] - qi * C0;
        }
        if (!carry.is_zero()) return false;
        quo = std::move(q);
        return true;
    }

    void append_den(const LinFactor& f) {
        // cheap cancellation: divide the numerator instead when it has this root
        std::vector<Int> quo;
        if (!num_.is_zero() && try_divide_linear(num_.primitive(), f.c0, f.c1, quo)) {
            Int content;
            detail::int_poly_make_primitive(quo, &content);
            Rat s = num_.scale();
            if (!content.is_zero()) s = s * Rat(content);
            num_ = quo.empty() ? KPoly() : KPoly(s, std::move(quo));
            return;
        }
        auto it = std::lower_bound(den_.begin(), den_.end(), f,
                                   [](const auto& e, const LinFactor& x) { return e.first < x; });
        if (it != den_.end() && it->first == f) {
            ++it->second;
        } else {
            den_.insert(it, {f, 1});
        }
    }

    static std::vector<std::pair<LinFactor, int>> merge_sum(
        const std::vector<std::pair<LinFactor, int>>& a,
        const std::vector<std::pair<LinFactor, int>>& b) {
        std::vector<std::pair<LinFactor, int>> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first == b[j].first) {
                out.push_back({a[i].first, a[i].second + b[j].second});
                ++i;
                ++j;
            } else if (a[i].first < b[j].first) {
                out.push_back(a[i++]);
            } else {
                out.push_back(b[j++]);
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back(b[j]);
        return out;
    }

    static FactRat combine(const FactRat& a, const FactRat& b, bool neg) {
        if (a.is_zero()) return neg ? -b : b;
        if (b.is_zero()) return a;
        FactRat r;
        if (a.den_ == b.den_) {
            r.num_ = neg ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
        } else {
            // lcm = max multiplicity per factor; scale each numerator by what
            // its denominator is missing
            KPoly na = a.num_, nb = b.num_;
            std::vector<std::pair<LinFactor, int>> lcm;
            size_t i = 0, j = 0;
            auto push = [&](const LinFactor& f, int ma, int mb) {
                int m = std::max(ma, mb);
                lcm.push_back({f, m});
                for (int t = 0; t < m - ma; ++t) na = na * f.poly();
                for (int t = 0; t < m - mb; ++t) nb = nb * f.poly();
            };
            while (i < a.den_.size() && j < b.den_.size()) {
                if (a.den_[i].first == b.den_[j].first) {
                    push(a.den_[i].first, a.den_[i].second, b.den_[j].second);
                    ++i;
                    ++j;
                } else if (a.den_[i].first < b.den_[j].first) {
                    push(a.den_[i].first, a.den_[i].second, 0);
                    ++i;
                } else {
                    push(b.den_[j].first, 0, b.den_[j].second);
                    ++j;
                }
            }
            for (; i < a.den_.size(); ++i) push(a.den_[i].first, a.den_[i].second, 0);
            for (; j < b.den_.size(); ++j) push(b.den_[j].first, 0, b.den_[j].second);
            r.num_ = neg ? na - nb : na + nb;
            r.den_ = std::move(lcm);
        }
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    KPoly num_;
    std::vector<std::pair<LinFactor, int>> den_;  // sorted by factor
};

// Conversion points between the canonical field and the pipeline field.
template <typename K>
struct FieldOf {
    static K from(const RatFunc& v);
    static RatFunc to(const K& v);
};
template <>
struct FieldOf<RatFunc> {
    static RatFunc from(const RatFunc& v) { return v; }
    static RatFunc to(const RatFunc& v) { return v; }
};
template <>
struct FieldOf<FactRat> {
    static FactRat from(const RatFunc& v) { return FactRat::from_ratfunc(v); }
    static RatFunc to(const FactRat& v) { return v.to_ratfunc(); }
};

}  // namespace vir26
