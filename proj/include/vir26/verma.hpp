#pragma once

// Verma module M(h,c) over the Virasoro algebra with exact straightening into
// the normal-ordered PBW basis L_{-p1}...L_{-pr} v (p1 >= ... >= pr >= 1), and
// the explicit degree-(n+1) singular vectors S_{1,n+1} v.

#include "vir26/weights.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vir26 {

// Normal-ordered word of lowering operators, nonincreasing parts.
struct LoweringMonomial {
    std::vector<int> parts;

    long degree() const { return std::accumulate(parts.begin(), parts.end(), 0L); }
    bool operator<(const LoweringMonomial& o) const { return parts < o.parts; }
    bool operator==(const LoweringMonomial& o) const { return parts == o.parts; }

    std::string str() const {
        if (parts.empty()) return "v";
        std::string s;
        for (int p : parts) s += "L(-" + std::to_string(p) + ")";
        return s + "v";
    }
};

// Ordered compositions of n into positive parts, lexicographic.
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

class VirVector {
public:
    VirVector(RatFunc h, RatFunc c) : h_(std::move(h)), c_(std::move(c)) {}

    static VirVector highest_weight(RatFunc h, RatFunc c) {
        VirVector v(std::move(h), std::move(c));
        v.terms_[LoweringMonomial{}] = RatFunc::one();
        return v;
    }

    const RatFunc& h() const { return h_; }
    const RatFunc& c() const { return c_; }
    const std::map<LoweringMonomial, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LoweringMonomial& m, const RatFunc& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_scaled(const VirVector& v, const RatFunc& s) {
        if (s.is_zero()) return;
        for (const auto& [m, co] : v.terms_) add_term(m, co * s);
    }

    friend VirVector operator+(const VirVector& a, const VirVector& b) {
        VirVector r = a;
        r.add_scaled(b, RatFunc::one());
        return r;
    }
    friend VirVector operator-(const VirVector& a, const VirVector& b) {
        VirVector r = a;
        r.add_scaled(b, RatFunc(-1));
        return r;
    }
    VirVector scaled(const RatFunc& s) const {
        VirVector r(h_, c_);
        r.add_scaled(*this, s);
        return r;
    }
    friend bool operator==(const VirVector& a, const VirVector& b) {
        return a.terms_ == b.terms_;
    }

    bool homogeneous(long* deg_out = nullptr) const {
        long d = -1;
        for (const auto& [m, co] : terms_) {
            (void)co;
            if (d == -1) {
                d = m.degree();
            } else if (m.degree() != d) {
                return false;
            }
        }
        if (deg_out) *deg_out = d;
        return true;
    }

    // Act by L_m (any integer m) and re-express in the normal-ordered basis.
    VirVector apply_generator(int m) const {
        VirVector out(h_, c_);
        for (const auto& [mono, coeff] : terms_) {
            VirVector part = apply_to_monomial(m, mono.parts, 0);
            out.add_scaled(part, coeff);
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, co] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + co.str() + ")*" + m.str();
        }
        return s;
    }

private:
    // L_j applied to parts[from..] acting on the highest-weight vector.
    VirVector apply_to_monomial(int j, const std::vector<int>& parts, size_t from) const {
        VirVector out(h_, c_);
        if (from == parts.size()) {
            if (j > 0) return out;  // annihilates the highest-weight vector
            if (j == 0) {
                out.add_term(LoweringMonomial{}, h_);
                return out;
            }
            out.add_term(LoweringMonomial{{-j}}, RatFunc::one());
            return out;
        }
        int p = parts[from];
        if (j < 0 && -j >= p) {  // already in normal order: prepend
            LoweringMonomial m;
            m.parts.reserve(parts.size() - from + 1);
            m.parts.push_back(-j);
            m.parts.insert(m.parts.end(), parts.begin() + static_cast<long>(from), parts.end());
            out.add_term(m, RatFunc::one());
            return out;
        }
        // L_j L_{-p} = L_{-p} L_j + (j+p) L_{j-p} + delta_{j,p} (j^3-j)/12 c
        VirVector inner = apply_to_monomial(j, parts, from + 1);
        for (const auto& [m2, co2] : inner.terms_) {
            VirVector lifted = apply_to_monomial(-p, m2.parts, 0);
            out.add_scaled(lifted, co2);
        }
        VirVector tail = apply_to_monomial(j - p, parts, from + 1);
        out.add_scaled(tail, RatFunc(Rat(j + p)));
        if (j == p) {
            long jl = j;
            Rat central(jl * jl * jl - jl, 12);
            VirVector rest(h_, c_);
            LoweringMonomial m;
            m.parts.assign(parts.begin() + static_cast<long>(from) + 1, parts.end());
            rest.add_term(m, RatFunc::one());
            out.add_scaled(rest, Rat(central) * c_);
        }
        return out;
    }

    RatFunc h_;
    RatFunc c_;
    std::map<LoweringMonomial, RatFunc> terms_;
};

// S_{1,n+1} v_{Delta(n),c}: sum over compositions n+1 = p1+...+pr of
//   n!^2 / prod_{i<r} (p1+...+pi)(p_{i+1}+...+pr) * (-1/kappa)^{n+1-r} L_{-p1}...L_{-pr} v,
// straightened into the normal-ordered basis.
inline VirVector singular_vector(int n) {
    if (n < 0) throw std::invalid_argument("singular_vector: n must be nonnegative");
    RatFunc h = delta(n);
    RatFunc c = central_charge();
    VirVector out(h, c);
    Rat nfact2(1);
    for (long i = 2; i <= n; ++i) nfact2 *= Rat(i);
    nfact2 *= nfact2;
    RatFunc minus_kinv = -RatFunc::kappa_inv();
    for (const auto& comp : compositions(n + 1)) {
        int r = static_cast<int>(comp.size());
        Rat denom(1);
        long prefix = 0;
        long total = std::accumulate(comp.begin(), comp.end(), 0L);
        for (int i = 0; i + 1 < r; ++i) {
            prefix += comp[static_cast<size_t>(i)];
            denom *= Rat(prefix) * Rat(total - prefix);
        }
        RatFunc coeff(nfact2 / denom);
        for (int e = 0; e < n + 1 - r; ++e) coeff *= minus_kinv;
        // apply the word right-to-left to the highest-weight vector
        VirVector v = VirVector::highest_weight(h, c);
        for (int i = r - 1; i >= 0; --i) v = v.apply_generator(-comp[static_cast<size_t>(i)]);
        out.add_scaled(v, coeff);
    }
    return out;
}

// Singular means annihilated by L_+; L_1 and L_2 generate L_+.
inline bool is_singular(const VirVector& v) {
    if (!v.homogeneous()) throw std::invalid_argument("is_singular: non-homogeneous input");
    return v.apply_generator(1).is_zero() && v.apply_generator(2).is_zero();
}

// L_{q-1}(L_{-1}^k v1) = q! [ C(k,q-1) Delta(1) + C(k,q) ] L_{-1}^{k-q+1} v1,
// checked in the single Virasoro factor with h = Delta(1).
inline bool lemma_l1_check(int k, int q) {
    RatFunc h = delta(1);
    RatFunc c = central_charge();
    VirVector v = VirVector::highest_weight(h, c);
    for (int i = 0; i < k; ++i) v = v.apply_generator(-1);
    VirVector lhs = v.apply_generator(q - 1);

    Rat qfact(1);
    for (long i = 2; i <= q; ++i) qfact *= Rat(i);
    auto binom_ll = [](long n, long r) -> Rat {
        if (r < 0 || r > n) return Rat(0);
        return Rat(Int::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(r)));
    };
    RatFunc factor = Rat(qfact) * (RatFunc(binom_ll(k, q - 1)) * h + RatFunc(binom_ll(k, q)));
    VirVector rhs(h, c);
    if (k - q + 1 >= 0) {
        VirVector w = VirVector::highest_weight(h, c);
        for (int i = 0; i < k - q + 1; ++i) w = w.apply_generator(-1);
        rhs.add_scaled(w, factor);
    }
    return lhs == rhs;
}

}  // namespace vir26
