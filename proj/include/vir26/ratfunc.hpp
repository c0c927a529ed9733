#pragma once

// The field Q(kappa): reduced ratios of KPoly with monic denominator.
// Canonical form makes equality representational, so every identity check
// in the library reduces to "is the numerator zero".

#include "vir26/poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace vir26 {

class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) {}  // NOLINT: implicit constant
    RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}       // NOLINT
    RatFunc(KPoly p) : num_(std::move(p)), den_(Rat(1)) {}  // NOLINT
    RatFunc(KPoly num, KPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc kappa() { return RatFunc(KPoly::kappa()); }
    static RatFunc kappa_inv() { return RatFunc(KPoly(Rat(1)), KPoly::kappa()); }
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc from_long(long x) { return RatFunc(x); }

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            KPoly n = a.num_ + b.num_;
            if (n.is_zero()) return RatFunc();
            if (a.den_.is_constant()) return RatFunc(std::move(n));  // den is 1
            KPoly g = KPoly::gcd(n, a.den_);
            if (g.is_constant()) return RatFunc(std::move(n), a.den_, monic_tag{});
            return RatFunc(KPoly::divexact(n, g), KPoly::divexact(a.den_, g), monic_tag{});
        }
        KPoly g = KPoly::gcd(a.den_, b.den_);
        if (g.is_constant()) {
            return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, monic_tag{});
        }
        KPoly da = KPoly::divexact(a.den_, g);
        KPoly db = KPoly::divexact(b.den_, g);
        KPoly n = a.num_ * db + b.num_ * da;
        if (n.is_zero()) return RatFunc();
        // numerator is coprime to da*db, so only g can cancel
        KPoly g2 = KPoly::gcd(n, g);
        KPoly den = a.den_ * db;
        if (!g2.is_constant()) {
            n = KPoly::divexact(n, g2);
            den = KPoly::divexact(den, g2);
        }
        return RatFunc(std::move(n), std::move(den), monic_tag{});
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        const bool skip1 = a.num_.is_constant() || b.den_.is_constant();
        const bool skip2 = b.num_.is_constant() || a.den_.is_constant();
        if (skip1 && skip2) {
            return RatFunc(a.num_ * b.num_, a.den_ * b.den_, monic_tag{});
        }
        KPoly g1 = skip1 ? KPoly(Rat(1)) : KPoly::gcd(a.num_, b.den_);
        KPoly g2 = skip2 ? KPoly(Rat(1)) : KPoly::gcd(b.num_, a.den_);
        KPoly n = (g1.is_constant() ? a.num_ : KPoly::divexact(a.num_, g1)) *
                  (g2.is_constant() ? b.num_ : KPoly::divexact(b.num_, g2));
        KPoly d = (g2.is_constant() ? a.den_ : KPoly::divexact(a.den_, g2)) *
                  (g1.is_constant() ? b.den_ : KPoly::divexact(b.den_, g1));
        return RatFunc(std::move(n), std::move(d), monic_tag{});
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("zero divisor");
        if (a.is_zero()) return RatFunc();
        return a * b.inv();
    }
    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("zero divisor");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        Rat lead = r.den_.leading();
        if (!lead.is_one()) {
            Rat li = lead.inv();
            r.num_ = r.num_.scaled(li);
            r.den_ = r.den_.scaled(li);
        }
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend RatFunc operator*(const Rat& s, const RatFunc& a) {
        RatFunc r;
        if (s.is_zero()) return r;
        r.num_ = a.num_.scaled(s);
        r.den_ = a.den_;
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // kappa -> -kappa (the c <-> c-bar involution)
    RatFunc bar() const {
        RatFunc r;
        r.num_ = num_.flip_sign_var();
        r.den_ = den_.flip_sign_var();
        Rat lead = r.den_.leading();
        if (!lead.is_one()) {
            Rat li = lead.inv();
            r.num_ = r.num_.scaled(li);
            r.den_ = r.den_.scaled(li);
        }
        return r;
    }

    // Evaluate at a rational kappa value; the caller must avoid denominator roots.
    Rat eval(const Rat& kappa_value) const {
        Rat d = den_.eval(kappa_value);
        if (d.is_zero()) throw std::domain_error("RatFunc::eval: denominator root");
        return num_.eval(kappa_value) / d;
    }

    // Canonical text form: expanded integer-coefficient num / den.
    std::string str(const std::string& var = "k") const;

private:
    struct monic_tag {};  // inputs already coprime, only normalize the leading coeff
    RatFunc(KPoly n, KPoly d, monic_tag) : num_(std::move(n)), den_(std::move(d)) {
        make_monic();
    }
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero divisor");
        if (num_.is_zero()) {
            den_ = KPoly(Rat(1));
            return;
        }
        KPoly g = KPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = KPoly::divexact(num_, g);
            den_ = KPoly::divexact(den_, g);
        }
        make_monic();
    }
    void make_monic() {
        if (num_.is_zero()) {
            den_ = KPoly(Rat(1));
            return;
        }
        Rat lead = den_.leading();
        if (!lead.is_one()) {
            Rat li = lead.inv();
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    KPoly num_;
    KPoly den_;
};

inline std::string RatFunc::str(const std::string& var) const {
    if (is_zero()) return "0";
    // fold the rational scalars into integer num/den content
    Rat scale = num_.scale() / den_.scale();  // value = scale * prim(num)/prim(den)
    KPoly n(Rat(scale.num()), num_.primitive());
    KPoly d(Rat(scale.den()), den_.primitive());
    if (d.is_constant() && d.constant().is_one()) return n.str(var);
    std::string out = (n.degree() > 0 ? "(" + n.str(var) + ")" : n.str(var));
    out += " / ";
    out += (d.degree() > 0) ? "(" + d.str(var) + ")" : d.str(var);
    return out;
}

}  // namespace vir26
