#pragma once

// Arbitrary-precision integers and rationals on top of GMP's C API.
// Rat is always canonical: gcd(|num|, den) = 1, den >= 1 (mpq invariant).

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace vir26 {

class Int {
public:
    Int() { mpz_init(v_); }
    Int(long x) { mpz_init_set_si(v_, x); }  // NOLINT: implicit by design
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("Int: bad decimal string '" + s + "'");
        }
    }
    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.v_, a.v_, b.v_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int& a) { Int r; mpz_neg(r.v_, a.v_); return r; }
    Int& operator+=(const Int& o) { mpz_add(v_, v_, o.v_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(v_, v_, o.v_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(v_, v_, o.v_); return *this; }
    void addmul(const Int& a, const Int& b) { mpz_addmul(v_, a.v_, b.v_); }
    void submul(const Int& a, const Int& b) { mpz_submul(v_, a.v_, b.v_); }

    // Truncated division; exact_div asserts divisibility.
    friend Int operator/(const Int& a, const Int& b) { Int r; mpz_tdiv_q(r.v_, a.v_, b.v_); return r; }
    friend Int operator%(const Int& a, const Int& b) { Int r; mpz_tdiv_r(r.v_, a.v_, b.v_); return r; }
    static Int exact_div(const Int& a, const Int& b) {
        Int r;
        mpz_divexact(r.v_, a.v_, b.v_);
        return r;
    }

    static Int gcd(const Int& a, const Int& b) { Int r; mpz_gcd(r.v_, a.v_, b.v_); return r; }
    static Int lcm(const Int& a, const Int& b) { Int r; mpz_lcm(r.v_, a.v_, b.v_); return r; }
    static Int pow(const Int& a, unsigned long e) { Int r; mpz_pow_ui(r.v_, a.v_, e); return r; }
    static Int factorial(unsigned long n) { Int r; mpz_fac_ui(r.v_, n); return r; }
    static Int binomial(const Int& n, unsigned long k) { Int r; mpz_bin_ui(r.v_, n.v_, k); return r; }
    static Int binomial(unsigned long n, unsigned long k) { Int r; mpz_bin_uiui(r.v_, n, k); return r; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) <= 0; }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_, 1) == 0; }
    int sign() const { return mpz_sgn(v_); }
    bool odd() const { return mpz_odd_p(v_) != 0; }
    Int abs() const { Int r; mpz_abs(r.v_, v_); return r; }

    bool fits_ulong() const { return mpz_fits_ulong_p(v_) != 0; }
    unsigned long to_ulong() const { return mpz_get_ui(v_); }
    static Int from_u64(std::uint64_t x) {
        Int r;
        mpz_set_ui(r.v_, static_cast<unsigned long>(x));
        return r;
    }

    // Residue in [0, m) for word-size modulus m.
    std::uint64_t mod_u64(std::uint64_t m) const {
        mpz_t mm, r;
        mpz_init_set_ui(mm, m);
        mpz_init(r);
        mpz_mod(r, v_, mm);
        std::uint64_t out = mpz_get_ui(r);
        mpz_clear(mm);
        mpz_clear(r);
        return out;
    }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    mpz_t v_;
};

class Rat {
public:
    Rat() { mpq_init(v_); }
    Rat(long x) {  // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, x, 1);
    }
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    explicit Rat(const Int& num) {
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
    }
    Rat(const Rat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rat() { mpq_clear(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.v_, a.v_, b.v_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.v_, a.v_, b.v_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.v_, a.v_, b.v_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.v_, a.v_); return r; }
    Rat& operator+=(const Rat& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_) < 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_ui(v_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(v_); }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r;
        mpq_inv(r.v_, v_);
        return r;
    }

    Int num() const { Int r; mpz_set(r.raw(), mpq_numref(v_)); return r; }
    Int den() const { Int r; mpz_set(r.raw(), mpq_denref(v_)); return r; }

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }
    static Rat from_long(long x) { return Rat(x); }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpq_t v_;
};

}  // namespace vir26
