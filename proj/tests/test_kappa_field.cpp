#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vir26/factrat.hpp"
#include "vir26/weights.hpp"

#include <vector>

using namespace vir26;

// deterministic generator for property tests
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
    RatFunc ratfunc() {
        std::vector<Rat> num, den;
        long dn = range(0, 3), dd = range(0, 2);
        for (long i = 0; i <= dn; ++i) num.push_back(Rat(range(-8, 8), range(1, 5)));
        for (long i = 0; i <= dd; ++i) den.push_back(Rat(range(-8, 8), range(1, 5)));
        KPoly n{num}, d{den};
        if (d.is_zero()) d = KPoly(Rat(1));
        if (n.is_zero()) n = KPoly(Rat(range(1, 5)));
        return RatFunc(n, d);
    }
};

TEST_CASE("Rat basics") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), std::domain_error);
    CHECK(Rat(-4, -6) == Rat(2, 3));
    CHECK(Rat(7).den().is_one());
}

TEST_CASE("RatFunc canonical arithmetic") {
    KPoly k = KPoly::kappa();
    RatFunc f(k * k - KPoly(Rat(1)), k - KPoly(Rat(1)));
    CHECK(f == RatFunc(k + KPoly(Rat(1))));  // gcd reduction
    CHECK(central_charge().eval(Rat(2)) == Rat(-2));
    CHECK((RatFunc::kappa_inv() * RatFunc::kappa()).is_one());
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(), std::domain_error);

    // canonical form: monic denominator, coprime, representational equality
    RatFunc g(KPoly(Rat(2)) * k, KPoly(Rat(4)) * (k + KPoly(Rat(3))));
    CHECK(g.den().leading().is_one());
    CHECK(KPoly::gcd(g.num(), g.den()).is_constant());
}

TEST_CASE("field axioms on random rational functions") {
    Rng rng{2024};
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc a = rng.ratfunc(), b = rng.ratfunc(), c = rng.ratfunc();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == RatFunc());
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        CHECK(a + RatFunc() == a);
        CHECK(a * RatFunc(1) == a);
    }
}

TEST_CASE("weights and central charges") {
    CHECK(delta(0).is_zero());
    // Delta(1) = 3/(4k) - 1/2
    RatFunc d1 = RatFunc(Rat(3, 4)) * RatFunc::kappa_inv() - RatFunc(Rat(1, 2));
    CHECK(delta(1) == d1);
    CHECK(delta(-2) == RatFunc(1));

    for (long lam : {0L, 1L, 2L, 5L, -3L, 12L}) {
        WeightData w = weight(lam);
        CHECK(w.delta == delta(lam));
        CHECK(w.delta_bar == delta(lam).bar());
        CHECK(w.c + w.c_bar == RatFunc(26));
    }
    // the bar involution squares to the identity
    CHECK(delta(7).bar().bar() == delta(7));
}

TEST_CASE("delta sum/product identities") {
    for (auto [n, s] : std::vector<std::pair<long, long>>{{3, 1}, {0, 0}, {5, 5}, {7, 2}, {-4, 3}}) {
        auto [sum_res, prod_res] = delta_sum_product(n, s);
        CHECK(sum_res.is_zero());
        CHECK(prod_res.is_zero());
    }
    // Delta(s) + Delta(-s) = s^2/(2k) for 0 <= s <= 20
    for (long s = 0; s <= 20; ++s) {
        RatFunc lhs = delta(s) + delta(-s);
        RatFunc rhs = RatFunc(Rat(s * s, 2)) * RatFunc::kappa_inv();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("factored representation agrees with the canonical field") {
    Rng rng{77};
    for (int trial = 0; trial < 120; ++trial) {
        // linear-denominator values, the shape the series pipeline divides by
        auto mk = [&](RatFunc& rf) {
            KPoly num{std::vector<Rat>{Rat(rng.range(-9, 9)), Rat(rng.range(1, 9))}};
            KPoly den = KPoly(Rat(rng.range(-6, 6))) + KPoly::monomial(1, Rat(rng.range(1, 4)));
            rf = RatFunc(num, den);
        };
        RatFunc a, b, c;
        mk(a);
        mk(b);
        mk(c);
        FactRat fa = FactRat::from_ratfunc(a), fb = FactRat::from_ratfunc(b),
                fc = FactRat::from_ratfunc(c);
        RatFunc ref = (a + b) * c - a / b + (c - b) * (a + RatFunc(3));
        FactRat fast = (fa + fb) * fc - fa / fb + (fc - fb) * (fa + FactRat(3));
        CHECK(fast.to_ratfunc() == ref);
    }
}

TEST_CASE("canonical strings") {
    CHECK(delta(1).str() == "(-2*k + 3) / (4*k)");
    CHECK((central_charge() + central_charge_bar()).str() == "26");
    CHECK(RatFunc().str() == "0");
}
