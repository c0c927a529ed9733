#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vir26/correlator.hpp"
#include "vir26/series.hpp"

using namespace vir26;

namespace {
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
    Rat rat() { return Rat(range(-20, 20), range(1, 9)); }
};

bool pole_free(const Rat& c, long order) {
    for (long i = 0; i < order; ++i)
        if ((c + Rat(i)).is_zero()) return false;
    return true;
}
}  // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rat(1), 4) == Rat(24));
    CHECK(pochhammer(Rat(5, 7), 0) == Rat(1));
    CHECK(pochhammer(Rat(-3), 5).is_zero());
    CHECK(falling(Rat(5), 3) == Rat(60));
    CHECK(binom_general(Rat(1, 2), 2) == Rat(-1, 8));
}

TEST_CASE("gauss_2f1 basics") {
    // F(a,b,b) = (1-t)^{-a}
    HypergeomParams<Rat> p{Rat(2, 3), Rat(5), Rat(5)};
    QSeries f = gauss_2f1(p, 8);
    QSeries g = binom_series(Rat(-2, 3), 8);
    CHECK(f == g);

    // terminating series
    HypergeomParams<Rat> q{Rat(-1), Rat(3), Rat(7)};
    QSeries t = gauss_2f1(q, 3);
    CHECK(t[0] == Rat(1));
    CHECK(t[1] == Rat(-3, 7));
    CHECK(t[2].is_zero());
    CHECK(t[3].is_zero());

    // parameter pole
    HypergeomParams<Rat> bad{Rat(1), Rat(1), Rat(-2)};
    CHECK_THROWS_AS(gauss_2f1(bad, 5), std::domain_error);

    // generic Q(k) family coefficients against the direct pochhammer ratio
    auto pk = hyp_params_row(2);
    KSeries fk = gauss_2f1(pk, 4);
    for (long n = 0; n <= 4; ++n) {
        RatFunc expect = pochhammer(pk.a, n) * pochhammer(pk.b, n) /
                         (RatFunc(Rat(Int::factorial(static_cast<unsigned long>(n)), Int(1))) *
                          pochhammer(pk.c, n));
        CHECK(fk[n] == expect);
    }
}

TEST_CASE("binom_series") {
    QSeries a = binom_series(Rat(1), 3);
    CHECK(a[0] == Rat(1));
    CHECK(a[1] == Rat(-1));
    CHECK(a[2].is_zero());
    CHECK(a[3].is_zero());
    QSeries b = binom_series(Rat(0), 2);
    CHECK(b[0] == Rat(1));
    CHECK(b[1].is_zero());

    // gamma = 1/(2k) over Q(kappa) against direct binomial values
    RatFunc g = RatFunc(Rat(1, 2)) * RatFunc::kappa_inv();
    KSeries c = binom_series(g, 2);
    CHECK(c[0].is_one());
    CHECK(c[1] == -g);
    CHECK(c[2] == g * (g - RatFunc(1)) * RatFunc(Rat(1, 2)));
}

TEST_CASE("series arithmetic") {
    QSeries geo = geom_pole_series<Rat>(1, 6);
    QSeries one_minus_t = binom_series(Rat(1), 6);
    QSeries prod = one_minus_t * geo;
    CHECK(prod == QSeries::one(6));

    QSeries z(6);
    CHECK((geo * z).is_zero());

    // F(a,b,b)*(1-t) = binom(-a)*(1-t)
    HypergeomParams<Rat> p{Rat(3, 5), Rat(2), Rat(2)};
    CHECK(gauss_2f1(p, 7) * one_minus_t.truncated(7) ==
          binom_series(Rat(-3, 5), 7) * one_minus_t.truncated(7));

    // different orders truncate to the minimum
    QSeries s1(9), s2(4);
    CHECK((s1 + s2).order() == 4);
}

TEST_CASE("series derivative") {
    QSeries s(std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    QSeries d = series_derivative(s, 1);
    CHECK(d.order() == 1);
    CHECK(d[0] == Rat(1));
    CHECK(d[1] == Rat(2));
    CHECK(series_derivative(s, 0) == s);
    CHECK_THROWS(series_derivative(s, 5));

    // derivative of 2F1 shifts parameters: F'(a,b,c) = (ab/c) F(a+1,b+1,c+1)
    HypergeomParams<Rat> p{Rat(1, 3), Rat(2, 5), Rat(7, 4)};
    QSeries lhs = series_derivative(gauss_2f1(p, 9), 1);
    QSeries rhs = gauss_2f1<Rat>({p.a + Rat(1), p.b + Rat(1), p.c + Rat(1)}, 8)
                      .scaled(p.a * p.b / p.c);
    CHECK(lhs == rhs);

    // derivative then coefficientwise integral is the identity on 1..N
    Rng rng{5};
    std::vector<Rat> cv;
    for (int i = 0; i < 9; ++i) cv.push_back(rng.rat());
    QSeries h{cv};
    QSeries dh = series_derivative(h, 1);
    for (long i = 1; i <= 8; ++i) CHECK(dh[i - 1] / Rat(i) == h[i]);
}

TEST_CASE("geom_pole_series") {
    QSeries m1 = geom_pole_series<Rat>(1, 3);
    CHECK(m1.coeffs() == std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1)});
    QSeries m2 = geom_pole_series<Rat>(2, 3);
    CHECK(m2.coeffs() == std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4)});
    QSeries m3 = geom_pole_series<Rat>(3, 2);
    CHECK(m3.coeffs() == std::vector<Rat>{Rat(1), Rat(3), Rat(6)});
    CHECK(mul_geom1(binom_series(Rat(1), 5)) == QSeries::one(5));
}

TEST_CASE("hypergeometric ODE property") {
    auto ode_zero = [](auto params, long order) {
        auto f = gauss_2f1(params, order);
        return hypergeom_ode_residual(params, f).is_zero();
    };
    Rng rng{99};
    int done = 0;
    while (done < 40) {
        Rat a = rng.rat(), b = rng.rat(), c = rng.rat();
        if (!pole_free(c, 14)) continue;  // sample rejection, never perturbation
        CHECK(ode_zero(HypergeomParams<Rat>{a, b, c}, 14));
        ++done;
    }
    for (int n = 0; n <= 4; ++n) CHECK(ode_zero(hyp_params_row(n), 12));
    for (auto [lam, mu, nu] :
         std::vector<std::array<int, 3>>{{2, 1, 2}, {2, 2, 1}, {3, 2, 2}, {1, 1, 1}}) {
        CHECK(ode_zero(hyp_params_channel(lam, mu, nu), 12));
    }
}

TEST_CASE("binomial exponent law") {
    Rng rng{31};
    for (int trial = 0; trial < 25; ++trial) {
        Rat g1 = rng.rat(), g2 = rng.rat();
        CHECK(binom_series(g1, 10) * binom_series(g2, 10) == binom_series(g1 + g2, 10));
    }
}
