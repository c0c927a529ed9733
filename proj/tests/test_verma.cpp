#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vir26/verma.hpp"

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
};

VirVector random_vector(Rng& rng, const RatFunc& h, const RatFunc& c, int max_deg) {
    VirVector v(h, c);
    int terms = static_cast<int>(rng.range(1, 4));
    for (int t = 0; t < terms; ++t) {
        VirVector w = VirVector::highest_weight(h, c);
        int deg = static_cast<int>(rng.range(0, max_deg));
        while (deg > 0) {
            int p = static_cast<int>(rng.range(1, deg));
            w = w.apply_generator(-p);
            deg -= p;
        }
        v = v + w.scaled(RatFunc(Rat(rng.range(-5, 5), rng.range(1, 4))));
    }
    return v;
}
}  // namespace

TEST_CASE("compositions") {
    auto c3 = compositions(3);
    CHECK(c3.size() == 4);
    CHECK(c3[0] == std::vector<int>{1, 1, 1});  // lexicographic
    CHECK(c3[1] == std::vector<int>{1, 2});
    CHECK(c3[2] == std::vector<int>{2, 1});
    CHECK(c3[3] == std::vector<int>{3});
    CHECK(compositions(0).size() == 1);
    CHECK(compositions(6).size() == 32);
}

TEST_CASE("generator action on the highest-weight vector") {
    RatFunc h = delta(3), c = central_charge();
    VirVector v = VirVector::highest_weight(h, c);

    // L1 L_{-1} v = 2h v
    VirVector r = v.apply_generator(-1).apply_generator(1);
    CHECK(r == v.scaled(RatFunc(2) * h));

    // L2 L_{-2} v = (4h + c/2) v
    VirVector r2 = v.apply_generator(-2).apply_generator(2);
    CHECK(r2 == v.scaled(RatFunc(4) * h + RatFunc(Rat(1, 2)) * c));

    // L0 grading on a mixed monomial
    VirVector m = v.apply_generator(-1).apply_generator(-3);
    CHECK(m.apply_generator(0) == m.scaled(h + RatFunc(4)));

    // positive modes annihilate the highest-weight vector
    CHECK(v.apply_generator(5).is_zero());
}

TEST_CASE("grading of apply_generator") {
    Rng rng{13};
    RatFunc h = delta(2), c = central_charge();
    for (int trial = 0; trial < 10; ++trial) {
        VirVector w = VirVector::highest_weight(h, c);
        int deg = static_cast<int>(rng.range(1, 6));
        int left = deg;
        while (left > 0) {
            int p = static_cast<int>(rng.range(1, left));
            w = w.apply_generator(-p);
            left -= p;
        }
        for (int m : {1, 2, -1, -2}) {
            VirVector out = w.apply_generator(m);
            long d = -1;
            CHECK(out.homogeneous(&d));
            if (!out.is_zero()) CHECK(d == deg - m);
        }
    }
}

TEST_CASE("Jacobi consistency of the bracket") {
    // [L2,[L1,L-3]] v = (L2 L1 L-3 - L2 L-3 L1 - L1 L-3 L2 + L-3 L1 L2) v computed
    // in two association orders on random vectors
    Rng rng{21};
    RatFunc h = delta(1), c = central_charge();
    for (int trial = 0; trial < 8; ++trial) {
        VirVector v = random_vector(rng, h, c, 6);
        auto ap = [](const VirVector& x, int m) { return x.apply_generator(m); };
        // route 1: [L1, L-3] = 4 L-2, then [L2, 4 L-2] acting on v
        VirVector route1 = ap(v.scaled(RatFunc(4)), -2).apply_generator(2) -
                           ap(ap(v, 2).scaled(RatFunc(4)), -2);
        // route 2: expanded nested commutators
        VirVector route2 = ap(ap(ap(v, -3), 1), 2) - ap(ap(ap(v, 1), -3), 2) -
                           ap(ap(ap(v, 2), -3), 1) + ap(ap(ap(v, 2), 1), -3);
        CHECK(route1 == route2);
    }
}

TEST_CASE("singular vectors match the printed low levels") {
    RatFunc ki = RatFunc::kappa_inv();
    {
        VirVector v = VirVector::highest_weight(delta(0), central_charge());
        CHECK(singular_vector(0) == v.apply_generator(-1));
    }
    {
        VirVector v = VirVector::highest_weight(delta(1), central_charge());
        VirVector expect =
            v.apply_generator(-1).apply_generator(-1) - v.apply_generator(-2).scaled(ki);
        CHECK(singular_vector(1) == expect);
    }
    {
        // unordered product form straightened through the independent commutator engine
        VirVector v = VirVector::highest_weight(delta(2), central_charge());
        VirVector expect =
            v.apply_generator(-1).apply_generator(-1).apply_generator(-1) -
            v.apply_generator(-2).apply_generator(-1).scaled(RatFunc(2) * ki) -
            v.apply_generator(-1).apply_generator(-2).scaled(RatFunc(2) * ki) +
            v.apply_generator(-3).scaled(RatFunc(4) * ki * ki);
        CHECK(singular_vector(2) == expect);

        // and the fully straightened coefficients
        VirVector direct = v.apply_generator(-1).apply_generator(-1).apply_generator(-1) -
                           v.apply_generator(-1).apply_generator(-2).scaled(RatFunc(4) * ki) +
                           v.apply_generator(-3).scaled(RatFunc(4) * ki * ki - RatFunc(2) * ki);
        CHECK(singular_vector(2) == direct);
    }
}

TEST_CASE("singularity and its failure modes") {
    for (int n = 0; n <= 4; ++n) {
        VirVector s = singular_vector(n);
        CHECK(is_singular(s));
        // L0 eigenvalue is Delta(n) + n + 1 = Delta(-n-2)
        CHECK(s.apply_generator(0) == s.scaled(delta(-n - 2)));
    }
    // L_{-1} v at generic h is not singular
    VirVector v = VirVector::highest_weight(delta(5), central_charge());
    CHECK(!is_singular(v.apply_generator(-1)));
    // L_{-2} v at h = Delta(1) alone is not singular: L1 L-2 v = 3 L-1 v
    VirVector w = VirVector::highest_weight(delta(1), central_charge());
    VirVector l2w = w.apply_generator(-2);
    CHECK(!is_singular(l2w));
    CHECK(l2w.apply_generator(1) == w.apply_generator(-1).scaled(RatFunc(3)));
    // non-homogeneous input is rejected
    VirVector mixed = w + w.apply_generator(-1);
    CHECK_THROWS_AS(is_singular(mixed), std::invalid_argument);
}

TEST_CASE("L_{q-1} action on L_{-1}^k (lemma l1)") {
    CHECK(lemma_l1_check(3, 1));
    CHECK(lemma_l1_check(1, 2));
    CHECK(lemma_l1_check(0, 0));
    for (int k = 0; k <= 6; ++k)
        for (int q = 0; q <= 6; ++q) CHECK(lemma_l1_check(k, q));
}
