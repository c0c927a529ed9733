#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vir26/zhu.hpp"

using namespace vir26;

namespace {

// Test-only oracle: the bimodule image of a straightened Verma vector, built
// from the reduction rule [L_{-p} v] = (-1)^p (-x + p y + h_v) g_v for an
// L_0-eigenvector v of weight h_v. Applied to the singular vector it must
// reproduce f_n through a route independent of the composition formula.
BiPoly zhu_image_monomial(const std::vector<int>& parts, size_t from, const RatFunc& h0) {
    if (from == parts.size()) return BiPoly(RatFunc(1));
    BiPoly rest = zhu_image_monomial(parts, from + 1, h0);
    long tail = 0;
    for (size_t i = from + 1; i < parts.size(); ++i) tail += parts[i];
    int p = parts[from];
    RatFunc hv = h0 + RatFunc(Rat(tail));
    BiPoly lin = -BiPoly::x() + BiPoly::y().scaled(RatFunc(Rat(p))) + BiPoly(hv);
    if (p % 2 == 1) lin = -lin;
    return lin * rest;
}

BiPoly zhu_image(const VirVector& v) {
    BiPoly out;
    for (const auto& [mono, coeff] : v.terms())
        out += zhu_image_monomial(mono.parts, 0, v.h()).scaled(coeff);
    return out;
}

}  // namespace

TEST_CASE("printed Zhu polynomials") {
    BiPoly xy = BiPoly::x() - BiPoly::y();
    CHECK(f_poly(0) == xy);
    BiPoly f1 = (xy - BiPoly(delta(1))) * (xy - BiPoly(delta(-1))) -
                BiPoly::y().scaled(RatFunc::kappa_inv());
    CHECK(f_poly(1) == f1);
    BiPoly f2 = xy * ((xy - BiPoly(delta(2))) * (xy - BiPoly(delta(-2))) -
                      BiPoly::y().scaled(RatFunc(4) * RatFunc::kappa_inv()));
    CHECK(f_poly(2) == f2);

    // total x-degree matches the (n+1)-fold product
    for (int n = 0; n <= 5; ++n) CHECK(f_poly(n).x_degree() == n + 1);
}

TEST_CASE("g polynomials") {
    CHECK(g_poly(0) == BiPoly::x() - BiPoly::y());
    CHECK(g_poly(1) == f_poly(1));
    // root property g_s(Delta(n±s), Delta(n)) = 0
    for (int n = 0; n <= 8; ++n)
        for (int s = 0; s <= 8; ++s) {
            CHECK(g_poly(s).eval(delta(n + s), delta(n)).is_zero());
            CHECK(g_poly(s).eval(delta(n - s), delta(n)).is_zero());
        }
}

TEST_CASE("factorization into g factors") {
    CHECK(factorization_check(0));
    CHECK(factorization_check(1));
    CHECK(factorization_check(3));
}

TEST_CASE("bimodule image of the singular vector reproduces f_n") {
    for (int n = 0; n <= 5; ++n) {
        BiPoly via_image = zhu_image(singular_vector(n));
        CHECK(via_image == f_poly(n));
    }
}

TEST_CASE("reduction rule on small monomials") {
    // [L_{-n} v_h] = (-1)^n (-x + n y + h) for the highest-weight vector
    RatFunc h = delta(3);
    for (int p = 1; p <= 5; ++p) {
        VirVector v = VirVector::highest_weight(h, central_charge()).apply_generator(-p);
        BiPoly expect = -BiPoly::x() + BiPoly::y().scaled(RatFunc(Rat(p))) + BiPoly(h);
        if (p % 2 == 1) expect = -expect;
        CHECK(zhu_image(v) == expect);
    }
}

TEST_CASE("determinant realization") {
    CHECK(det_An(0) == BiPoly::x() - BiPoly::y());  // Delta(0) = 0
    // 2x2 by hand: (t-1)t + (t-y)/k with t = x - y - Delta(1)
    BiPoly t = BiPoly::x() - BiPoly::y() - BiPoly(delta(1));
    BiPoly byhand = (t - BiPoly(RatFunc(1))) * t +
                    (t - BiPoly::y()).scaled(RatFunc::kappa_inv());
    CHECK(det_An(1) == byhand);
    CHECK(det_An(1) == f_poly(1));
    CHECK(det_An(4) == f_poly(4));
    CHECK_THROWS_AS(det_An(7), std::domain_error);
}

TEST_CASE("fusion predicate") {
    CHECK(fusion_admissible(1, 1, 0));
    CHECK(!fusion_admissible(1, 1, 1));   // parity
    CHECK(!fusion_admissible(1, 3, 1));   // triangle
    CHECK(fusion_vanishing_check(1, 1, 0));
    CHECK(fusion_vanishing_check(2, 1, 1));
    CHECK(!fusion_vanishing_check(2, 2, 1));  // parity
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                CHECK(fusion_admissible(a, b, c) == fusion_vanishing_check(a, b, c));
}
