#pragma once

// Highest weights Delta(lambda), their bar versions, and the central charges
// c = 13 - 6k - 6/k, cbar = 13 + 6k + 6/k (c + cbar = 26).

#include "vir26/ratfunc.hpp"

#include <utility>

namespace vir26 {

// Delta(lambda) = lambda(lambda+2)/(4 kappa) - lambda/2, any integer lambda.
inline RatFunc delta(long lambda) {
    RatFunc t1(KPoly(Rat(lambda * (lambda + 2), 4)), KPoly::kappa());
    return t1 - RatFunc(Rat(lambda, 2));
}

inline RatFunc delta_bar(long lambda) { return delta(lambda).bar(); }

inline RatFunc central_charge() {
    // 13 - 6k - 6/k
    return RatFunc(Rat(13)) - RatFunc(KPoly::monomial(1, Rat(6))) -
           RatFunc(KPoly(Rat(6)), KPoly::kappa());
}

inline RatFunc central_charge_bar() { return central_charge().bar(); }

struct WeightData {
    long lambda;
    RatFunc delta;
    RatFunc delta_bar;
    RatFunc c;
    RatFunc c_bar;
};

inline WeightData weight(long lambda) {
    return WeightData{lambda, delta(lambda), delta_bar(lambda), central_charge(),
                      central_charge_bar()};
}

// The two weight identities Delta(n+s)+Delta(n-s) = 2Delta(n)+Delta(s)+Delta(-s)
// and Delta(n+s)Delta(n-s) = (Delta(n)-Delta(s))(Delta(n)-Delta(-s)), returned as
// residuals (both must be the zero rational function).
inline std::pair<RatFunc, RatFunc> delta_sum_product(long n, long s) {
    RatFunc dns = delta(n + s), dnm = delta(n - s), dn = delta(n), ds = delta(s),
            dms = delta(-s);
    RatFunc sum_res = dns + dnm - RatFunc(Rat(2)) * dn - ds - dms;
    RatFunc prod_res = dns * dnm - (dn - ds) * (dn - dms);
    return {sum_res, prod_res};
}

}  // namespace vir26
