#pragma once

// Verification suites behind the CLI subcommands. Each builder returns the
// case list; the runner in report.hpp executes them. Case ids are stable: the
// acceptance gate and golden reports key on them.

#include "vir26/locality.hpp"
#include "vir26/report.hpp"
#include "vir26/verma.hpp"

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace vir26 {

namespace detail {

inline std::string series_witness(const KSeries& s, int max_terms = 3) {
    std::ostringstream os;
    int shown = 0;
    for (long i = 0; i <= s.order() && shown < max_terms; ++i) {
        if (!s[i].is_zero()) {
            if (shown) os << "; ";
            os << "t^" << i << ": " << s[i].str();
            ++shown;
        }
    }
    return os.str();
}

template <ExactField K>
std::string series_witness_t(const TruncSeries<K>& s, int max_terms = 3) {
    std::ostringstream os;
    int shown = 0;
    for (long i = 0; i <= s.order() && shown < max_terms; ++i) {
        if (!s[i].is_zero()) {
            if (shown) os << "; ";
            os << "t^" << i << ": " << FieldOf<K>::to(s[i]).str();
            ++shown;
        }
    }
    return os.str();
}

inline std::string qseries_witness(const QSeries& s, int max_terms = 3) {
    std::ostringstream os;
    int shown = 0;
    for (long i = 0; i <= s.order() && shown < max_terms; ++i) {
        if (!s[i].is_zero()) {
            if (shown) os << "; ";
            os << "t^" << i << ": " << s[i].str();
            ++shown;
        }
    }
    return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------- singular

inline std::vector<SuiteCase> suite_singular(int max_n) {
    std::vector<SuiteCase> cases;
    for (int n = 0; n <= max_n; ++n) {
        cases.push_back({"singular/n=" + std::to_string(n), "h=Delta(" + std::to_string(n) + ")",
                         [n]() -> CaseOutcome {
                             VirVector s = singular_vector(n);
                             long deg = -1;
                             if (!s.homogeneous(&deg) || deg != n + 1)
                                 return {false, "not homogeneous of degree n+1"};
                             if (!is_singular(s)) {
                                 return {false, "L1 part: " + s.apply_generator(1).str()};
                             }
                             // golden forms for n <= 2
                             if (n == 0) {
                                 VirVector e = VirVector::highest_weight(delta(0), central_charge())
                                                   .apply_generator(-1);
                                 if (!(s == e)) return {false, "n=0 mismatch: " + s.str()};
                             }
                             if (n == 1) {
                                 VirVector v = VirVector::highest_weight(delta(1), central_charge());
                                 VirVector e = v.apply_generator(-1).apply_generator(-1) -
                                               v.apply_generator(-2).scaled(RatFunc::kappa_inv());
                                 if (!(s == e)) return {false, "n=1 mismatch: " + s.str()};
                             }
                             if (n == 2) {
                                 VirVector v = VirVector::highest_weight(delta(2), central_charge());
                                 RatFunc ki = RatFunc::kappa_inv();
                                 VirVector e =
                                     v.apply_generator(-1).apply_generator(-1).apply_generator(-1) -
                                     v.apply_generator(-2).apply_generator(-1).scaled(RatFunc(2) * ki) -
                                     v.apply_generator(-1).apply_generator(-2).scaled(RatFunc(2) * ki) +
                                     v.apply_generator(-3).scaled(RatFunc(4) * ki * ki);
                                 if (!(s == e)) return {false, "n=2 mismatch: " + s.str()};
                             }
                             // L0 eigenvalue: Delta(n) + n + 1 = Delta(-n-2)
                             VirVector l0 = s.apply_generator(0);
                             VirVector expect = s.scaled(delta(-n - 2));
                             if (!(l0 == expect)) return {false, "L0 eigenvalue mismatch"};
                             return {true, ""};
                         }});
    }
    return cases;
}

// --------------------------------------------------------------------- zhu

inline std::vector<SuiteCase> suite_zhu(int max_n, int det_max = 5) {
    std::vector<SuiteCase> cases;
    cases.push_back({"zhu/examples", "f0,f1,f2", []() -> CaseOutcome {
                         BiPoly xy = BiPoly::x() - BiPoly::y();
                         if (f_poly(0) != xy) return {false, "f0"};
                         BiPoly f1e = (xy - BiPoly(delta(1))) * (xy - BiPoly(delta(-1))) -
                                      BiPoly::y().scaled(RatFunc::kappa_inv());
                         if (f_poly(1) != f1e) return {false, "f1"};
                         BiPoly f2e = xy * ((xy - BiPoly(delta(2))) * (xy - BiPoly(delta(-2))) -
                                            BiPoly::y().scaled(RatFunc(4) * RatFunc::kappa_inv()));
                         if (f_poly(2) != f2e) return {false, "f2"};
                         return {true, ""};
                     }});
    for (int k = 0; 2 * k <= max_n + 1; ++k) {
        cases.push_back({"zhu/factorization/k=" + std::to_string(k),
                         "f" + std::to_string(2 * k) + ",f" + std::to_string(2 * k + 1),
                         [k]() -> CaseOutcome {
                             return {factorization_check(k), ""};
                         }});
    }
    for (int n = 0; n <= det_max; ++n) {
        cases.push_back({"zhu/det/n=" + std::to_string(n), "(n+1)x(n+1)", [n]() -> CaseOutcome {
                             return {det_An(n) == f_poly(n), ""};
                         }});
    }
    return cases;
}

// ------------------------------------------------------------------ fusion

inline std::vector<SuiteCase> suite_fusion(int max_k) {
    std::vector<SuiteCase> cases;
    for (int k1 = 0; k1 <= max_k; ++k1)
        for (int k2 = 0; k2 <= max_k; ++k2)
            for (int k3 = 0; k3 <= max_k; ++k3) {
                std::string id = "fusion/" + std::to_string(k1) + "," + std::to_string(k2) + "," +
                                 std::to_string(k3);
                cases.push_back({id, fusion_admissible(k1, k2, k3) ? "admissible" : "forbidden",
                                 [k1, k2, k3]() -> CaseOutcome {
                                     bool a = fusion_admissible(k1, k2, k3);
                                     bool v = fusion_vanishing_check(k1, k2, k3);
                                     if (a != v)
                                         return {false, std::string("admissible=") + (a ? "1" : "0") +
                                                            " vanishing=" + (v ? "1" : "0")};
                                     return {true, ""};
                                 }});
            }
    return cases;
}

// -------------------------------------------------------------- identities

// Triples (lam,mu,nu) for which both exchange channels exist.
inline std::vector<std::array<int, 3>> both_channel_triples(int max_v) {
    std::vector<std::array<int, 3>> out;
    for (int lam = 0; lam <= max_v; ++lam)
        for (int mu = 0; mu <= max_v; ++mu)
            for (int nu = 0; nu <= max_v; ++nu)
                if (nu >= 1 && fusion_admissible(lam, mu, nu + 1) &&
                    fusion_admissible(lam, mu, nu - 1))
                    out.push_back({lam, mu, nu});
    return out;
}

inline std::vector<SuiteCase> suite_identities(const std::vector<IdentityId>& ids, long order,
                                               int samples, std::uint64_t seed, int max_v) {
    std::vector<SuiteCase> cases;
    auto run_family = [ids, order](HypergeomParams<RatFunc> p) -> CaseOutcome {
        IdentityWorkspace<FactRat> ws(convert_params<FactRat>(p), order);
        for (auto id : ids) {
            auto r = identity_residual(id, ws);
            if (!r.is_zero())
                return {false, to_string(id) + " residual " + detail::series_witness_t(r)};
        }
        return {true, ""};
    };
    for (int n = 0; n <= max_v; ++n) {
        cases.push_back({"identities/row/n=" + std::to_string(n),
                         "a=1/k,b=(n+2)/k-1,c=(n+1)/k",
                         [run_family, n] { return run_family(hyp_params_row(n)); }});
    }
    for (auto [lam, mu, nu] : both_channel_triples(max_v)) {
        std::string id = "identities/channel/" + std::to_string(lam) + "," + std::to_string(mu) +
                         "," + std::to_string(nu);
        cases.push_back({id, "channel family",
                         [run_family, lam = lam, mu = mu, nu = nu] {
                             return run_family(hyp_params_channel(lam, mu, nu));
                         }});
    }
    // seeded random rational triples, rejection-sampled per identity
    for (size_t idx = 0; idx < ids.size(); ++idx) {
        IdentityId id = ids[idx];
        SampleStream stream(seed * 1000003ull + static_cast<std::uint64_t>(id) * 7919ull);
        int accepted = 0;
        while (accepted < samples) {
            Rat a(stream.range(-50, 50), stream.range(1, 20));
            Rat b(stream.range(-50, 50), stream.range(1, 20));
            Rat c(stream.range(-50, 50), stream.range(1, 20));
            HypergeomParams<Rat> p{a, b, c};
            if (!identity_params_valid(id, p, order)) continue;
            std::string cid = "identities/" + to_string(id) + "/random/" + std::to_string(accepted);
            std::string params = "a=" + a.str() + " b=" + b.str() + " c=" + c.str();
            cases.push_back({cid, params, [id, p, order]() -> CaseOutcome {
                                 auto r = identity_residual(id, p, order);
                                 if (!r.is_zero())
                                     return {false, "residual " + detail::qseries_witness(r)};
                                 return {true, ""};
                             }});
            ++accepted;
        }
    }
    return cases;
}

// --------------------------------------------------------------------- bpz

inline std::vector<SuiteCase> suite_bpz(int max_n, int max_channel, long order) {
    std::vector<SuiteCase> cases;
    const std::array<Channel, 4> kinds{Channel::PlusPlus, Channel::MinusPlus, Channel::PlusMinus,
                                       Channel::MinusMinus};
    for (int n = 0; n <= max_n; ++n) {
        for (Channel k : kinds) {
            if ((k == Channel::PlusMinus && n < 1) || (k == Channel::MinusMinus && n < 2)) continue;
            for (int eq = 1; eq <= 2; ++eq) {
                std::string id = "bpz/row/" + to_string(k) + "/n=" + std::to_string(n) +
                                 (eq == 1 ? "/dz2" : "/dw2");
                cases.push_back({id, "second-order equation",
                                 [k, n, eq, order]() -> CaseOutcome {
                                     CorrelatorSpec s = correlator_spec_31x(k, n);
                                     BpzOperator op =
                                         eq == 1 ? bpz_operator_z(n) : bpz_operator_w(n);
                                     auto r = bpz_residual<FactRat>(s, op, order);
                                     if (!r.is_zero())
                                         return {false, "residual " + detail::series_witness_t(r)};
                                     return {true, ""};
                                 }});
            }
        }
    }
    for (int lam = 0; lam <= max_channel; ++lam)
        for (int mu = 0; mu <= max_channel; ++mu)
            for (int nu = 0; nu <= max_channel; ++nu)
                for (Channel k : {Channel::MinusPlus, Channel::PlusMinus}) {
                    bool ok = (k == Channel::MinusPlus)
                                  ? fusion_admissible(lam, mu, nu + 1)
                                  : (nu >= 1 && fusion_admissible(lam, mu, nu - 1));
                    if (!ok) continue;
                    std::string id = "bpz/channel/" + to_string(k) + "/" + std::to_string(lam) +
                                     "," + std::to_string(mu) + "," + std::to_string(nu);
                    cases.push_back(
                        {id, "equation (d_z^2, weights Delta(lam), Delta(mu))",
                         [k, lam, mu, nu, order]() -> CaseOutcome {
                             CorrelatorSpec s = correlator_spec_4x(k, lam, mu, nu);
                             auto r = bpz_residual<FactRat>(s, bpz_operator_channel(lam, mu), order);
                             if (!r.is_zero())
                                 return {false, "residual " + detail::series_witness_t(r)};
                             return {true, ""};
                         }});
                }
    cases.push_back({"bpz/negative-control", "gamma -> gamma + 1 must fail",
                     [order]() -> CaseOutcome {
                         CorrelatorSpec s = correlator_spec_31x(Channel::MinusPlus, 2);
                         s.gamma = s.gamma + RatFunc(1);
                         auto r = bpz_residual<FactRat>(s, bpz_operator_z(2), order);
                         if (r.is_zero()) return {false, "perturbed residual vanished"};
                         return {true, ""};
                     }});
    return cases;
}

// ---------------------------------------------------------------- locality

inline std::vector<SuiteCase> suite_locality(int rows_max_n, int phi_max_n, int phi_max_kl,
                                             long order) {
    std::vector<SuiteCase> cases;
    for (int n = 0; n <= rows_max_n; ++n) {
        cases.push_back({"locality/rows/n=" + std::to_string(n), "Laurent row pattern",
                         [n, order]() -> CaseOutcome {
                             LocalityRows rows = locality_matrix_coeffs(n, order);
                             LocalityRows expect = locality_rows_expected(n);
                             if (!(rows.top == expect.top)) return {false, "top row mismatch"};
                             if (!(rows.middle == expect.middle))
                                 return {false, "middle row mismatch"};
                             if (rows.bottom.has_value() != expect.bottom.has_value() ||
                                 (rows.bottom && !(*rows.bottom == *expect.bottom)))
                                 return {false, "bottom row mismatch"};
                             return {true, ""};
                         }});
    }
    for (int n = 0; n <= phi_max_n; ++n) {
        cases.push_back({"locality/phi/n=" + std::to_string(n),
                         "k+l <= " + std::to_string(phi_max_kl),
                         [n, phi_max_kl, order]() -> CaseOutcome {
                             ChannelWorkspace<FactRat> ws(n, order);
                             for (int k = 0; k <= phi_max_kl; ++k)
                                 for (int l = 0; k + l <= phi_max_kl; ++l)
                                     if (!phi_kl_check(ws, k, l))
                                         return {false, "phi(" + std::to_string(k) + "," +
                                                            std::to_string(l) + ") failed"};
                             return {true, ""};
                         }});
        cases.push_back({"locality/binomial-sum/n=" + std::to_string(n), "k+l <= 2, N <= 3",
                         [n, order]() -> CaseOutcome {
                             ChannelWorkspace<FactRat> ws(n, order);
                             for (int k = 0; k <= 2; ++k)
                                 for (int l = 0; k + l <= 2; ++l)
                                     for (int nsum = 0; nsum <= 3; ++nsum)
                                         if (!binomial_sum_regularity(ws, k, l, nsum))
                                             return {false, "sum(" + std::to_string(k) + "," +
                                                                std::to_string(l) + ",N=" +
                                                                std::to_string(nsum) + ") failed"};
                             return {true, ""};
                         }});
    }
    cases.push_back({"locality/negative-control", "perturbed X must violate termination",
                     [order]() -> CaseOutcome {
                         try {
                             locality_matrix_coeffs(3, order, RatFunc(Rat(7, 5)));
                         } catch (const std::domain_error&) {
                             return {true, ""};
                         }
                         return {false, "perturbed middle row still terminated"};
                     }});
    // combinatorial lemma checks
    for (int n = 0; n <= 5; ++n) {
        cases.push_back(
            {"locality/deriv-expansion/N=" + std::to_string(n), "closed form vs brute force",
             [n]() -> CaseOutcome {
                 SampleStream stream(40 + static_cast<std::uint64_t>(n));
                 for (int trial = 0; trial < 5; ++trial) {
                     Rat lambda(stream.range(-30, 30), stream.range(1, 12));
                     std::vector<Rat> hv;
                     for (int i = 0; i < 9 + n; ++i)
                         hv.push_back(Rat(stream.range(-9, 9), stream.range(1, 6)));
                     QSeries h(hv);
                     QSeries closed = binom_derivative_expand(lambda, h, n);
                     // brute force: sum_i C(n,i) dz^i dw^{n-i} via the ZwForm oracle;
                     // each term is z^{lambda-i} w^{-(n-i)} H = z^{lambda-n} t^{-(n-i)} H
                     QSeries acc(h.order() - n);
                     for (int i = 0; i <= n; ++i) {
                         ZwForm<Rat> f{lambda, Rat(0), h};
                         for (int d = 0; d < n - i; ++d) f = f.dw();
                         for (int d = 0; d < i; ++d) f = f.dz();
                         const int down = n - i;
                         for (int d = 0; d < down; ++d)
                             if (!f.h[d].is_zero()) return {false, "valuation defect"};
                         QSeries shifted(acc.order());
                         for (long d = 0; d <= acc.order(); ++d) shifted[d] = f.h[d + down];
                         acc = acc + shifted.scaled(binom_general(Rat(n), i));
                     }
                     if (!(acc == closed.truncated(acc.order())))
                         return {false, "mismatch at N=" + std::to_string(n)};
                     // the inner dz^n expansion against the same oracle
                     ZwForm<Rat> g{lambda, Rat(0), h};
                     for (int d = 0; d < n; ++d) g = g.dz();
                     QSeries inner = dz_pow_expand(lambda, h, n);
                     if (!(g.h.truncated(inner.order()) == inner))
                         return {false, "inner expansion mismatch"};
                 }
                 return {true, ""};
             }});
    }
    cases.push_back({"locality/lemma-l2", "N,k,q <= 8", []() -> CaseOutcome {
                         for (int n = 0; n <= 8; ++n)
                             for (int k = 0; k <= 8; ++k)
                                 for (int q = 0; q <= 8; ++q)
                                     if (!lemma_l2_check(n, k, q))
                                         return {false, "(" + std::to_string(n) + "," +
                                                            std::to_string(k) + "," +
                                                            std::to_string(q) + ")"};
                         return {true, ""};
                     }});
    cases.push_back({"locality/lemma-l1", "k,q <= 6", []() -> CaseOutcome {
                         for (int k = 0; k <= 6; ++k)
                             for (int q = 0; q <= 6; ++q)
                                 if (!lemma_l1_check(k, q))
                                     return {false,
                                             "(" + std::to_string(k) + "," + std::to_string(q) + ")"};
                         return {true, ""};
                     }});
    return cases;
}

// ------------------------------------------------------------------ limits

inline std::vector<SuiteCase> suite_limits(int zw_max, int rec_max, int ratio_max, int sym_max,
                                           long order) {
    std::vector<SuiteCase> cases;
    for (int lam = 0; lam <= zw_max; ++lam)
        for (int mu = 0; mu <= zw_max; ++mu)
            for (int nu = 0; nu <= zw_max; ++nu) {
                bool live = fusion_admissible(lam, mu, nu + 1) ||
                            (nu >= 1 && fusion_admissible(lam, mu, nu - 1));
                std::string id = "limits/zw/" + std::to_string(lam) + "," + std::to_string(mu) +
                                 "," + std::to_string(nu) + "/l=0";
                cases.push_back({id, live ? "channels live" : "vacuous",
                                 [lam, mu, nu, order]() -> CaseOutcome {
                                     return {zw_limit_check(lam, mu, nu, 0, order), ""};
                                 }});
            }
    const std::array<std::array<int, 3>, 6> l12_triples{
        {{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 1, 2}, {1, 2, 2}, {2, 2, 1}}};
    for (auto t : l12_triples)
        for (int l = 1; l <= 2; ++l) {
            std::string id = "limits/zw/" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                             "," + std::to_string(t[2]) + "/l=" + std::to_string(l);
            cases.push_back({id, "derivative limit",
                             [t, l, order]() -> CaseOutcome {
                                 return {zw_limit_check(t[0], t[1], t[2], l, order), ""};
                             }});
        }
    for (int lam = 0; lam <= rec_max; ++lam) {
        cases.push_back({"limits/recursion/lam=" + std::to_string(lam),
                         "mu,nu <= " + std::to_string(rec_max),
                         [lam, rec_max]() -> CaseOutcome {
                             for (int mu = 0; mu <= rec_max; ++mu)
                                 for (int nu = 0; nu <= rec_max; ++nu)
                                     if (!recursion_check(lam, mu, nu))
                                         return {false, "(" + std::to_string(mu) + "," +
                                                            std::to_string(nu) + ")"};
                             return {true, ""};
                         }});
    }
    for (int lam = 0; lam <= ratio_max; ++lam) {
        cases.push_back({"limits/ratio/lam=" + std::to_string(lam),
                         "mu,nu <= " + std::to_string(ratio_max),
                         [lam, ratio_max]() -> CaseOutcome {
                             for (int mu = 0; mu <= ratio_max; ++mu)
                                 for (int nu = 0; nu <= ratio_max; ++nu)
                                     if (!ratio_check(lam, mu, nu))
                                         return {false, "(" + std::to_string(mu) + "," +
                                                            std::to_string(nu) + ")"};
                             return {true, ""};
                         }});
    }
    cases.push_back({"limits/first-exchange", "Definition value vs closed form, n <= 12",
                     []() -> CaseOutcome {
                         RatFunc k2 = RatFunc::kappa() * RatFunc::kappa();
                         for (int n = 1; n <= 12; ++n) {
                             RatFunc expect =
                                 RatFunc(Rat(n, n + 1)) /
                                 (RatFunc(Rat(static_cast<long>(n + 1) * (n + 1))) - k2);
                             if (structure_constant(1, n, n - 1) != expect)
                                 return {false, "n=" + std::to_string(n)};
                         }
                         return {true, ""};
                     }});
    cases.push_back({"limits/symmetry", "lam<->mu, indices <= " + std::to_string(sym_max),
                     [sym_max]() -> CaseOutcome {
                         for (int lam = 0; lam <= sym_max; ++lam)
                             for (int mu = 0; mu <= sym_max; ++mu)
                                 for (int nu = 0; nu <= sym_max; ++nu)
                                     if (structure_constant(lam, mu, nu) !=
                                         structure_constant(mu, lam, nu))
                                         return {false, "asymmetric"};
                         return {true, ""};
                     }});
    return cases;
}

}  // namespace vir26
