// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failing criteria. Criterion 11 invokes the CLI binary (argv[1]) twice and
// compares report bytes.

#include "vir26/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace vir26;

namespace {

int failures = 0;
const int kJobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

void report(int criterion, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

bool run_all(const std::vector<SuiteCase>& cases, std::string* note = nullptr) {
    VerificationReport rep = run_cases("acceptance", 7, 40, cases, kJobs);
    if (note) {
        std::ostringstream os;
        os << "(" << rep.count("pass") << "/" << rep.cases.size() << " cases";
        for (const auto& c : rep.cases)
            if (c.status == "fail") {
                os << "; first failure " << c.id;
                break;
            }
        os << ")";
        *note = os.str();
    }
    return rep.all_passed();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;

    auto gate = [&](int criterion, std::vector<SuiteCase> cases, const std::string& what) {
        bool ok = run_all(cases, &note);
        report(criterion, ok, what + " " + note);
    };

    // 1. singular vectors annihilated by L1, L2 for n <= 8; printed low levels
    gate(1, suite_singular(8), "singular vectors, n <= 8");

    // 2. Zhu polynomials: printed examples, factorization through f_9, determinants
    gate(2, suite_zhu(8, 5), "Zhu polynomials and determinants");

    // 3. fusion equivalence, exhaustive over k_i <= 8
    gate(3, suite_fusion(8), "fusion predicate equivalence");

    // 4. the five hypergeometric identities at order 40: row family n <= 6,
    //    channel family <= 6, 200 seeded rational triples per identity
    gate(4, suite_identities({kAllIdentities.begin(), kAllIdentities.end()}, 40, 200, 7, 6),
         "hypergeometric identities, order 40");

    // 5. BPZ residuals at order 40 under both equations, rows n <= 6, channels <= 5,
    //    plus the perturbed negative control
    gate(5, suite_bpz(6, 5, 40), "BPZ residuals, order 40");

    // 6, 7 and 10 all run through the locality suite; 8 and 9 through limits.
    std::vector<SuiteCase> c6, c7, c10;
    for (auto& c : suite_locality(6, 4, 4, 40)) {
        if (c.id.rfind("locality/rows", 0) == 0 || c.id == "locality/negative-control")
            c6.push_back(c);
        else if (c.id.rfind("locality/phi", 0) == 0 || c.id.rfind("locality/binomial-sum", 0) == 0)
            c7.push_back(c);
        else
            c10.push_back(c);
    }
    std::vector<SuiteCase> c8, c9;
    for (auto& c : suite_limits(4, 10, 8, 12, 40)) {
        if (c.id.rfind("limits/zw", 0) == 0) c9.push_back(c);
        else c8.push_back(c);
    }
    gate(6, c6, "locality Laurent rows, n <= 6");
    gate(7, c7, "phi regularity and symmetry");
    gate(8, c8, "structure constants: recursion/ratio/symmetry");
    gate(9, c9, "z -> w limits");
    gate(10, c10, "combinatorial lemmas");

    // 11. byte-identical reports across two runs of `verify all --seed 7`
    if (argc > 1) {
        std::string cli = argv[1];
        std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
        std::string cmd1 = "\"" + cli + "\" verify all --seed 7 --out " + out1 + " 2>/dev/null";
        std::string cmd2 = "\"" + cli + "\" verify all --seed 7 --out " + out2 + " 2>/dev/null";
        int rc1 = std::system(cmd1.c_str());
        int rc2 = std::system(cmd2.c_str());
        std::string a = slurp(out1), b = slurp(out2);
        bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
        std::remove(out1.c_str());
        std::remove(out2.c_str());
        std::ostringstream os;
        os << "(" << a.size() << " bytes per report, exit codes " << rc1 << "/" << rc2 << ")";
        report(11, ok, "byte-identical verify-all reports " + os.str());
    } else {
        report(11, false, "CLI path missing: pass the vir26 binary as argv[1]");
    }

    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("acceptance: %d criterion(s) failing, %lld s total\n", failures,
                static_cast<long long>(secs));
    return failures == 0 ? 0 : 1;
}
