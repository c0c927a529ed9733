#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vir26/suites.hpp"

using namespace vir26;

namespace {
std::vector<SuiteCase> tiny_suite() {
    std::vector<SuiteCase> cases;
    cases.push_back({"a/1", "p=1", [] { return CaseOutcome{true, ""}; }});
    cases.push_back({"a/2", "p=2", [] { return CaseOutcome{false, "residual t^0: 1"}; }});
    cases.push_back({"a/3", "quo\"ted, param", [] { return CaseOutcome{true, ""}; }});
    return cases;
}
}  // namespace

TEST_CASE("runner collects in case order regardless of jobs") {
    auto cases = tiny_suite();
    VerificationReport r1 = run_cases("tiny", 7, 40, cases, 1);
    VerificationReport r4 = run_cases("tiny", 7, 40, cases, 4);
    CHECK(r1.to_json() == r4.to_json());
    CHECK(r1.to_csv() == r4.to_csv());
    CHECK(r1.cases[0].id == "a/1");
    CHECK(r1.cases[1].status == "fail");
    CHECK(!r1.all_passed());
    CHECK(r1.count("pass") == 2);
}

TEST_CASE("exceptions become failing cases") {
    std::vector<SuiteCase> cases;
    cases.push_back({"boom", "", []() -> CaseOutcome { throw std::domain_error("zero divisor"); }});
    VerificationReport r = run_cases("x", 1, 10, cases, 1);
    CHECK(r.cases[0].status == "fail");
    CHECK(r.cases[0].witness == "exception: zero divisor");
}

TEST_CASE("serializations are stable and escaped") {
    VerificationReport r = run_cases("tiny", 7, 40, tiny_suite(), 1);
    std::string js = r.to_json();
    CHECK(js.find("\"suite\": \"tiny\"") != std::string::npos);
    CHECK(js.find("\"seed\": \"7\"") != std::string::npos);      // numbers as strings
    CHECK(js.find("quo\\\"ted") != std::string::npos);           // escaped quote
    std::string csv = r.to_csv();
    CHECK(csv.find("\"quo\"\"ted, param\"") != std::string::npos);  // RFC-4180 quoting
    CHECK(csv.find("\r\n") != std::string::npos);
    std::string tex = r.to_latex();
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);

    // byte-identical across repeated runs with the same inputs
    VerificationReport r2 = run_cases("tiny", 7, 40, tiny_suite(), 2);
    CHECK(r.to_json() == r2.to_json());
}

TEST_CASE("sampling stream is deterministic") {
    SampleStream s1(7), s2(7);
    for (int i = 0; i < 100; ++i) CHECK(s1.next() == s2.next());
    SampleStream s3(8);
    bool differs = false;
    SampleStream s4(7);
    for (int i = 0; i < 10; ++i)
        if (s3.next() != s4.next()) differs = true;
    CHECK(differs);
}

TEST_CASE("identity suite regenerates identical random cases for a seed") {
    auto c1 = suite_identities({IdentityId::H1}, 12, 5, 7, 1);
    auto c2 = suite_identities({IdentityId::H1}, 12, 5, 7, 1);
    REQUIRE(c1.size() == c2.size());
    for (size_t i = 0; i < c1.size(); ++i) {
        CHECK(c1[i].id == c2[i].id);
        CHECK(c1[i].params == c2[i].params);
    }
}
