#pragma once

// Verification cases, a small parallel runner with ordered collection, and
// the machine-readable report writers. Reports carry no timing so identical
// flags and seed give byte-identical output.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace vir26 {

struct CaseOutcome {
    bool pass = false;
    std::string witness;  // serialized residual/value on failure, empty otherwise
};

struct SuiteCase {
    std::string id;
    std::string params;
    std::function<CaseOutcome()> run;
};

struct CaseResult {
    std::string id;
    std::string params;
    std::string status;  // pass | fail | skipped
    std::string witness;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    long order = 0;
    std::vector<CaseResult> cases;

    bool all_passed() const {
        for (const auto& c : cases)
            if (c.status == "fail") return false;
        return true;
    }
    long count(const std::string& status) const {
        long n = 0;
        for (const auto& c : cases)
            if (c.status == status) ++n;
        return n;
    }

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_latex() const;
};

inline VerificationReport run_cases(std::string suite, std::uint64_t seed, long order,
                                    const std::vector<SuiteCase>& cases, int jobs) {
    VerificationReport rep;
    rep.suite = std::move(suite);
    rep.seed = seed;
    rep.order = order;
    rep.cases.resize(cases.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            CaseResult& r = rep.cases[i];
            r.id = cases[i].id;
            r.params = cases[i].params;
            try {
                CaseOutcome out = cases[i].run();
                r.status = out.pass ? "pass" : "fail";
                r.witness = out.witness;
            } catch (const std::exception& e) {
                r.status = "fail";
                r.witness = std::string("exception: ") + e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rep;
}

namespace detail {
inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}
inline std::string csv_escape(const std::string& s) {
    bool need = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}
}  // namespace detail

inline std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\n";
    os << "  \"suite\": \"" << detail::json_escape(suite) << "\",\n";
    os << "  \"seed\": \"" << seed << "\",\n";
    os << "  \"order\": \"" << order << "\",\n";
    os << "  \"cases\": [\n";
    for (size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        os << "    {\"id\": \"" << detail::json_escape(c.id) << "\", \"params\": \""
           << detail::json_escape(c.params) << "\", \"status\": \"" << c.status << "\"";
        if (!c.witness.empty()) os << ", \"witness\": \"" << detail::json_escape(c.witness) << "\"";
        os << "}" << (i + 1 < cases.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

inline std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "suite,seed,order,case_id,params,status,witness\r\n";
    for (const auto& c : cases) {
        os << detail::csv_escape(suite) << "," << seed << "," << order << ","
           << detail::csv_escape(c.id) << "," << detail::csv_escape(c.params) << "," << c.status
           << "," << detail::csv_escape(c.witness) << "\r\n";
    }
    return os.str();
}

inline std::string VerificationReport::to_latex() const {
    std::ostringstream os;
    os << "\\begin{tabular}{llll}\n\\hline\ncase & params & status & witness \\\\\n\\hline\n";
    auto tex = [](const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '_' || ch == '&' || ch == '%' || ch == '#') out += '\\';
            out += ch;
        }
        return out;
    };
    for (const auto& c : cases) {
        os << tex(c.id) << " & " << tex(c.params) << " & " << c.status << " & " << tex(c.witness)
           << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
}

// Deterministic sampling stream (splitmix64).
struct SampleStream {
    std::uint64_t state;
    explicit SampleStream(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace vir26
