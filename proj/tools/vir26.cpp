// vir26 -- exact verification CLI for the rank-26 vertex algebra construction.
//
//   vir26 verify {singular|zhu|fusion|bpz|identities|locality|limits|all} [flags]
//   vir26 table  {constants|fusion|weights} [flags]
//
// Exit codes: 0 all cases pass, 1 verification failure, 2 usage error.

#include "vir26/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

using namespace vir26;

namespace {

struct Options {
    int max_n = 8;
    int max = -1;  // grid bound; default depends on the suite
    long order = 40;
    int samples = 200;
    std::uint64_t seed = 7;
    std::string format = "json";
    std::string out;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string identity = "all";
};

std::vector<IdentityId> parse_ids(const std::string& which) {
    if (which == "all") return {kAllIdentities.begin(), kAllIdentities.end()};
    for (auto id : kAllIdentities)
        if (to_string(id) == which) return {id};
    throw CLI::ValidationError("--id", "unknown identity '" + which + "'");
}

std::vector<SuiteCase> build_suite(const std::string& name, const Options& o) {
    auto grid = [&](int dflt) { return o.max >= 0 ? o.max : dflt; };
    if (name == "singular") return suite_singular(o.max_n);
    if (name == "zhu") return suite_zhu(o.max_n);
    if (name == "fusion") return suite_fusion(grid(8));
    if (name == "identities")
        return suite_identities(parse_ids(o.identity), o.order, o.samples, o.seed, grid(6));
    if (name == "bpz") return suite_bpz(std::min(o.max_n, 6), grid(5), o.order);
    if (name == "locality") return suite_locality(6, grid(4), 4, o.order);
    if (name == "limits") return suite_limits(grid(4), 10, 8, 12, o.order);
    throw std::logic_error("unknown suite " + name);
}

const std::vector<std::string> kAllSuites{"singular", "zhu",      "fusion", "bpz",
                                          "identities", "locality", "limits"};

void emit(const VerificationReport& rep, const Options& o) {
    std::string text;
    if (o.format == "json") text = rep.to_json();
    else if (o.format == "csv") text = rep.to_csv();
    else text = rep.to_latex();
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        f << text;
    }
    std::cerr << "suite " << rep.suite << ": " << rep.count("pass") << " pass, "
              << rep.count("fail") << " fail, " << rep.count("skipped") << " skipped\n";
}

std::string table_constants(int max_v, const std::string& format) {
    std::ostringstream os;
    struct Row {
        int lam, mu, nu, ell;
        std::string value;
    };
    std::vector<Row> rows;
    for (int lam = 0; lam <= max_v; ++lam)
        for (int mu = 0; mu <= max_v; ++mu)
            for (int nu = 0; nu <= max_v; ++nu) {
                RatFunc x = structure_constant(lam, mu, nu);
                int ell = (lam + mu - nu) / 2;
                rows.push_back({lam, mu, nu, (lam + mu - nu) >= 0 && (lam + mu + nu) % 2 == 0 ? ell : -1,
                                x.str()});
            }
    if (format == "csv") {
        os << "lambda,mu,nu,ell,value\r\n";
        for (auto& r : rows)
            os << r.lam << "," << r.mu << "," << r.nu << "," << r.ell << ","
               << "\"" << r.value << "\"\r\n";
    } else if (format == "latex") {
        os << "\\begin{tabular}{rrrrl}\n\\hline\n$\\lambda$ & $\\mu$ & $\\nu$ & $\\ell$ & "
              "$X_{\\lambda\\mu}^{\\nu}$ \\\\\n\\hline\n";
        for (auto& r : rows)
            os << r.lam << " & " << r.mu << " & " << r.nu << " & " << r.ell << " & $"
               << r.value << "$ \\\\\n";
        os << "\\hline\n\\end{tabular}\n";
    } else {
        os << "{\n  \"table\": \"constants\",\n  \"rows\": [\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            auto& r = rows[i];
            os << "    {\"lambda\": \"" << r.lam << "\", \"mu\": \"" << r.mu << "\", \"nu\": \""
               << r.nu << "\", \"ell\": \"" << r.ell << "\", \"value\": \"" << r.value << "\"}"
               << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        os << "  ]\n}\n";
    }
    return os.str();
}

std::string table_fusion(int max_v, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "k1,k2,k3,fusion\r\n";
        for (int a = 0; a <= max_v; ++a)
            for (int b = 0; b <= max_v; ++b)
                for (int c = 0; c <= max_v; ++c)
                    os << a << "," << b << "," << c << "," << (fusion_admissible(a, b, c) ? 1 : 0)
                       << "\r\n";
    } else if (format == "latex") {
        os << "\\begin{tabular}{rrrc}\n\\hline\n$k_1$ & $k_2$ & $k_3$ & fusion \\\\\n\\hline\n";
        for (int a = 0; a <= max_v; ++a)
            for (int b = 0; b <= max_v; ++b)
                for (int c = 0; c <= max_v; ++c)
                    os << a << " & " << b << " & " << c << " & "
                       << (fusion_admissible(a, b, c) ? 1 : 0) << " \\\\\n";
        os << "\\hline\n\\end{tabular}\n";
    } else {
        os << "{\n  \"table\": \"fusion\",\n  \"rows\": [\n";
        bool first = true;
        for (int a = 0; a <= max_v; ++a)
            for (int b = 0; b <= max_v; ++b)
                for (int c = 0; c <= max_v; ++c) {
                    if (!first) os << ",\n";
                    first = false;
                    os << "    {\"k1\": \"" << a << "\", \"k2\": \"" << b << "\", \"k3\": \"" << c
                       << "\", \"fusion\": \"" << (fusion_admissible(a, b, c) ? 1 : 0) << "\"}";
                }
        os << "\n  ]\n}\n";
    }
    return os.str();
}

std::string table_weights(int max_v, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "lambda,delta,delta_bar,c,c_bar\r\n";
        for (int l = 0; l <= max_v; ++l) {
            WeightData w = weight(l);
            os << l << ",\"" << w.delta.str() << "\",\"" << w.delta_bar.str() << "\",\""
               << w.c.str() << "\",\"" << w.c_bar.str() << "\"\r\n";
        }
    } else if (format == "latex") {
        os << "\\begin{tabular}{rllll}\n\\hline\n$\\lambda$ & $\\Delta$ & $\\bar\\Delta$ & $c$ & "
              "$\\bar c$ \\\\\n\\hline\n";
        for (int l = 0; l <= max_v; ++l) {
            WeightData w = weight(l);
            os << l << " & $" << w.delta.str() << "$ & $" << w.delta_bar.str() << "$ & $"
               << w.c.str() << "$ & $" << w.c_bar.str() << "$ \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
    } else {
        os << "{\n  \"table\": \"weights\",\n  \"rows\": [\n";
        for (int l = 0; l <= max_v; ++l) {
            WeightData w = weight(l);
            os << "    {\"lambda\": \"" << l << "\", \"delta\": \"" << w.delta.str()
               << "\", \"delta_bar\": \"" << w.delta_bar.str() << "\", \"c\": \"" << w.c.str()
               << "\", \"c_bar\": \"" << w.c_bar.str() << "\"}" << (l < max_v ? "," : "") << "\n";
        }
        os << "  ]\n}\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the rank-26 VOA construction"};
    app.require_subcommand(1);
    Options o;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    std::vector<CLI::App*> suite_cmds;
    for (const auto& name : kAllSuites) suite_cmds.push_back(verify->add_subcommand(name));
    CLI::App* all_cmd = verify->add_subcommand("all", "every suite in sequence");
    for (CLI::App* sc : suite_cmds) {
        sc->add_option("--max-n", o.max_n, "largest n for per-level cases");
        sc->add_option("--max", o.max, "grid bound");
        sc->add_option("--order", o.order, "series truncation order");
        sc->add_option("--samples", o.samples, "random samples per identity");
        sc->add_option("--seed", o.seed, "sampling seed");
        sc->add_option("--format", o.format, "json|csv|latex")
            ->check(CLI::IsMember({"json", "csv", "latex"}));
        sc->add_option("--out", o.out, "write the report to PATH");
        sc->add_option("--jobs", o.jobs, "parallel case execution");
        sc->add_option("--id", o.identity, "identity filter (identities suite)")
            ->check(CLI::IsMember({"H1", "H2", "H3", "H51", "H52", "all"}));
    }
    all_cmd->add_option("--max-n", o.max_n, "largest n for per-level cases");
    all_cmd->add_option("--max", o.max, "grid bound");
    all_cmd->add_option("--order", o.order, "series truncation order");
    all_cmd->add_option("--samples", o.samples, "random samples per identity");
    all_cmd->add_option("--seed", o.seed, "sampling seed");
    all_cmd->add_option("--format", o.format, "json|csv|latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    all_cmd->add_option("--out", o.out, "write the report to PATH");
    all_cmd->add_option("--jobs", o.jobs, "parallel case execution");
    all_cmd->add_option("--id", o.identity, "identity filter (identities suite)")
        ->check(CLI::IsMember({"H1", "H2", "H3", "H51", "H52", "all"}));

    CLI::App* table = app.add_subcommand("table", "print tables of exact values");
    table->require_subcommand(1);
    CLI::App* t_const = table->add_subcommand("constants", "structure constants X");
    CLI::App* t_fusion = table->add_subcommand("fusion", "fusion rules");
    CLI::App* t_weights = table->add_subcommand("weights", "weights and central charges");
    int table_max = 6;
    for (CLI::App* tc : {t_const, t_fusion, t_weights}) {
        tc->add_option("--max", table_max, "largest index");
        tc->add_option("--format", o.format, "json|csv|latex")
            ->check(CLI::IsMember({"json", "csv", "latex"}));
        tc->add_option("--out", o.out, "write to PATH");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        if (verify->parsed()) {
            bool ok = true;
            if (all_cmd->parsed()) {
                VerificationReport combined;
                combined.suite = "all";
                combined.seed = o.seed;
                combined.order = o.order;
                for (const auto& name : kAllSuites) {
                    VerificationReport rep =
                        run_cases(name, o.seed, o.order, build_suite(name, o), o.jobs);
                    for (auto& c : rep.cases) combined.cases.push_back(std::move(c));
                }
                ok = combined.all_passed();
                emit(combined, o);
            } else {
                for (const auto& name : kAllSuites) {
                    for (CLI::App* sc : suite_cmds) {
                        if (sc->parsed() && sc->get_name() == name) {
                            VerificationReport rep =
                                run_cases(name, o.seed, o.order, build_suite(name, o), o.jobs);
                            ok = rep.all_passed();
                            emit(rep, o);
                        }
                    }
                }
            }
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
            std::cerr << "elapsed: " << elapsed << " ms\n";
            return ok ? 0 : 1;
        }
        if (table->parsed()) {
            std::string text;
            if (t_const->parsed()) text = table_constants(table_max, o.format);
            if (t_fusion->parsed()) text = table_fusion(table_max, o.format);
            if (t_weights->parsed()) text = table_weights(table_max, o.format);
            if (o.out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(o.out, std::ios::binary);
                f << text;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
