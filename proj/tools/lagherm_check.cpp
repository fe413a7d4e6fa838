#include "lagherm/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace lagherm;

namespace {

const char* kind_name(SuiteKind k) {
    switch (k) {
    case SuiteKind::Exact: return "exact";
    case SuiteKind::Series: return "series";
    case SuiteKind::Quadrature: return "quadrature";
    }
    return "?";
}

void list_suites() {
    for (const auto& s : suite_registry()) {
        char tol[32] = "exact";
        if (s.kind != SuiteKind::Exact)
            std::snprintf(tol, sizeof tol, "%.0e", s.tol);
        std::printf("%-30s %-10s %-11s %-8s %s\n", s.id.c_str(), s.module.c_str(), kind_name(s.kind), tol,
                    s.anchor.c_str());
    }
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& specs) {
    std::map<std::string, double> out;
    for (const auto& spec : specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--tol expects id=value, got " + spec);
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(spec.substr(eq + 1), &used);
        } catch (const std::exception&) {
            throw UsageError("bad tolerance in " + spec);
        }
        if (used != spec.size() - eq - 1)
            throw UsageError("bad tolerance in " + spec);
        out[spec.substr(0, eq)] = v;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks Laguerre 2D and Hermite identities against independent oracles."};
    std::vector<std::string> suites{"all"};
    std::vector<std::string> tols;
    std::string format = "text", out_path;
    SuiteConfig config;
    int max_terms = 0;
    bool list = false, timing = false;

    app.add_option("--suite", suites, "suite id or 'all' (repeatable)");
    app.add_option("--seed", config.seed, "base seed");
    app.add_option("--draws", config.draws, "random draws per identity")->check(CLI::PositiveNumber);
    app.add_option("--tol", tols, "tolerance override id=value (repeatable)");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--max-terms", max_terms, "series terms per index for every suite")->check(CLI::PositiveNumber);
    app.add_option("--threads", config.threads, "worker threads, 0 for one per core")->check(CLI::NonNegativeNumber);
    app.add_flag("--list", list, "list suites and exit");
    app.add_flag("--timing", timing, "include per-row and per-suite timing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list) {
        list_suites();
        return 0;
    }

    std::vector<IdentityReport> rows;
    try {
        config.suites = suites;
        config.tol_overrides = parse_tols(tols);
        if (max_terms > 0)
            config.max_terms = max_terms;
        rows = run_suites(config);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    ReportFormat fmt = format == "json" ? ReportFormat::JSON : format == "csv" ? ReportFormat::CSV : ReportFormat::Text;
    if (out_path.empty()) {
        write_report(std::cout, rows, fmt, timing);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        write_report(out, rows, fmt, timing);
    }

    ReportSummary sum = summarize(rows);
    std::fprintf(stderr, "%zu rows, %zu failures\n", sum.rows, sum.failures);
    return sum.failures == 0 ? 0 : 1;
}
