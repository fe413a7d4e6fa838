#include "lagherm/harness.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lagherm;

namespace {

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

struct Run {
    std::vector<IdentityReport> rows;
    double seconds = 0.0;
};

Run run(std::vector<std::string> suites) {
    SuiteConfig c;
    c.suites = std::move(suites);
    auto t0 = std::chrono::steady_clock::now();
    Run r{run_suites(c), 0.0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<const IdentityReport*> rows_of(const Run& r, const std::string& suite) {
    std::vector<const IdentityReport*> out;
    for (const auto& row : r.rows)
        if (row.suite == suite)
            out.push_back(&row);
    return out;
}

// all rows pass, at least min_rows of them, tolerance no looser than tol
void suite_ok(Verdict& v, const Run& r, const std::string& suite, std::size_t min_rows, double tol) {
    auto rows = rows_of(r, suite);
    std::size_t fails = 0;
    double worst = 0.0;
    for (auto* row : rows) {
        fails += !row->pass;
        if (row->kind == RowKind::Numeric) {
            v.require(row->tol <= tol, suite + " tol " + format_real(row->tol) + " looser than " + format_real(tol));
            worst = std::max(worst, row->rel_err);
        }
    }
    v.require(rows.size() >= min_rows,
              suite + " has " + std::to_string(rows.size()) + " rows, needs " + std::to_string(min_rows));
    if (fails) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %zu failures, max rel_err %.3e", suite.c_str(), fails, worst);
        v.require(false, buf);
    }
}

// every parameter set (params minus the sample point) has >= points rows
void quadrature_shape(Verdict& v, const Run& r, const std::string& suite, std::size_t sets, std::size_t points) {
    std::map<std::string, std::size_t> groups;
    for (auto* row : rows_of(r, suite)) {
        auto p = row->params;
        if (!p.empty())
            p.pop_back();
        ++groups[join_params(p)];
    }
    std::size_t full = 0;
    for (const auto& [k, n] : groups)
        full += n >= points;
    v.require(full >= sets, suite + " has " + std::to_string(full) + " parameter sets with >= " +
                                std::to_string(points) + " points");
}

void runtime(Verdict& v, const Run& r, double limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "runtime %.1fs over %.0fs", r.seconds, limit);
    v.require(r.seconds < limit, buf);
}

std::vector<std::string> registry_ids(const std::string& module) {
    std::vector<std::string> out;
    for (const auto& s : suite_registry())
        if (s.module == module)
            out.push_back(s.id);
    return out;
}

Verdict exact_identities() {
    Verdict v;
    Run r = run({"monomial_inversion_2d", "hermite_inversion", "reordering", "laguerre_operator_identity",
                 "specialized_jacobi0", "sum_identity_9_4"});
    suite_ok(v, r, "monomial_inversion_2d", 153, 0.0);
    suite_ok(v, r, "hermite_inversion", 41, 0.0);
    suite_ok(v, r, "reordering", 169, 0.0);
    suite_ok(v, r, "laguerre_operator_identity", 81, 0.0);
    suite_ok(v, r, "specialized_jacobi0", 31, 0.0);
    suite_ok(v, r, "sum_identity_9_4", 2 * 169, 0.0);
    for (const auto& row : r.rows)
        v.require(row.kind == RowKind::Exact, row.suite + " has a non-exact row");
    runtime(v, r, 30.0);
    return v;
}

const std::set<std::string> kSingleSum = {"lagsum", "lagsum_t_zero", "lagsum_genlaguerre", "lagsum_diagonal",
                                          "lagsum_diagonal_genlaguerre", "lagsum_resummation"};
const std::set<std::string> kDecomposition = {"s10_roundtrip", "s10_decomposition"};

Verdict generating_functions() {
    Verdict v;
    std::vector<std::string> ids;
    for (const auto& id : registry_ids("genfun"))
        if (!kSingleSum.count(id) && !kDecomposition.count(id))
            ids.push_back(id);
    Run r = run(ids);
    for (const auto& id : {"mehler", "bilinear", "mixed", "even_index", "hermite2d_product_gf"})
        suite_ok(v, r, id, 200, 1e-9);
    for (const auto& id : {"mehler_factorized", "bilinear_factorized", "even_index_factorized"})
        suite_ok(v, r, id, 200, 1e-11);
    for (const auto& id : ids)
        suite_ok(v, r, id, 1, 1.0);
    runtime(v, r, 120.0);
    return v;
}

Verdict single_sums() {
    Verdict v;
    Run r = run({"lagsum", "lagsum_resummation"});
    suite_ok(v, r, "lagsum", 0, 1e-9);
    std::map<std::pair<std::string, std::string>, std::size_t> per_pair;
    for (auto* row : rows_of(r, "lagsum"))
        if (row->params.size() >= 2)
            ++per_pair[{row->params[0].second, row->params[1].second}];
    v.require(per_pair.size() == 49, "lagsum covers " + std::to_string(per_pair.size()) + " (m,n) pairs");
    for (const auto& [mn, k] : per_pair)
        v.require(k >= 50, "lagsum m=" + mn.first + " n=" + mn.second + " has " + std::to_string(k) + " rows");
    suite_ok(v, r, "lagsum_resummation", 50, 1e-10);
    return v;
}

Verdict decomposition() {
    Verdict v;
    Run r = run({"s10_decomposition", "s10_roundtrip"});
    suite_ok(v, r, "s10_decomposition", 100, 1e-10);
    suite_ok(v, r, "s10_roundtrip", 1, 1e-12);
    return v;
}

Verdict su11() {
    Verdict v;
    Run r = run(registry_ids("su11_ops"));
    suite_ok(v, r, "disentangle_det", 500, 1e-12);
    suite_ok(v, r, "disentangle_specializations", 1, 1e-14);
    std::size_t exact_rows = 0;
    for (auto* row : rows_of(r, "disentangle_specializations"))
        exact_rows += row->kind == RowKind::Predicate;
    v.require(exact_rows >= 2, "specialization matrices not checked exactly");
    for (const auto& id : {"op1d_constant", "op1d_monomial", "op1d_hermite", "op1d_gaussian", "op1d_swapped",
                           "op2d_constant", "op2d_monomial", "op2d_laguerre", "op2d_gaussian", "op2d_swapped",
                           "op2d_sigma_tau", "heat_gaussian_2d"}) {
        suite_ok(v, r, id, 180, 1e-6);
        quadrature_shape(v, r, id, 20, 9);
    }
    suite_ok(v, r, "semigroup_1d", 1, 1e-8);
    suite_ok(v, r, "semigroup_2d", 1, 1e-8);
    for (const auto& id : registry_ids("su11_ops"))
        suite_ok(v, r, id, 1, 1.0);
    runtime(v, r, 180.0);
    return v;
}

Verdict orthonormality() {
    Verdict v;
    Run r = run({"orthonormality"});
    suite_ok(v, r, "orthonormality", 625, 1e-6);
    return v;
}

Verdict poly_invariants() {
    Verdict v;
    Run r = run({"hermite_routes", "laguerre2d_routes", "laguerre2d_symmetry", "laguerre2d_scaling", "parity"});
    for (const auto& id : {"hermite_routes", "laguerre2d_routes", "laguerre2d_symmetry", "laguerre2d_scaling", "parity"})
        suite_ok(v, r, id, 200, 1e-10);
    return v;
}

int run_cli(const std::string& cli, const std::string& out) {
    std::string cmd = "'" + cli + "' --seed 42 --out '" + out + "' 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status))
        return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict determinism(const char* cli) {
    Verdict v;
    if (cli) {
        auto dir = std::filesystem::temp_directory_path();
        auto a = (dir / "lagherm_ac8_a.txt").string(), b = (dir / "lagherm_ac8_b.txt").string();
        int ea = run_cli(cli, a), eb = run_cli(cli, b);
        v.require(ea == 0, "first run exit status " + std::to_string(ea));
        v.require(eb == 0, "second run exit status " + std::to_string(eb));
        std::string sa = slurp(a), sb = slurp(b);
        v.require(!sa.empty(), "empty report");
        v.require(sa == sb, "report bodies differ");
        std::filesystem::remove(a);
        std::filesystem::remove(b);
        return v;
    }
    SuiteConfig c;
    auto first = run_suites(c), second = run_suites(c);
    std::ostringstream a, b;
    write_report(a, first, ReportFormat::Text);
    write_report(b, second, ReportFormat::Text);
    v.require(a.str() == b.str(), "report bodies differ");
    v.require(summarize(first).failures == 0, "full run has failures");
    return v;
}

} // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    struct Criterion {
        const char* name;
        Verdict (*check)();
    };
    const Criterion criteria[] = {
        {"exact identities", exact_identities},
        {"generating functions", generating_functions},
        {"single-sum formulas", single_sums},
        {"decomposition", decomposition},
        {"su(1,1) operators", su11},
        {"orthonormality", orthonormality},
        {"poly_core invariants", poly_invariants},
    };
    int failed = 0, k = 0;
    auto report = [&](const char* name, const Verdict& v) {
        std::printf("AC%d %-22s %s\n", ++k, name, v.ok ? "PASS" : "FAIL");
        for (const auto& n : v.notes)
            std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        failed += !v.ok;
    };
    for (const auto& c : criteria)
        report(c.name, c.check());
    report("determinism", determinism(cli));
    return failed == 0 ? 0 : 1;
}
