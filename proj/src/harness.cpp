#include "lagherm/harness.hpp"

#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace lagherm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const double kTwoPi = 2.0 * std::acos(-1.0);

} // namespace

std::pair<std::string, std::string> param(const std::string& name, Complex v) { return {name, format_complex(v)}; }
std::pair<std::string, std::string> param(const std::string& name, double v) { return {name, format_real(v)}; }
std::pair<std::string, std::string> param(const std::string& name, int v) { return {name, std::to_string(v)}; }

std::uint64_t suite_seed(std::uint64_t seed, const std::string& id) { return splitmix64(seed ^ splitmix64(fnv1a(id))); }

SuiteContext::SuiteContext(const SuiteInfo& info, std::uint64_t seed, int draws, double tol, TruncationSpec trunc,
                           std::vector<IdentityReport>& rows)
    : info_(info), rng_(seed), draws_(draws), tol_(tol), trunc_(trunc), rows_(rows),
      last_(std::chrono::steady_clock::now()) {}

double SuiteContext::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

int SuiteContext::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Complex SuiteContext::polar(double rmax, double rmin) {
    double r = uniform(rmin, rmax);
    return std::polar(r, uniform(0.0, kTwoPi));
}

void SuiteContext::push(IdentityReport r) {
    auto now = std::chrono::steady_clock::now();
    r.suite = info_.id;
    r.anchor = info_.anchor;
    r.elapsed = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    rows_.push_back(std::move(r));
}

void SuiteContext::check(Params p, Complex lhs, Complex rhs, double scale) {
    IdentityReport r;
    r.params = std::move(p);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / (scale > 0.0 ? scale : std::max(1.0, std::abs(rhs)));
    r.tol = tol_;
    r.kind = RowKind::Numeric;
    r.pass = is_finite(lhs) && is_finite(rhs) && r.rel_err <= tol_;
    push(std::move(r));
}

void SuiteContext::exact(Params p, const BigRational& lhs, const BigRational& rhs) {
    IdentityReport r;
    r.params = std::move(p);
    r.lhs = lhs.get_d();
    r.rhs = rhs.get_d();
    r.pass = lhs == rhs;
    r.abs_err = r.pass ? 0.0 : std::abs(r.lhs - r.rhs);
    r.rel_err = r.pass ? 0.0 : 1.0;
    r.kind = RowKind::Exact;
    push(std::move(r));
}

void SuiteContext::exact(Params p, bool holds) {
    IdentityReport r;
    r.params = std::move(p);
    r.lhs = holds ? 1.0 : 0.0;
    r.rhs = 1.0;
    r.pass = holds;
    r.abs_err = r.rel_err = holds ? 0.0 : 1.0;
    r.kind = RowKind::Exact;
    push(std::move(r));
}

void SuiteContext::predicate(Params p, Complex lhs, Complex rhs, bool holds) {
    IdentityReport r;
    r.params = std::move(p);
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = holds;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = holds ? 0.0 : 1.0;
    r.kind = RowKind::Predicate;
    push(std::move(r));
}

void SuiteContext::each(int count, const std::function<void(int)>& body) {
    for (int i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (const std::exception& e) {
            failure({{"draw", std::to_string(i)}, {"error", e.what()}});
        }
    }
}

void SuiteContext::failure(Params p) {
    IdentityReport r;
    r.params = std::move(p);
    r.lhs = r.rhs = NAN;
    r.abs_err = r.rel_err = NAN;
    r.tol = tol_;
    r.pass = false;
    push(std::move(r));
}

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = [] {
        std::vector<SuiteInfo> r;
        register_poly_suites(r);
        register_exact_suites(r);
        register_genfun_suites(r);
        register_su11_suites(r);
        return r;
    }();
    return registry;
}

const SuiteInfo* find_suite(const std::string& id) {
    for (const auto& s : suite_registry())
        if (s.id == id)
            return &s;
    return nullptr;
}

const std::vector<std::string>& operation_catalog() {
    static const std::vector<std::string> ops = {
        "poly_core.hermite", "poly_core.laguerre2d", "poly_core.gen_laguerre", "poly_core.hermite2d",
        "poly_core.laguerre2d_function", "poly_core.jacobi0", "poly_core.derivative_check",
        "exact_id.check_monomial_inversion_2d", "exact_id.check_hermite_inversion", "exact_id.check_reordering",
        "exact_id.check_laguerre_operator_identity", "exact_id.sum_identity", "exact_id.check_specialized_jacobi0",
        "genfun.gf_hermite", "genfun.gf_mehler", "genfun.gf_even_odd_hermite", "genfun.gf_factherm",
        "genfun.gf_simple_laguerre2d", "genfun.gf_bilinear_laguerre2d", "genfun.gf_hermite2d_product",
        "genfun.gf_mixed", "genfun.gf_even_index_laguerre2d", "genfun.gf_lagsum", "genfun.decompose_coords_s10",
        "genfun.completeness_limit_probe", "su11_ops.disentangle", "su11_ops.gauss_conv_1d_oracle",
        "su11_ops.op_identity_1d", "su11_ops.gauss_conv_2d_oracle", "su11_ops.op_identity_2d",
        "su11_ops.scaling_operator_check",
    };
    return ops;
}

std::vector<std::string> uncovered_operations() {
    std::set<std::string> covered;
    for (const auto& s : suite_registry())
        for (const auto& c : s.covers)
            covered.insert(s.module + "." + c);
    std::vector<std::string> missing;
    for (const auto& op : operation_catalog())
        if (!covered.count(op))
            missing.push_back(op);
    return missing;
}

std::vector<IdentityReport> run_suites(const SuiteConfig& config) {
    if (config.draws < 1)
        throw UsageError("draws must be at least 1");
    std::vector<const SuiteInfo*> selected;
    const bool all = std::find(config.suites.begin(), config.suites.end(), "all") != config.suites.end();
    if (all) {
        for (const auto& s : suite_registry())
            selected.push_back(&s);
    } else {
        for (const auto& id : config.suites) {
            const SuiteInfo* s = find_suite(id);
            if (!s)
                throw UsageError("unknown suite: " + id);
            if (std::find(selected.begin(), selected.end(), s) == selected.end())
                selected.push_back(s);
        }
    }
    for (const auto& [id, tol] : config.tol_overrides) {
        if (!find_suite(id))
            throw UsageError("unknown suite: " + id);
        if (!(tol > 0.0))
            throw UsageError("tolerance for " + id + " must be positive");
    }

    std::vector<std::vector<IdentityReport>> per_suite(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            const SuiteInfo& info = *selected[i];
            TruncationSpec trunc;
            if (info.max_terms > 0)
                trunc.max_terms_per_index = info.max_terms;
            if (config.max_terms)
                trunc.max_terms_per_index = *config.max_terms;
            double tol = info.tol;
            if (auto it = config.tol_overrides.find(info.id); it != config.tol_overrides.end())
                tol = it->second;
            SuiteContext ctx(info, suite_seed(config.seed, info.id), config.draws, tol, trunc, per_suite[i]);
            try {
                info.run(ctx);
            } catch (const std::exception& e) {
                ctx.failure({{"error", e.what()}});
            }
        }
    };
    unsigned n = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    n = std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(selected.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::vector<IdentityReport> rows;
    for (auto& v : per_suite)
        for (auto& r : v)
            rows.push_back(std::move(r));
    return rows;
}

} // namespace lagherm
