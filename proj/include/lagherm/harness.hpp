#pragma once

#include "lagherm/exact.hpp"
#include "lagherm/report.hpp"
#include "lagherm/series.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagherm {

// Bad command line or configuration: unknown suite id, unwritable output.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SuiteKind { Exact, Series, Quadrature };

struct SuiteConfig {
    std::vector<std::string> suites{"all"};
    std::uint64_t seed = 42;
    int draws = 200;
    std::map<std::string, double> tol_overrides;
    std::optional<int> max_terms; // replaces every suite's max_terms_per_index
    int threads = 0;              // 0: one per hardware thread
};

using Params = std::vector<std::pair<std::string, std::string>>;

std::pair<std::string, std::string> param(const std::string& name, Complex v);
std::pair<std::string, std::string> param(const std::string& name, double v);
std::pair<std::string, std::string> param(const std::string& name, int v);

struct SuiteInfo;

// Handed to a suite body: the suite's private random stream plus row sinks.
class SuiteContext {
public:
    SuiteContext(const SuiteInfo& info, std::uint64_t seed, int draws, double tol, TruncationSpec trunc,
                 std::vector<IdentityReport>& rows);

    int draws() const { return draws_; }
    double tol() const { return tol_; }
    const TruncationSpec& trunc() const { return trunc_; }
    std::mt19937_64& rng() { return rng_; }

    double uniform(double lo, double hi);
    int integer(int lo, int hi); // inclusive
    // modulus uniform on [rmin, rmax], angle uniform
    Complex polar(double rmax, double rmin = 0.0);

    // rel_err = |lhs - rhs| / scale, scale defaulting to max(1, |rhs|).
    void check(Params p, Complex lhs, Complex rhs, double scale = 0.0);
    void exact(Params p, const BigRational& lhs, const BigRational& rhs);
    void exact(Params p, bool holds);
    void predicate(Params p, Complex lhs, Complex rhs, bool holds);

    // Runs body(i) for i in [0, count); an exception becomes one failing row.
    void each(int count, const std::function<void(int)>& body);
    void failure(Params p);

private:
    void push(IdentityReport r);

    const SuiteInfo& info_;
    std::mt19937_64 rng_;
    int draws_;
    double tol_;
    TruncationSpec trunc_;
    std::vector<IdentityReport>& rows_;
    std::chrono::steady_clock::time_point last_;
    Params current_;
};

struct SuiteInfo {
    std::string id;
    std::string anchor;
    std::string module;
    SuiteKind kind;
    double tol;                     // ignored for Exact
    std::vector<std::string> covers; // operations this suite exercises
    std::function<void(SuiteContext&)> run;
    int max_terms = 0;              // 0: TruncationSpec default
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& id);

// Every operation of the library modules that a suite has to exercise.
const std::vector<std::string>& operation_catalog();
// Catalog entries that no registered suite claims; empty when complete.
std::vector<std::string> uncovered_operations();

// Stream seed of one suite, a function of (seed, id) only.
std::uint64_t suite_seed(std::uint64_t seed, const std::string& id);

// Runs the selected suites; rows come back in registry order whatever the
// thread count. Throws UsageError on an unknown id or draws < 1.
std::vector<IdentityReport> run_suites(const SuiteConfig& config);

} // namespace lagherm
