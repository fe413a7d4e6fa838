#include "doctest.h"

#include "lagherm/harness.hpp"

#include <set>
#include <sstream>

using namespace lagherm;

namespace {

std::string body(const std::vector<IdentityReport>& rows, ReportFormat f, bool timing = false) {
    std::ostringstream os;
    write_report(os, rows, f, timing);
    return os.str();
}

SuiteConfig only(std::vector<std::string> ids, int draws = 20) {
    SuiteConfig c;
    c.suites = std::move(ids);
    c.draws = draws;
    return c;
}

} // namespace

TEST_CASE("every catalogued operation has a suite") {
    CHECK(uncovered_operations().empty());
    std::set<std::string> ids;
    for (const auto& s : suite_registry()) {
        CHECK(ids.insert(s.id).second);
        CHECK_FALSE(s.anchor.empty());
        if (s.kind != SuiteKind::Exact && s.id != "completeness_probe")
            CHECK(s.tol > 0.0);
    }
}

TEST_CASE("suite streams depend on seed and id only") {
    CHECK(suite_seed(42, "mehler") == suite_seed(42, "mehler"));
    CHECK(suite_seed(42, "mehler") != suite_seed(43, "mehler"));
    CHECK(suite_seed(42, "mehler") != suite_seed(42, "bilinear"));
    auto alone = run_suites(only({"mehler"}));
    auto mixed = run_suites(only({"hermite_gf", "mehler"}));
    std::vector<IdentityReport> tail(mixed.begin() + static_cast<long>(mixed.size() - alone.size()), mixed.end());
    CHECK(body(alone, ReportFormat::CSV) == body(tail, ReportFormat::CSV));
}

TEST_CASE("thread count does not change the report") {
    auto cfg = only({"mehler", "bilinear", "lagsum", "op1d_hermite", "reordering"});
    cfg.threads = 1;
    auto a = body(run_suites(cfg), ReportFormat::JSON);
    cfg.threads = 4;
    auto b = body(run_suites(cfg), ReportFormat::JSON);
    CHECK(a == b);
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(run_suites(only({"no_such_suite"})), UsageError);
    auto cfg = only({"mehler"});
    cfg.draws = 0;
    CHECK_THROWS_AS(run_suites(cfg), UsageError);
    cfg = only({"mehler"});
    cfg.tol_overrides["mehler"] = -1.0;
    CHECK_THROWS_AS(run_suites(cfg), UsageError);
    cfg.tol_overrides = {{"nope", 1e-3}};
    CHECK_THROWS_AS(run_suites(cfg), UsageError);
}

TEST_CASE("tolerance override reaches the rows") {
    auto cfg = only({"mehler"});
    cfg.tol_overrides["mehler"] = 1e-30;
    auto rows = run_suites(cfg);
    CHECK(rows.front().tol == 1e-30);
    bool any_fail = false;
    for (const auto& r : rows)
        any_fail = any_fail || !r.pass;
    CHECK(any_fail);
}

TEST_CASE("max_terms override forces truncation failures into rows") {
    auto cfg = only({"hermite_gf"});
    cfg.max_terms = 3;
    auto rows = run_suites(cfg);
    CHECK(summarize(rows).failures > 0);
}

TEST_CASE("report formats") {
    auto rows = run_suites(only({"mehler", "reordering"}, 5));
    auto csv = body(rows, ReportFormat::CSV);
    CHECK(csv.rfind("suite,anchor,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n", 0) == 0);
    CHECK(csv.find("elapsed") == std::string::npos);
    CHECK(body(rows, ReportFormat::CSV, true).find(",elapsed") != std::string::npos);
    auto text = body(rows, ReportFormat::Text);
    CHECK(text.find("-- summary") != std::string::npos);
    CHECK(text.find("time=") == std::string::npos);

    std::istringstream in(body(rows, ReportFormat::JSON));
    auto back = load_report_json(in);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].suite == rows[i].suite);
        CHECK(back[i].params == rows[i].params);
        CHECK(back[i].lhs == rows[i].lhs);
        CHECK(back[i].pass == rows[i].pass);
        CHECK(back[i].kind == rows[i].kind);
    }
    std::istringstream junk("{\"rows\": 3}");
    CHECK_THROWS_AS(load_report_json(junk), std::runtime_error);
}

TEST_CASE("summary counts") {
    std::vector<IdentityReport> rows(3);
    rows[0].suite = rows[1].suite = "a";
    rows[2].suite = "b";
    rows[0].pass = true;
    rows[1].rel_err = 0.5;
    rows[2].pass = true;
    auto s = summarize(rows);
    CHECK(s.rows == 3);
    CHECK(s.failures == 1);
    REQUIRE(s.suites.size() == 2);
    CHECK(s.suites[0].failures == 1);
    CHECK(s.max_rel_err == 0.5);
}

TEST_CASE("failing draws become rows, not exceptions") {
    // a suite body whose draws throw
    SuiteInfo info{"boom", "-", "genfun", SuiteKind::Series, 1e-9, {}, [](SuiteContext&) {}};
    std::vector<IdentityReport> rows;
    SuiteContext ctx(info, 1, 3, 1e-9, {}, rows);
    ctx.each(3, [](int i) {
        if (i == 1)
            throw TruncationError("tail too large", 1.0);
    });
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].pass);
    CHECK(join_params(rows[0].params).find("tail too large") != std::string::npos);
}
