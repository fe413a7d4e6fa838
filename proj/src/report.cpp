#include "lagherm/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace lagherm {

namespace {

const char* kind_name(RowKind k) {
    switch (k) {
    case RowKind::Numeric: return "numeric";
    case RowKind::Exact: return "exact";
    case RowKind::Predicate: return "predicate";
    }
    return "numeric";
}

RowKind kind_from(const std::string& s) {
    if (s == "numeric")
        return RowKind::Numeric;
    if (s == "exact")
        return RowKind::Exact;
    if (s == "predicate")
        return RowKind::Predicate;
    throw std::runtime_error("malformed report: unknown row kind '" + s + "'");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// JSON has no NaN or infinity; those become null.
nlohmann::json json_real(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

double real_from(const nlohmann::json& j) { return j.is_null() ? NAN : j.get<double>(); }

} // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty())
            out += ';';
        out += k + '=' + v;
    }
    return out;
}

ReportSummary summarize(const std::vector<IdentityReport>& rows) {
    ReportSummary sum;
    std::map<std::string, std::size_t> where;
    for (const auto& r : rows) {
        auto [it, fresh] = where.try_emplace(r.suite, sum.suites.size());
        if (fresh)
            sum.suites.push_back({r.suite, 0, 0, 0.0, 0.0});
        SuiteSummary& s = sum.suites[it->second];
        ++s.rows;
        s.elapsed += r.elapsed;
        if (!r.pass)
            ++s.failures;
        double e = std::isnan(r.rel_err) ? INFINITY : r.rel_err;
        if (r.kind == RowKind::Numeric)
            s.max_rel_err = std::max(s.max_rel_err, e);
    }
    for (const auto& s : sum.suites) {
        sum.rows += s.rows;
        sum.failures += s.failures;
        sum.max_rel_err = std::max(sum.max_rel_err, s.max_rel_err);
    }
    return sum;
}

void write_report(std::ostream& out, const std::vector<IdentityReport>& rows, ReportFormat format, bool with_timing) {
    const ReportSummary sum = summarize(rows);
    switch (format) {
    case ReportFormat::Text: {
        char buf[512];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%-4s %-34s %-22s rel=%.3e tol=%.1e lhs=", r.pass ? "ok" : "FAIL",
                          r.suite.c_str(), r.anchor.c_str(), r.rel_err, r.tol);
            out << buf << format_complex(r.lhs) << " rhs=" << format_complex(r.rhs) << " [" << join_params(r.params)
                << "]";
            if (with_timing) {
                std::snprintf(buf, sizeof buf, " %.6fs", r.elapsed);
                out << buf;
            }
            out << '\n';
        }
        out << "-- summary\n";
        for (const auto& s : sum.suites) {
            std::snprintf(buf, sizeof buf, "%-34s rows=%-6zu failures=%-4zu max_rel_err=%.3e", s.suite.c_str(), s.rows,
                          s.failures, s.max_rel_err);
            out << buf;
            if (with_timing) {
                std::snprintf(buf, sizeof buf, " time=%.3fs", s.elapsed);
                out << buf;
            }
            out << '\n';
        }
        std::snprintf(buf, sizeof buf, "total rows=%zu failures=%zu max_rel_err=%.3e\n", sum.rows, sum.failures,
                      sum.max_rel_err);
        out << buf;
        break;
    }
    case ReportFormat::CSV: {
        out << "suite,anchor,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass";
        if (with_timing)
            out << ",elapsed";
        out << '\n';
        for (const auto& r : rows) {
            out << csv_field(r.suite) << ',' << csv_field(r.anchor) << ',' << csv_field(join_params(r.params)) << ','
                << format_real(r.lhs.real()) << ',' << format_real(r.lhs.imag()) << ',' << format_real(r.rhs.real())
                << ',' << format_real(r.rhs.imag()) << ',' << format_real(r.abs_err) << ',' << format_real(r.rel_err)
                << ',' << (r.pass ? "true" : "false");
            if (with_timing)
                out << ',' << format_real(r.elapsed);
            out << '\n';
        }
        break;
    }
    case ReportFormat::JSON: {
        nlohmann::ordered_json doc;
        auto& jrows = doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["suite"] = r.suite;
            j["anchor"] = r.anchor;
            auto& p = j["params"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.params)
                p[k] = v;
            j["lhs_re"] = json_real(r.lhs.real());
            j["lhs_im"] = json_real(r.lhs.imag());
            j["rhs_re"] = json_real(r.rhs.real());
            j["rhs_im"] = json_real(r.rhs.imag());
            j["abs_err"] = json_real(r.abs_err);
            j["rel_err"] = json_real(r.rel_err);
            j["tol"] = json_real(r.tol);
            j["kind"] = kind_name(r.kind);
            j["pass"] = r.pass;
            if (with_timing)
                j["elapsed"] = r.elapsed;
            jrows.push_back(std::move(j));
        }
        auto& js = doc["summary"] = nlohmann::ordered_json::array();
        for (const auto& s : sum.suites)
            js.push_back({{"suite", s.suite},
                          {"rows", s.rows},
                          {"failures", s.failures},
                          {"max_rel_err", json_real(s.max_rel_err)}});
        doc["total"] = {{"rows", sum.rows}, {"failures", sum.failures}, {"max_rel_err", json_real(sum.max_rel_err)}};
        out << doc.dump(1) << '\n';
        break;
    }
    }
}

std::vector<IdentityReport> load_report_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed report: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw std::runtime_error("malformed report: missing rows array");
    std::vector<IdentityReport> rows;
    try {
        for (const auto& j : doc["rows"]) {
            IdentityReport r;
            r.suite = j.at("suite").get<std::string>();
            r.anchor = j.at("anchor").get<std::string>();
            for (const auto& [k, v] : j.at("params").items())
                r.params.emplace_back(k, v.get<std::string>());
            r.lhs = {real_from(j.at("lhs_re")), real_from(j.at("lhs_im"))};
            r.rhs = {real_from(j.at("rhs_re")), real_from(j.at("rhs_im"))};
            r.abs_err = real_from(j.at("abs_err"));
            r.rel_err = real_from(j.at("rel_err"));
            r.tol = real_from(j.at("tol"));
            r.kind = kind_from(j.at("kind").get<std::string>());
            r.pass = j.at("pass").get<bool>();
            if (j.contains("elapsed"))
                r.elapsed = j["elapsed"].get<double>();
            rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed report: ") + e.what());
    }
    return rows;
}

} // namespace lagherm
