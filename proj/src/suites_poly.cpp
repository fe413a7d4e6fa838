#include "suites.hpp"

#include "lagherm/poly.hpp"
#include "lagherm/su11.hpp"

#include <cmath>

namespace lagherm {

namespace {

double lmag(int m, int n, Complex z, Complex zp) { return laguerre2d_magnitude({m, n}, {z, zp}); }

void hermite_routes(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int n = c.integer(0, 60);
        Complex x = c.polar(10.0);
        Complex ref = hermite(n, x, EvalRoute::ExplicitSum);
        double scale = std::max(1.0, hermite_magnitude(n, x));
        c.check({param("n", n), param("x", x), {"route", "recurrence"}}, hermite(n, x, EvalRoute::Recurrence), ref,
                scale);
        c.check({param("n", n), param("x", x), {"route", "cross"}}, hermite(n, x, EvalRoute::CrossFamily), ref, scale);
    });
}

void laguerre_routes(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 40), n = c.integer(0, 40);
        Complex z = c.polar(5.0), zp = c.polar(5.0);
        Complex ref = laguerre2d(m, n, z, zp, EvalRoute::ExplicitSum);
        double scale = std::max(1.0, lmag(m, n, z, zp));
        Params p{param("m", m), param("n", n), param("z", z), param("zp", zp)};
        auto p1 = p, p2 = p;
        p1.emplace_back("route", "recurrence");
        p2.emplace_back("route", "cross");
        c.check(p1, laguerre2d(m, n, z, zp, EvalRoute::Recurrence), ref, scale);
        c.check(p2, laguerre2d(m, n, z, zp, EvalRoute::CrossFamily), ref, scale);
    });
}

void laguerre_symmetry(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 20), n = c.integer(0, 20);
        Complex z = c.polar(5.0), zp = c.polar(5.0);
        c.check({param("m", m), param("n", n), param("z", z), param("zp", zp)}, laguerre2d(n, m, zp, z),
                laguerre2d(m, n, z, zp), std::max(1.0, lmag(m, n, z, zp)));
    });
}

void laguerre_scaling(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 20), n = c.integer(0, 20);
        Complex z = c.polar(3.0), zp = c.polar(3.0), kappa = c.polar(2.0, 0.5);
        Complex f = std::pow(kappa, m - n);
        c.check({param("m", m), param("n", n), param("z", z), param("zp", zp), param("kappa", kappa)},
                laguerre2d(m, n, kappa * z, zp / kappa), f * laguerre2d(m, n, z, zp),
                std::max(1.0, std::abs(f) * lmag(m, n, z, zp)));
    });
}

void parity(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 30), n = c.integer(0, 30);
        Complex z = c.polar(4.0), zp = c.polar(4.0);
        double sign = (m + n) % 2 ? -1.0 : 1.0;
        c.check({param("m", m), param("n", n), param("z", z), param("zp", zp)}, laguerre2d(m, n, -z, -zp),
                sign * laguerre2d(m, n, z, zp), std::max(1.0, lmag(m, n, z, zp)));
        c.check({param("n", n), param("x", z)}, hermite(n, -z), (n % 2 ? -1.0 : 1.0) * hermite(n, z),
                std::max(1.0, hermite_magnitude(n, z)));
    });
}

void gen_laguerre_cross(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 20), n = c.integer(0, 20);
        Complex z = c.polar(2.0, 0.3), zp = c.polar(2.0, 0.3);
        Complex L = laguerre2d(m, n, z, zp, EvalRoute::ExplicitSum);
        double mag = lmag(m, n, z, zp);
        Params p{param("m", m), param("n", n), param("z", z), param("zp", zp)};
        if (m >= n) {
            Complex f = (n % 2 ? -1.0 : 1.0) / (std::tgamma(n + 1.0) * std::pow(z, m - n));
            c.check(p, gen_laguerre(n, m - n, z * zp), f * L, std::max(1.0, std::abs(f) * mag));
        } else {
            // m <-> n swapped form
            Complex f = (m % 2 ? -1.0 : 1.0) / (std::tgamma(m + 1.0) * std::pow(zp, n - m));
            c.check(p, gen_laguerre(m, n - m, z * zp), f * L, std::max(1.0, std::abs(f) * mag));
        }
    });
}

void special_values(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 25), n = c.integer(0, 25);
        Complex z = c.polar(2.0), zp = c.polar(2.0);
        c.check({param("m", m), param("z", z), {"case", "L_m0"}}, laguerre2d(m, 0, z, zp), std::pow(z, m));
        c.check({param("n", n), param("zp", zp), {"case", "L_0n"}}, laguerre2d(0, n, z, zp), std::pow(zp, n));
        Complex origin = m == n ? Complex((n % 2 ? -1.0 : 1.0) * std::tgamma(n + 1.0)) : Complex(0.0);
        c.check({param("m", m), param("n", n), {"case", "origin"}}, laguerre2d(m, n, 0.0, 0.0), origin);
        if (m >= n) {
            Complex v = (n % 2 ? -1.0 : 1.0) * std::tgamma(m + 1.0) / std::tgamma(m - n + 1.0) * std::pow(z, m - n);
            c.check({param("m", m), param("n", n), param("z", z), {"case", "zp_zero"}}, laguerre2d(m, n, z, 0.0), v);
        }
    });
}

void derivative(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 10), n = c.integer(0, 10);
        Complex z = c.polar(2.0), zp = c.polar(2.0);
        auto d = derivative_check({m, n}, {z, zp}, 1e-5);
        double scale = m == 0 ? 1.0 : std::max(1.0, m * lmag(m - 1, n, z, zp));
        c.check({param("m", m), param("n", n), param("z", z), param("zp", zp)}, d.finite_difference, d.analytic,
                scale);
    });
}

void hermite_laguerre_conversion(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int total = c.integer(0, 12);
        int m = c.integer(0, total), n = total - m;
        double x = c.uniform(-2.0, 2.0), y = c.uniform(-2.0, 2.0);
        Complex z(x, y);
        Params p{param("m", m), param("n", n), param("x", x), param("y", y)};
        auto p1 = p, p2 = p;
        p1.emplace_back("direction", "L_from_H");
        p2.emplace_back("direction", "H_from_L");
        c.check(p1, laguerre2d_from_hermite({m, n}, x, y), laguerre2d(m, n, z, std::conj(z)),
                std::max(1.0, lmag(m, n, z, std::conj(z))));
        c.check(p2, hermite_product_from_laguerre2d({m, n}, x, y), hermite(m, x) * hermite(n, y),
                std::max(1.0, hermite_magnitude(m, x) * hermite_magnitude(n, y)));
    });
}

void hermite2d_def(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 30), n = c.integer(0, 30);
        Complex x = c.polar(3.0), y = c.polar(3.0);
        c.check({param("m", m), param("n", n), param("x", x), param("y", y)}, hermite2d({m, n}, x, y),
                hermite(m, x, EvalRoute::ExplicitSum) * hermite(n, y, EvalRoute::ExplicitSum),
                std::max(1.0, hermite_magnitude(m, x) * hermite_magnitude(n, y)));
    });
}

void laguerre2d_function_def(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 20), n = c.integer(0, 20);
        Complex z = c.polar(4.0);
        Complex zs = std::conj(z);
        double norm = 1.0 / std::sqrt(std::tgamma(m + 1.0) * std::tgamma(n + 1.0) * std::acos(-1.0));
        double env = norm * std::exp(-std::norm(z) / 2.0);
        c.check({param("m", m), param("n", n), param("z", z)}, laguerre2d_function({m, n}, z),
                env * laguerre2d(m, n, z, zs, EvalRoute::ExplicitSum), std::max(1.0, env * lmag(m, n, z, zs)));
    });
}

void orthonormality(SuiteContext& c) {
    const int top = 4, side = top + 1, K = side * side;
    std::vector<Complex> gram = laguerre2d_function_gram(top);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            c.check({param("k", i / side), param("l", i % side), param("m", j / side), param("n", j % side)},
                    gram[static_cast<std::size_t>(i) * K + j], i == j ? 1.0 : 0.0);
}

} // namespace

void register_poly_suites(std::vector<SuiteInfo>& r) {
    const SuiteKind S = SuiteKind::Series;
    r.push_back({"hermite_routes", "Eq. (2.2)", "poly_core", S, 1e-12, {"hermite"}, hermite_routes});
    r.push_back({"laguerre2d_routes", "Eq. (1.6)", "poly_core", S, 1e-10, {"laguerre2d"}, laguerre_routes});
    r.push_back({"laguerre2d_symmetry", "Eq. (4.1)", "poly_core", S, 1e-10, {"laguerre2d"}, laguerre_symmetry});
    r.push_back({"laguerre2d_scaling", "Eq. (4.1)", "poly_core", S, 1e-10, {"laguerre2d"}, laguerre_scaling});
    r.push_back({"parity", "Eq. (1.2)", "poly_core", S, 1e-10, {"laguerre2d", "hermite"}, parity});
    r.push_back({"gen_laguerre_cross", "Eq. (1.7)", "poly_core", S, 1e-10, {"gen_laguerre"}, gen_laguerre_cross});
    r.push_back({"laguerre2d_special_values", "Eq. (1.4)", "poly_core", S, 1e-12, {"laguerre2d"}, special_values});
    r.push_back({"derivative", "Eq. (1.5)", "poly_core", S, 1e-6, {"derivative_check"}, derivative});
    r.push_back({"hermite_laguerre_conversion", "Eq. (1.11)", "poly_core", S, 1e-9, {"jacobi0"},
                 hermite_laguerre_conversion});
    r.push_back({"hermite2d_product", "Eq. (6.1)", "poly_core", S, 1e-12, {"hermite2d"}, hermite2d_def});
    r.push_back({"laguerre2d_function", "Eq. (5.7)", "poly_core", S, 1e-12, {"laguerre2d_function"},
                 laguerre2d_function_def});
    r.push_back({"orthonormality", "Eq. (5.8)", "poly_core", SuiteKind::Quadrature, 1e-6, {"laguerre2d_function"},
                 orthonormality});
}

} // namespace lagherm
