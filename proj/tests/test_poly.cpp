#include "doctest.h"
#include "support/oracles.hpp"

#include "lagherm/poly.hpp"

#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include <cmath>

using namespace lagherm;
using oracle::rel;

namespace {
const Complex I(0.0, 1.0);
const EvalRoute kRoutes[] = {EvalRoute::ExplicitSum, EvalRoute::Recurrence, EvalRoute::CrossFamily};
} // namespace

TEST_CASE("hermite values") {
    for (auto r : kRoutes) {
        CHECK(hermite(0, {2.5, 0.0}, r) == Complex(1.0));
        CHECK(std::abs(hermite(4, 0.0, r) - 12.0) < 1e-12);
        CHECK(std::abs(hermite(3, 2.0, r) - 40.0) < 1e-12);
    }
}

TEST_CASE("hermite against boost on the real line") {
    for (int n = 0; n <= 40; n += 3)
        for (double x : {-3.1, -0.4, 0.0, 0.77, 2.5}) {
            double want = boost::math::hermite(static_cast<unsigned>(n), x);
            for (auto r : kRoutes)
                CHECK(std::abs(hermite(n, x, r) - want) <= 1e-12 * std::max(1.0, hermite_magnitude(n, x)));
        }
}

TEST_CASE("hermite routes against the long double sum") {
    oracle::Gen g(11);
    for (int i = 0; i < 300; ++i) {
        int n = g.integer(0, 60);
        Complex x = g.disk(10.0);
        Complex want(oracle::hermite_sum(n, x));
        double scale = std::max(1.0, hermite_magnitude(n, x));
        CHECK(std::abs(hermite(n, x, EvalRoute::Recurrence) - want) <= 1e-12 * scale);
        CHECK(std::abs(hermite(n, x, EvalRoute::CrossFamily) - want) <= 1e-12 * scale);
    }
}

TEST_CASE("laguerre2d values") {
    for (auto r : kRoutes) {
        CHECK(rel(laguerre2d(3, 0, {2.0, 1.0}, 0.37, r), {2.0, 11.0}) < 1e-14);
        CHECK(rel(laguerre2d(2, 2, 0.0, 0.0, r), 2.0) < 1e-14);
        CHECK(rel(laguerre2d(1, 1, 2.0, 3.0, r), 5.0) < 1e-14);
    }
}

TEST_CASE("laguerre2d routes against the long double sum") {
    oracle::Gen g(12);
    for (int i = 0; i < 300; ++i) {
        int m = g.integer(0, 40), n = g.integer(0, 40);
        Complex z = g.disk(5.0), zp = g.disk(5.0);
        Complex want(oracle::laguerre2d_sum(m, n, z, zp));
        double scale = std::max(1.0, laguerre2d_magnitude({m, n}, {z, zp}));
        for (auto r : kRoutes)
            CHECK(std::abs(laguerre2d(m, n, z, zp, r) - want) <= 1e-10 * scale);
    }
}

TEST_CASE("laguerre2d symmetry, scaling and parity") {
    oracle::Gen g(13);
    for (int i = 0; i < 100; ++i) {
        int m = g.integer(0, 20), n = g.integer(0, 20);
        Complex z = g.disk(3.0), zp = g.disk(3.0), k = g.disk(2.0, 0.5);
        Complex L = laguerre2d(m, n, z, zp);
        double scale = std::max(1.0, laguerre2d_magnitude({m, n}, {z, zp}));
        CHECK(std::abs(laguerre2d(n, m, zp, z) - L) <= 1e-10 * scale);
        Complex f = std::pow(k, m - n);
        CHECK(std::abs(laguerre2d(m, n, k * z, zp / k) - f * L) <= 1e-10 * std::max(1.0, std::abs(f) * scale));
        CHECK(std::abs(laguerre2d(m, n, -z, -zp) - ((m + n) % 2 ? -L : L)) <= 1e-12 * scale);
    }
}

TEST_CASE("gen_laguerre") {
    CHECK(gen_laguerre(0, 3, {0.4, 0.2}) == Complex(1.0));
    CHECK(gen_laguerre(0, -0, 7.0) == Complex(1.0));
    CHECK(rel(gen_laguerre(1, 2, 0.5), 2.5) < 1e-15);
    // cross relation at (m,n) = (3,2), z = 1.2, z' = 0.7
    Complex z = 1.2, zp = 0.7;
    Complex via2d = laguerre2d(3, 2, z, zp) / (2.0 * z);
    CHECK(rel(gen_laguerre(2, 1, z * zp), via2d) < 1e-14);
    CHECK_THROWS_AS(gen_laguerre(2, -3, 1.0), DomainError);

    oracle::Gen g(14);
    for (int i = 0; i < 200; ++i) {
        int n = g.integer(0, 25), nu = g.integer(-n, 25);
        Complex u = g.disk(4.0);
        Complex want(oracle::gen_laguerre_sum(n, nu, u));
        CHECK(rel(gen_laguerre(n, nu, u), want) < 1e-9);
    }
    for (int n = 0; n <= 20; n += 4)
        for (unsigned a : {0u, 1u, 5u})
            CHECK(rel(gen_laguerre(n, static_cast<int>(a), 1.7), boost::math::laguerre(n, a, 1.7)) < 1e-12);
}

TEST_CASE("hermite2d and laguerre2d_function") {
    CHECK(hermite2d({0, 0}, {0.3, 1.0}, -2.0) == Complex(1.0));
    CHECK(rel(hermite2d({2, 4}, 0.0, 0.0), -24.0) < 1e-15);
    CHECK(rel(hermite2d({1, 1}, 0.5, 0.25), 0.5) < 1e-15);
    const double rpi = 1.0 / std::sqrt(M_PI);
    CHECK(rel(laguerre2d_function({0, 0}, 0.0), rpi) < 1e-15);
    CHECK(rel(laguerre2d_function({1, 1}, 0.0), -rpi) < 1e-15);
    Complex z(0.6, -1.1);
    Complex want = std::exp(-std::norm(z) / 2.0) * laguerre2d(2, 3, z, std::conj(z)) / std::sqrt(2.0 * 6.0 * M_PI);
    CHECK(rel(laguerre2d_function({2, 3}, z), want) < 1e-14);
}

TEST_CASE("norm of l_{1,0} by Simpson") {
    auto f = [](double x, double y) { return Complex(std::norm(laguerre2d_function({1, 0}, {x, y}))); };
    Complex v = oracle::simpson_2d(f, -9.0, 9.0, -9.0, 9.0, 200);
    CHECK(std::abs(v - 1.0) < 1e-8);
}

TEST_CASE("jacobi0") {
    CHECK(jacobi0(0, 0, 0) == 1);
    CHECK(jacobi0(2, 2, 2) == BigRational(-1, 2));
    CHECK(jacobi0(1, 3, 3) == 0);
    CHECK_THROWS(jacobi0(5, 2, 2));
    // row sums: (x+iy)^m (x-iy)^n at y = 0 is x^{m+n}, so sum_j P_j ... via the exact expansion
    auto row = jacobi0_row(3, 2);
    CHECK(row.size() == 6);
}

TEST_CASE("derivative_check") {
    auto d0 = derivative_check({0, 5}, {0.3, 0.4});
    CHECK(d0.analytic == Complex(0.0));
    auto d1 = derivative_check({1, 0}, {Complex(0.3, 2.0), -1.0});
    CHECK(std::abs(d1.finite_difference - 1.0) < 1e-10);
    CHECK(d1.analytic == Complex(1.0));
    auto d = derivative_check({3, 2}, {0.7, Complex(-0.4, 0.1)}, 1e-4);
    CHECK(rel(d.finite_difference, d.analytic) < 1e-6);
    CHECK_THROWS_AS(derivative_check({1, 1}, {0.0, 0.0}, 1e-2), DomainError);
}

TEST_CASE("hermite <-> laguerre2d conversion") {
    oracle::Gen g(15);
    for (int i = 0; i < 100; ++i) {
        int total = g.integer(0, 12), m = g.integer(0, total), n = total - m;
        double x = g.uniform(-2.0, 2.0), y = g.uniform(-2.0, 2.0);
        Complex z(x, y);
        Complex L(oracle::laguerre2d_sum(m, n, z, std::conj(z)));
        CHECK(std::abs(laguerre2d_from_hermite({m, n}, x, y) - L) <=
              1e-9 * std::max(1.0, laguerre2d_magnitude({m, n}, {z, std::conj(z)})));
        Complex H(oracle::hermite_sum(m, x) * oracle::hermite_sum(n, y));
        CHECK(std::abs(hermite_product_from_laguerre2d({m, n}, x, y) - H) <=
              1e-9 * std::max(1.0, hermite_magnitude(m, x) * hermite_magnitude(n, y)));
    }
}

TEST_CASE("index bound") {
    CHECK_THROWS_AS(hermite(kMaxPolyIndex + 1, 0.0), IndexError);
    CHECK_THROWS_AS(laguerre2d(-1, 0, 0.0, 0.0), IndexError);
    CHECK_THROWS_AS(laguerre2d(0, 0, Complex(NAN, 0.0), 0.0), DomainError);
}
