#include "doctest.h"
#include "support/oracles.hpp"

#include "lagherm/genfun.hpp"
#include "lagherm/poly.hpp"
#include "lagherm/su11.hpp"

#include <cmath>

using namespace lagherm;
using oracle::rel;

namespace {

const Complex I(0.0, 1.0);

Complex gauss1(Complex w, double x) { return std::exp(-x * x / w) / std::sqrt(M_PI * w); }

} // namespace

TEST_CASE("disentangle at the origin and at the two specializations") {
    auto id = disentangle({0.0, 0.0, 0.0});
    CHECK(id.kappa == Complex(1.0));
    CHECK(id.lambda == Complex(0.0));
    CHECK(id.mu == Complex(0.0));
    CHECK(id.nu == Complex(1.0));
    Complex s(0.5, 0.25), r = 2.0;
    auto a = disentangle({s / 2.0, I * s / r, -2.0 * s / (r * r)});
    CHECK(a.kappa == 1.0 + s / r);
    CHECK(a.lambda == s / 2.0);
    CHECK(a.mu == -2.0 * s / (r * r));
    CHECK(a.nu == 1.0 - s / r);
    auto b = disentangle({s, I * s / r, -s / (r * r)});
    CHECK(b.kappa == 1.0 + s / r);
    CHECK(b.lambda == s);
    CHECK(b.mu == -s / (r * r));
    CHECK(b.nu == 1.0 - s / r);
}

TEST_CASE("disentangle matches the exponential of the generator") {
    oracle::Gen g(41);
    for (int i = 0; i < 100; ++i) {
        DisentangleInput in{g.disk(1.2), g.disk(1.2), g.disk(1.2)};
        if (i % 4 == 0)
            in.zeta = (in.eta * in.eta + std::pow(g.disk(1e-6), 2)) / (in.xi == 0.0 ? 1.0 : in.xi);
        auto u = disentangle(in);
        Mat2 gen = generator_matrix(in);
        oracle::M2 a{gen[0], gen[1], gen[2], gen[3]};
        auto e = oracle::expm_taylor(a);
        CHECK(std::abs(u.det() - 1.0) < 1e-12);
        // exp of the generator is the unimodular matrix up to the orientation of the representation
        Mat2 ex = expm2(gen);
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(ex[k] - Complex(e[k])) < 1e-12);
        CHECK(disentangle_product_residual(in) < 1e-12);
        Complex eps = std::sqrt(in.xi * in.zeta - in.eta * in.eta);
        auto p = disentangle_with_root(in, eps), q = disentangle_with_root(in, -eps);
        CHECK(p.kappa == q.kappa);
        CHECK(p.mu == q.mu);
    }
}

TEST_CASE("1D convolution oracle") {
    auto one = [](double) { return Complex(1.0); };
    CHECK(rel(gauss_conv_1d_oracle({0.6, 0.2}, 0.4, one, gaussian_window(0.4, (1.0 / Complex(0.6, 0.2)).real())), 1.0) <
          1e-12);
    // two unit-width Gaussians: widths add
    for (double x : {-1.0, 0.0, 0.8}) {
        Complex v = gauss_conv_1d_oracle(1.0, x, [](double y) { return gauss1(1.0, y); }, gaussian_window(x / 2, 2.0));
        CHECK(rel(v, std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI)) < 1e-12);
    }
}

TEST_CASE("1D operator identity for Hermite weights against Simpson") {
    ConvParams1D p{1.0, 0.5, 0.2};
    for (double x : {-1.0, 0.0, 1.5}) {
        auto v = op_identity_1d(p, OpKind1D::Hermite, 3, x);
        auto integrand = [&](double y) {
            return std::exp(-(x - y) * (x - y) / 0.5) / std::sqrt(M_PI * 0.5) * std::exp(-(y - 0.2) * (y - 0.2)) *
                   Complex(oracle::hermite_sum(3, y));
        };
        Complex want = oracle::simpson(integrand, -12.0, 12.0);
        CHECK(rel(v.oracle, want) < 1e-7);
        CHECK(rel(v.closed, want) < 1e-7);
        CHECK(rel(v.closed_flipped, v.closed) < 1e-12);
    }
    auto c = op_identity_1d({1.0, 1.0, 0.0}, OpKind1D::Constant, 0, 0.3);
    CHECK(rel(c.closed, gauss1(2.0, 0.3)) < 1e-14);
    auto m0 = op_identity_1d({0.8, 0.3, 0.0}, OpKind1D::Monomial, 0, 0.6);
    CHECK(rel(m0.closed, std::sqrt(0.8 / 1.1) * std::exp(-0.36 / 1.1)) < 1e-14);
}

TEST_CASE("2D operator identity for Laguerre weights against Simpson") {
    ConvParams2D p{1.0, 0.4, 0.0, 0.0};
    for (Complex z : {Complex(0.0, 0.0), Complex(1.0, 0.5), Complex(-0.7, 1.2)}) {
        auto v = op_identity_2d(p, OpKind2D::Laguerre2D, 2, 1, z);
        auto integrand = [&](double x, double y) {
            Complex z0(x, y);
            return std::exp(-std::norm(z - z0) / 0.4) / (M_PI * 0.4) * std::exp(-std::norm(z0)) *
                   Complex(oracle::laguerre2d_sum(2, 1, z0, std::conj(z0)));
        };
        Complex want = oracle::simpson_2d(integrand, -8.0, 8.0, -8.0, 8.0, 200);
        CHECK(rel(v.oracle, want) < 1e-6);
        CHECK(rel(v.closed, want) < 1e-6);
    }
    auto c = op_identity_2d({0.7, 0.5, 0.0, 0.0}, OpKind2D::Constant, 0, 0, {0.3, 0.1});
    Complex w = 1.2;
    CHECK(rel(c.closed, std::exp(-std::norm(Complex(0.3, 0.1)) / w) / (M_PI * w)) < 1e-14);
}

TEST_CASE("sigma-tau Gaussian at s = -1 is the even-index function") {
    Complex sigma(0.3, 0.1), tau(-0.2, 0.4), z(0.5, 0.2), zp(-0.3, 0.6);
    CHECK(rel(sigma_tau_closed(-1.0, sigma * sigma, tau * tau, z, zp), even_index_rhs(sigma, tau, z, zp)) < 1e-13);
    auto v = op_identity_sigma_tau({0.5, 0.1}, {0.3, 0.2}, {0.1, -0.2}, {0.4, 0.3});
    CHECK(rel(v.series, v.closed) < 1e-10);
    CHECK(rel(v.oracle, v.closed) < 1e-8);
}

TEST_CASE("semigroup and delta limit") {
    auto a = semigroup_1d({1.0, 0.1}, {0.3, 0.1}, {0.4, -0.1}, 0.3);
    CHECK(rel(a.nested, a.closed) < 1e-8);
    CHECK(rel(a.direct, a.closed) < 1e-8);
    auto b = semigroup_2d({1.0, 0.1}, {0.3, 0.1}, {0.4, -0.1}, {0.3, 0.2});
    CHECK(rel(b.nested, b.closed) < 1e-8);
    CHECK(rel(b.direct, b.closed) < 1e-8);
    double prev = 1.0;
    for (double r : {1e-2, 1e-3, 1e-4}) {
        auto d = delta_limit_1d(r, 0.5, 0.2, 0.5);
        CHECK(rel(d.oracle, d.closed) < 1e-8);
        double diff = std::abs(d.closed - d.limit);
        CHECK(diff < prev);
        prev = diff;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("heat flow of a 2D Gaussian") {
    auto [o, c] = heat_gaussian_2d({0.5, 0.2}, {0.8, 0.1}, {0.3, 0.6});
    CHECK(rel(o, c) < 1e-8);
    auto [series, closed] = taylor_heat_check({0.5, 0.1}, {0.7, 0.2}, {0.4, 0.3}, {0.2, -0.5});
    CHECK(rel(series, closed) < 1e-10);
}

TEST_CASE("scaling operator") {
    for (auto k : {ScalingKind::Monomial, ScalingKind::Hermite, ScalingKind::Gaussian}) {
        auto v = scaling_operator_check(0.0, k, 4, 0.9);
        CHECK(rel(v.series, v.direct) < 1e-14);
    }
    Complex g(0.1, 0.3), x(0.8, -0.2);
    auto m = scaling_operator_check(g, ScalingKind::Monomial, 5, x);
    CHECK(rel(m.direct, std::exp(5.0 * g) * std::pow(x, 5)) < 1e-14);
    auto ga = scaling_operator_check(0.2, ScalingKind::Gaussian, 0, 1.3);
    CHECK(rel(ga.series, ga.direct) < 1e-12);
    auto l = scaling_operator_check(g, ScalingKind::Laguerre2D, 3, x, {0.2, 0.4});
    CHECK(rel(l.series, l.direct) < 1e-12);
}

TEST_CASE("gram matrices") {
    auto h = hermite_function_gram(6);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(std::abs(h[i * 7 + j] - (i == j ? 1.0 : 0.0)) < 1e-10);
}
