#include "doctest.h"
#include "support/oracles.hpp"

#include "lagherm/genfun.hpp"

#include <cmath>

using namespace lagherm;
using oracle::CL;
using oracle::rel;

namespace {

const Complex I(0.0, 1.0);

long double fact(int n) {
    long double f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

CL cpow(CL x, int e) {
    CL r = 1;
    for (int i = 0; i < e; ++i)
        r *= x;
    return r;
}

// sum_{m,n<N} s^m t^n/(m!n!) L_{m,n}(z,z') L_{m,n}(w',w)
Complex bilinear_partial(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp, int N) {
    CL sum = 0;
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
            sum += cpow(s, m) * cpow(t, n) / (fact(m) * fact(n)) * oracle::laguerre2d_sum(m, n, z, zp) *
                   oracle::laguerre2d_sum(m, n, wp, w);
    return Complex(sum);
}

} // namespace

TEST_CASE("hermite generating function") {
    auto a = gf_hermite(0.0, 1.7);
    CHECK(rel(a.lhs, 1.0) < 1e-15);
    CHECK(rel(a.rhs, 1.0) < 1e-15);
    CHECK(rel(gf_hermite(0.3, 1.1).rhs, std::exp(0.57)) < 1e-15);
    CL partial = 0;
    for (int n = 0; n < 80; ++n)
        partial += cpow(CL(0, 0.5), n) / fact(n) * oracle::hermite_sum(n, 2.0L);
    auto b = gf_hermite(0.5 * I, 2.0);
    CHECK(rel(b.lhs, Complex(partial)) < 1e-12);
    CHECK(rel(b.lhs, b.rhs) < 1e-12);
}

TEST_CASE("mehler") {
    auto z = gf_mehler(0.0, 0.3, -0.8);
    CHECK(rel(z.lhs, 1.0) < 1e-15);
    CHECK(rel(z.rhs_direct, 1.0) < 1e-15);
    CHECK(rel(z.rhs_factorized, 1.0) < 1e-15);
    CHECK(rel(mehler_rhs(0.45, 1.3, 0.0), even_hermite_rhs(0.45, 1.3)) < 1e-14);

    CL partial = 0;
    for (int n = 0; n < 120; ++n)
        partial += cpow(0.3L, n) / fact(n) * oracle::hermite_sum(n, 0.8L) * oracle::hermite_sum(n, -1.2L);
    auto v = gf_mehler(0.6, 0.8, -1.2);
    CHECK(rel(v.lhs, Complex(partial)) < 1e-10);
    CHECK(rel(v.rhs_direct, Complex(partial)) < 1e-10);
    CHECK(rel(v.rhs_factorized, Complex(partial)) < 1e-10);
    CHECK_THROWS_AS(gf_mehler(1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("even and odd hermite") {
    auto z = gf_even_odd_hermite(0.0, 0.9);
    CHECK(rel(z.even->lhs, 1.0) < 1e-15);
    CHECK(std::abs(z.odd->lhs) < 1e-15);
    double t = 0.7;
    CHECK(rel(gf_even_odd_hermite(t, 0.0).cosh_form.rhs, std::exp(-t * t)) < 1e-15);
    CL c = 0;
    for (int m = 0; m < 60; ++m)
        c += cpow(CL(t), 2 * m) / fact(2 * m) * oracle::hermite_sum(2 * m, 0.0L);
    CHECK(rel(gf_even_odd_hermite(t, 0.0).cosh_form.lhs, Complex(c)) < 1e-13);
    auto v = gf_even_odd_hermite(0.4, 1.3);
    CHECK(rel(v.even->lhs, v.even->rhs) < 1e-11);
    CHECK(rel(v.odd->lhs, v.odd->rhs) < 1e-11);
    CHECK(rel(v.cosh_form.lhs, v.cosh_form.rhs) < 1e-11);
    CHECK(rel(v.sinh_form.lhs, v.sinh_form.rhs) < 1e-11);
    CHECK_FALSE(gf_even_odd_hermite(1.5, 0.2).even.has_value());
}

TEST_CASE("factorized hermite products") {
    auto a = gf_factherm(0, 0.4, 0.9);
    CHECK(rel(a.lhs, 1.0) < 1e-15);
    CHECK(rel(a.rhs_direct, 1.0) < 1e-15);
    auto b = gf_factherm(1, 0.6, 0.6);
    CHECK(rel(b.lhs, 4.0 * 0.36) < 1e-15);
    CHECK(rel(b.rhs_direct, b.lhs) < 1e-14);
    Complex want(oracle::hermite_sum(6, 0.9L) * oracle::hermite_sum(6, -0.3L));
    auto c = gf_factherm(6, 0.9, -0.3);
    CHECK(rel(c.rhs_direct, want) < 1e-10);
    CHECK(rel(c.rhs_factorized, want) < 1e-10);
}

TEST_CASE("simple laguerre 2d generating function") {
    auto z = gf_simple_laguerre2d(0.0, 0.0, 1.0, 2.0);
    CHECK(rel(z.lhs, 1.0) < 1e-15);
    Complex a(0.4, 0.3), b(-0.2, 0.8);
    CHECK(rel(gf_simple_laguerre2d(b, a, a, b).rhs, std::exp(a * b)) < 1e-14);
    Complex s = 0.5, t = -0.3 * I, zz(1.0, 1.0), zp = 0.2;
    CL partial = 0;
    for (int m = 0; m < 40; ++m)
        for (int n = 0; n < 40; ++n)
            partial += cpow(s, m) * cpow(t, n) / (fact(m) * fact(n)) * oracle::laguerre2d_sum(m, n, zz, zp);
    auto v = gf_simple_laguerre2d(s, t, zz, zp);
    CHECK(rel(v.lhs, Complex(partial)) < 1e-11);
    CHECK(rel(v.rhs, Complex(partial)) < 1e-11);
    auto one = gf_single_index_laguerre2d(3, 0.4, zz, zp);
    CHECK(rel(one.rhs, std::pow(zz - 0.4, 3) * std::exp(0.4 * zp)) < 1e-14);
    CHECK(rel(one.lhs, one.rhs) < 1e-12);
}

TEST_CASE("bilinear generating function") {
    auto z = gf_bilinear_laguerre2d(0.0, 0.0, 1.0, 0.5, 0.2, 0.3);
    CHECK(rel(z.lhs, 1.0) < 1e-15);
    CHECK(rel(z.rhs_direct, 1.0) < 1e-15);
    CHECK(rel(z.rhs_factorized, 1.0) < 1e-15);
    Complex s = 0.4, t = 0.5, zz(1.0, 0.5), zp = 0.3, w = -0.2, wp = 0.8 * I;
    CHECK(rel(bilinear_rhs(s, t, zz, zp, 0.0, 0.0), laguerre_gf_rhs(s * t, zz * zp)) < 1e-15);
    Complex want = bilinear_partial(s, t, zz, zp, w, wp, 80);
    auto v = gf_bilinear_laguerre2d(s, t, zz, zp, w, wp);
    CHECK(rel(v.lhs, want) < 1e-10);
    CHECK(rel(v.rhs_direct, want) < 1e-10);
    CHECK(rel(v.rhs_factorized, want) < 1e-10);
    CHECK(rel(bilinear_rhs_factorized(-std::sqrt(s), -std::sqrt(t), zz, zp, w, wp), v.rhs_direct) < 1e-12);
    CHECK_THROWS_AS(gf_bilinear_laguerre2d(2.0, 0.5, zz, zp, w, wp), DomainError);
}

TEST_CASE("bilinear property draws") {
    oracle::Gen g(31);
    for (int i = 0; i < 10; ++i) {
        Complex s = g.disk(0.6), t = g.disk(0.6), z = g.disk(1.5), zp = g.disk(1.5), w = g.disk(1.5),
                wp = g.disk(1.5);
        Complex want = bilinear_partial(s, t, z, zp, w, wp, 60);
        CHECK(rel(bilinear_rhs(s, t, z, zp, w, wp), want) < 1e-9);
    }
}

TEST_CASE("limit of the bilinear function") {
    auto p = bilinear_limit_probe(1e-3, 0.4, -0.3, {0.2, 0.5}, 1.1, 0.7, {0.3, -0.6});
    CHECK(p.rel_diff < 1e-2);
    CHECK(rel(p.simple, std::exp(0.4 * Complex(0.2, 0.5) - 0.3 * 1.1 + 0.12)) < 1e-14);
}

TEST_CASE("hermite 2d product") {
    auto z = gf_hermite2d_product(0.0, 0.0, 0.1, 0.2, 0.3, 0.4);
    CHECK(rel(z.lhs, 1.0) < 1e-15);
    Complex s = 0.5, t = -0.4;
    auto v = gf_hermite2d_product(s, t, 1.0, 0.2, -0.7, 0.9);
    CHECK(rel(v.rhs_direct, mehler_rhs(s, 1.0, -0.7) * mehler_rhs(t, 0.2, 0.9)) < 1e-14);
    CHECK(rel(v.lhs, v.rhs_direct) < 1e-10);
    CHECK(rel(v.rhs_factorized, v.rhs_direct) < 1e-12);
}

TEST_CASE("mixed laguerre-hermite generating function") {
    CHECK(rel(gf_mixed(0.0, 0.0, 0.5, 0.5, 0.1, 0.1).lhs, 1.0) < 1e-15);
    Complex s = 0.4, t = 0.35;
    CHECK(rel(mixed_rhs(s, t, 0.0, 0.0, -0.6, 1.1), mehler_rhs(-s * t, -0.6, 1.1)) < 1e-14);
    Complex zz = 0.9 * I, zp = 0.4;
    CL partial = 0;
    for (int m = 0; m < 50; ++m)
        for (int n = 0; n < 50; ++n)
            partial += cpow(s, m) * cpow(t, n) / (std::pow(2.0L, (m + n) / 2.0L) * fact(m) * fact(n)) *
                       oracle::laguerre2d_sum(m, n, zz, zp) * oracle::hermite_sum(m, -0.6L) *
                       oracle::hermite_sum(n, 1.1L);
    auto v = gf_mixed(s, t, zz, zp, -0.6, 1.1);
    CHECK(rel(v.lhs, Complex(partial)) < 1e-9);
    CHECK(rel(v.rhs, Complex(partial)) < 1e-9);
}

TEST_CASE("even index generating function") {
    CHECK(rel(gf_even_index_laguerre2d(0.0, 0.0, 0.3, 0.2).lhs, 1.0) < 1e-15);
    Complex sigma = 0.2, tau = 0.3, zz(0.4, 0.1), zp(-0.5, 0.2);
    CHECK(rel(sigma_tau_rhs(sigma, tau, zz, zp), even_index_rhs(std::sqrt(-sigma), std::sqrt(-tau), zz, zp)) < 1e-14);
    Complex s = 0.7, t = 0.5 * I;
    CL partial = 0;
    for (int k = 0; k < 40; ++k)
        for (int l = 0; l < 40; ++l)
            partial += ((k + l) % 2 ? -1.0L : 1.0L) * cpow(s, 2 * k) * cpow(t, 2 * l) /
                       (fact(k) * fact(l) * std::pow(2.0L, k + l)) *
                       oracle::laguerre2d_sum(2 * k, 2 * l, 1.2L, -0.4L);
    auto v = gf_even_index_laguerre2d(s, t, 1.2, -0.4);
    CHECK(rel(v.lhs, Complex(partial)) < 1e-10);
    CHECK(rel(v.rhs_direct, Complex(partial)) < 1e-10);
    CHECK(rel(v.rhs_factorized, Complex(partial)) < 1e-10);
}

TEST_CASE("single sums") {
    auto z = gf_lagsum(0, 0, 0.0, 0.3, 0.2, 0.1, 0.4);
    CHECK(rel(z.lhs, 1.0) < 1e-15);
    CHECK(rel(z.rhs_root, 1.0) < 1e-15);
    CHECK_FALSE(z.rhs_division.has_value());
    Complex t = 0.3, zz = 1.0, zp = 0.5 * I, w = -0.4, wp = 0.7;
    CL partial = 0;
    for (int k = 0; k < 100; ++k)
        partial += cpow(-t, k) / fact(k) * oracle::laguerre2d_sum(2, k, zz, zp) * oracle::laguerre2d_sum(k, 1, w, wp);
    auto v = gf_lagsum(2, 1, t, zz, zp, w, wp);
    CHECK(rel(v.lhs, Complex(partial)) < 1e-10);
    CHECK(rel(*v.rhs_division, Complex(partial)) < 1e-10);
    CHECK(rel(v.rhs_root, Complex(partial)) < 1e-10);
    auto d = gf_lagsum_diagonal(2, 3, t, zz, zp);
    CHECK(rel(d.lhs, d.rhs_sqrt) < 1e-10);
    auto r = lagsum_resummation(0.4, 0.3, zz, zp, w, wp);
    CHECK(rel(r.via_lagsum, bilinear_rhs(0.4, 0.3, zz, zp, w, wp)) < 1e-10);
}

TEST_CASE("coordinate decomposition") {
    Complex z(0.3, 0.2), zp(-0.1, 0.8), w(1.1, -0.4), wp(0.5, 0.5);
    auto c = decompose_coords_s10(0.4, 0.4, z, zp, w, wp);
    const double r2 = std::sqrt(2.0);
    CHECK(rel(c.x, (z + w) / r2) < 1e-15);
    CHECK(rel(c.y, (z - w) / r2) < 1e-15);
    oracle::Gen g(32);
    for (int i = 0; i < 50; ++i) {
        Complex s = g.disk(0.7, 0.1), t = g.disk(0.7, 0.1), a = g.disk(2), b = g.disk(2), e = g.disk(2), f = g.disk(2);
        auto back = recompose_coords_s10(s, t, decompose_coords_s10(s, t, a, b, e, f));
        CHECK(rel(back.z, a) < 1e-12);
        CHECK(rel(back.zp, b) < 1e-12);
        CHECK(rel(back.w, e) < 1e-12);
        CHECK(rel(back.wp, f) < 1e-12);
    }
    auto d = decomposition_product(0.5, 0.3, z, zp, w, wp);
    CHECK(rel(d.series_product, d.bilinear) < 1e-10);
    CHECK(rel(d.closed_product, d.bilinear) < 1e-10);
    CHECK_THROWS_AS(decompose_coords_s10(0.0, 0.3, z, zp, w, wp), DomainError);
}

TEST_CASE("completeness surrogate") {
    Complex z(0.4, -0.3);
    auto a = completeness_limit_probe(0.5, z), b = completeness_limit_probe(0.25, z);
    CHECK(b.concentration > a.concentration);
    CHECK(a.kernel_displaced < a.kernel_coincident);
    CHECK(std::abs(b.envelope - 1.0) < 0.25);
    CHECK_THROWS_AS(completeness_limit_probe(0.0, z), DomainError);
}

TEST_CASE("truncation failure is reported") {
    TruncationSpec few;
    few.max_terms_per_index = 5;
    CHECK_THROWS_AS(gf_hermite(1.5, 1.0, few), TruncationError);
    TruncationSpec bad;
    bad.tail_tolerance = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
