#include "suites.hpp"

#include "lagherm/genfun.hpp"
#include "lagherm/su11.hpp"

#include <cmath>

namespace lagherm {

namespace {

const Complex I(0.0, 1.0);
const double kPi = std::acos(-1.0);

// Nine sample points per parameter set; enough sets that draws points are covered.
constexpr int kPoints = 9;
int parameter_sets(const SuiteContext& c) { return std::max(20, (c.draws() + kPoints - 1) / kPoints); }

// Modulus in [lo, hi], argument within +-arg of the positive axis.
Complex sector(SuiteContext& c, double lo, double hi, double arg) {
    return std::polar(c.uniform(lo, hi), c.uniform(-arg, arg));
}

Params conv_params(const ConvParams1D& p) { return {param("r", p.r), param("s", p.s), param("x0", p.x0)}; }
Params conv_params(const ConvParams2D& p) {
    return {param("r", p.r), param("s", p.s), param("z0", p.z0), param("z0p", p.z0p)};
}

void disentangle_det(SuiteContext& c) {
    const int count = c.draws() * 5 / 2;
    c.each(count, [&](int i) {
        DisentangleInput in;
        if (i % 5 == 4) {
            // near-degenerate: xi zeta - eta^2 of modulus at most 1e-12
            in.xi = c.polar(1.5, 0.1);
            in.eta = c.polar(1.5);
            Complex e = c.polar(1e-6);
            in.zeta = (in.eta * in.eta + e * e) / in.xi;
        } else {
            in.xi = c.polar(1.5);
            in.eta = c.polar(1.5);
            in.zeta = c.polar(1.5);
        }
        auto u = disentangle(in);
        c.check({param("xi", in.xi), param("eta", in.eta), param("zeta", in.zeta)}, u.det(), 1.0);
    });
}

void disentangle_branch(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        DisentangleInput in{c.polar(1.5), c.polar(1.5), c.polar(1.5)};
        Complex eps = std::sqrt(in.xi * in.zeta - in.eta * in.eta);
        auto a = disentangle_with_root(in, eps);
        auto b = disentangle_with_root(in, -eps);
        Params p{param("xi", in.xi), param("eta", in.eta), param("zeta", in.zeta)};
        const char* names[] = {"kappa", "lambda", "mu", "nu"};
        Complex va[] = {a.kappa, a.lambda, a.mu, a.nu}, vb[] = {b.kappa, b.lambda, b.mu, b.nu};
        for (int k = 0; k < 4; ++k) {
            auto q = p;
            q.emplace_back("entry", names[k]);
            c.check(q, vb[k], va[k]);
        }
    });
}

void specialization_rows(SuiteContext& c, Complex s, Complex r, bool exact) {
    const Complex one(1.0);
    struct Case {
        const char* name;
        DisentangleInput in;
        Complex want[4];
    };
    Case cases[] = {
        {"xi=s/2", {s / 2.0, I * s / r, -2.0 * s / (r * r)}, {one + s / r, s / 2.0, -2.0 * s / (r * r), one - s / r}},
        {"xi=s", {s, I * s / r, -s / (r * r)}, {one + s / r, s, -s / (r * r), one - s / r}},
    };
    const char* names[] = {"kappa", "lambda", "mu", "nu"};
    for (const auto& k : cases) {
        auto u = disentangle(k.in);
        Complex got[] = {u.kappa, u.lambda, u.mu, u.nu};
        for (int e = 0; e < 4; ++e) {
            Params p{param("s", s), param("r", r), {"case", k.name}, {"entry", names[e]}};
            if (exact)
                c.predicate(p, got[e], k.want[e], got[e] == k.want[e]);
            else
                c.check(p, got[e], k.want[e]);
        }
    }
}

void disentangle_special(SuiteContext& c) {
    // dyadic inputs: every operation on the way is exact in binary floating point
    for (auto [s, r] : {std::pair<Complex, Complex>{0.5, 1.0}, {0.25, 2.0}, {Complex(0.5, 0.25), 1.0},
                        {Complex(-0.75, 0.5), 0.5}})
        specialization_rows(c, s, r, true);
    c.each(c.draws(), [&](int) { specialization_rows(c, c.polar(1.0), c.polar(2.0, 0.5), false); });
}

void disentangle_product(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        DisentangleInput in{c.polar(1.0), c.polar(1.0), c.polar(1.0)};
        double res = disentangle_product_residual(in);
        c.check({param("xi", in.xi), param("eta", in.eta), param("zeta", in.zeta)}, res, 0.0);
    });
}

ConvParams1D draw_conv_1d(SuiteContext& c) {
    return {sector(c, 0.6, 1.5, 0.5), sector(c, 0.2, 1.0, 0.5), c.uniform(-1.0, 1.0)};
}

ConvParams2D draw_conv_2d(SuiteContext& c) {
    return {sector(c, 0.6, 1.5, 0.5), sector(c, 0.2, 0.8, 0.5), c.polar(0.5), c.polar(0.5)};
}

void op_1d(SuiteContext& c, OpKind1D kind, int max_n, bool root_sign) {
    for (int set = 0; set < parameter_sets(c); ++set) {
        ConvParams1D p = draw_conv_1d(c);
        int n = max_n > 0 ? c.integer(0, max_n) : 0;
        Complex q = sector(c, 0.6, 1.5, 0.5);
        c.each(kPoints, [&](int) {
            double x = c.uniform(-2.0, 2.0);
            auto v = op_identity_1d(p, kind, n, x, q);
            Params prm = conv_params(p);
            prm.push_back(param("n", n));
            if (kind == OpKind1D::Gaussian)
                prm.push_back(param("q", q));
            prm.push_back(param("x", x));
            if (root_sign) {
                c.check(prm, v.closed_flipped, v.closed);
            } else {
                c.check(prm, v.oracle, v.closed);
            }
        });
    }
}

void op_2d(SuiteContext& c, OpKind2D kind, int max_n, bool root_sign) {
    for (int set = 0; set < parameter_sets(c); ++set) {
        ConvParams2D p = draw_conv_2d(c);
        int m = max_n > 0 ? c.integer(0, max_n) : 0, n = max_n > 0 ? c.integer(0, max_n) : 0;
        Complex q = sector(c, 0.6, 1.5, 0.5);
        c.each(kPoints, [&](int) {
            Complex z = c.polar(1.5);
            auto v = op_identity_2d(p, kind, m, n, z, q);
            Params prm = conv_params(p);
            prm.push_back(param("m", m));
            prm.push_back(param("n", n));
            if (kind == OpKind2D::Gaussian)
                prm.push_back(param("q", q));
            prm.push_back(param("z", z));
            if (root_sign)
                c.check(prm, v.closed_flipped, v.closed);
            else
                c.check(prm, v.oracle, v.closed);
        });
    }
}

void op_1d_swapped(SuiteContext& c) {
    for (int set = 0; set < parameter_sets(c); ++set) {
        Complex rp = sector(c, 0.7, 1.3, 0.3), sp = sector(c, 0.2, 0.7, 0.3);
        int n = c.integer(0, 6);
        c.each(kPoints, [&](int) {
            double y = c.uniform(-2.0, 2.0);
            auto [lhs, rhs] = op_identity_1d_swapped(rp, sp, n, y);
            c.check({param("rp", rp), param("sp", sp), param("n", n), param("y", y)}, lhs, rhs);
        });
    }
}

void op_2d_swapped(SuiteContext& c) {
    for (int set = 0; set < parameter_sets(c); ++set) {
        Complex rp = sector(c, 0.7, 1.3, 0.3), sp = sector(c, 0.2, 0.7, 0.3);
        int m = c.integer(0, 3), n = c.integer(0, 3);
        c.each(kPoints, [&](int) {
            Complex w = c.polar(1.5);
            auto [lhs, rhs] = op_identity_2d_swapped(rp, sp, m, n, w);
            c.check({param("rp", rp), param("sp", sp), param("m", m), param("n", n), param("w", w)}, lhs, rhs);
        });
    }
}

void sigma_tau_oracle(SuiteContext& c) {
    for (int set = 0; set < parameter_sets(c); ++set) {
        Complex s = sector(c, 0.2, 0.6, 0.5), sigma2 = c.polar(0.4), tau2 = c.polar(0.4);
        c.each(kPoints, [&](int) {
            Complex z = c.polar(1.5);
            auto v = op_identity_sigma_tau(s, sigma2, tau2, z);
            c.check({param("s", s), param("sigma2", sigma2), param("tau2", tau2), param("z", z)}, v.oracle, v.closed);
        });
    }
}

void sigma_tau_series(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = sector(c, 0.2, 0.6, 0.5), sigma2 = c.polar(0.4), tau2 = c.polar(0.4), z = c.polar(1.5);
        auto v = op_identity_sigma_tau(s, sigma2, tau2, z);
        c.check({param("s", s), param("sigma2", sigma2), param("tau2", tau2), param("z", z)}, v.series, v.closed);
        Complex sigma = c.polar(std::sqrt(0.6)), tau = c.polar(std::sqrt(0.6)), zz = c.polar(2.0), zp = c.polar(2.0);
        c.check({param("sigma", sigma), param("tau", tau), param("z", zz), param("zp", zp), {"case", "s=-1"}},
                sigma_tau_closed(-1.0, sigma * sigma, tau * tau, zz, zp), even_index_rhs(sigma, tau, zz, zp));
    });
}

void taylor_heat(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(0.8), a = c.polar(0.8), z = c.polar(1.5), zp = c.polar(1.5);
        auto [series, closed] = taylor_heat_check(s, a, z, zp, c.trunc().max_terms_per_index);
        c.check({param("s", s), param("a", a), param("z", z), param("zp", zp)}, series, closed);
    });
}

void heat_gaussian(SuiteContext& c) {
    for (int set = 0; set < parameter_sets(c); ++set) {
        Complex s = sector(c, 0.2, 0.8, 0.5), a = sector(c, 0.3, 1.2, 0.5);
        c.each(kPoints, [&](int) {
            Complex z = c.polar(1.5);
            auto [oracle, closed] = heat_gaussian_2d(s, a, z);
            c.check({param("s", s), param("a", a), param("z", z)}, oracle, closed);
        });
    }
}

void semigroup(SuiteContext& c, bool two_d) {
    c.each(std::max(1, c.draws() / 4), [&](int) {
        Complex r = sector(c, 0.6, 1.5, 0.4), s1 = sector(c, 0.2, 0.8, 0.4), s2 = sector(c, 0.2, 0.8, 0.4);
        SemigroupCheck v;
        Params p{param("r", r), param("s1", s1), param("s2", s2)};
        if (two_d) {
            Complex z = c.polar(1.5);
            v = semigroup_2d(r, s1, s2, z);
            p.push_back(param("z", z));
        } else {
            double x = c.uniform(-2.0, 2.0);
            v = semigroup_1d(r, s1, s2, x);
            p.push_back(param("x", x));
        }
        auto p1 = p, p2 = p;
        p1.emplace_back("path", "s1 after s2");
        p2.emplace_back("path", "s1+s2");
        c.check(p1, v.nested, v.closed);
        c.check(p2, v.direct, v.closed);
    });
}

void delta_limit(SuiteContext& c, bool two_d) {
    c.each(std::max(1, c.draws() / 4), [&](int) {
        Complex s = sector(c, 0.3, 1.0, 0.4);
        double x0 = c.uniform(-1.0, 1.0), x = c.uniform(-1.5, 1.5);
        Complex z0 = c.polar(1.0), z = c.polar(1.5);
        double prev = INFINITY;
        bool shrinking = true;
        for (double r : {1e-2, 1e-3, 1e-4}) {
            DeltaLimit d = two_d ? delta_limit_2d(r, s, z0, z) : delta_limit_1d(r, s, x0, x);
            Params p{param("r", r), param("s", s)};
            if (two_d) {
                p.push_back(param("z0", z0));
                p.push_back(param("z", z));
            } else {
                p.push_back(param("x0", x0));
                p.push_back(param("x", x));
            }
            c.check(p, d.oracle, d.closed);
            double diff = std::abs(d.closed - d.limit);
            shrinking = shrinking && diff < prev;
            prev = diff;
        }
        Params p{param("s", s), {"check", "width-s limit approached"}};
        c.predicate(p, prev, 0.0, shrinking);
    });
}

void gauss_conv_sanity(SuiteContext& c) {
    c.each(c.draws() / 4, [&](int) {
        Complex s = sector(c, 0.2, 1.0, 0.5);
        double x = c.uniform(-2.0, 2.0);
        Complex z = c.polar(1.5);
        double d = (1.0 / s).real();
        auto one1 = [](double) { return Complex(1.0); };
        auto one2 = [](Complex) { return Complex(1.0); };
        c.check({param("s", s), param("x", x), {"f", "1"}},
                gauss_conv_1d_oracle(s, x, one1, gaussian_window(x, d)), 1.0);
        c.check({param("s", s), param("z", z), {"f", "1"}},
                gauss_conv_2d_oracle(s, z, one2, gaussian_window(z.real(), d), gaussian_window(z.imag(), d)), 1.0);
    });
    // widths add: normalized width-1 Gaussian convolved at s = 1
    for (double x : {-1.5, -0.5, 0.0, 0.7, 2.0}) {
        auto g = [](double y) { return Complex(std::exp(-y * y) / std::sqrt(kPi)); };
        c.check({param("s", 1.0), param("r", 1.0), param("x", x), {"f", "normalized Gaussian"}},
                gauss_conv_1d_oracle(1.0, x, g, gaussian_window(x / 2.0, 2.0)),
                std::exp(-x * x / 2.0) / std::sqrt(2.0 * kPi));
    }
}

void scaling(SuiteContext& c, bool two_d) {
    c.each(c.draws(), [&](int) {
        Complex gamma = c.polar(0.5), z = c.polar(1.5), zp = c.polar(1.5);
        int n = c.integer(0, 8);
        ScalingKind kinds1[] = {ScalingKind::Monomial, ScalingKind::Hermite, ScalingKind::Gaussian};
        ScalingKind kinds2[] = {ScalingKind::Laguerre2D, ScalingKind::Gaussian2D};
        const char* names1[] = {"monomial", "hermite", "gaussian"};
        const char* names2[] = {"laguerre2d", "gaussian2d"};
        int count = two_d ? 2 : 3;
        for (int k = 0; k < count; ++k) {
            auto v = two_d ? scaling_operator_check(gamma, kinds2[k], n, z, zp)
                           : scaling_operator_check(gamma, kinds1[k], n, z);
            Params p{param("gamma", gamma), param("n", n), param("z", z)};
            if (two_d)
                p.push_back(param("zp", zp));
            p.emplace_back("f", two_d ? names2[k] : names1[k]);
            c.check(p, v.series, v.direct);
        }
    });
}

} // namespace

void register_su11_suites(std::vector<SuiteInfo>& r) {
    const SuiteKind S = SuiteKind::Series, Q = SuiteKind::Quadrature;
    const std::string M = "su11_ops";
    r.push_back({"disentangle_det", "Eq. (A.5)", M, S, 1e-12, {"disentangle"}, disentangle_det});
    r.push_back({"disentangle_branch", "Eq. (A.5)", M, S, 1e-12, {"disentangle"}, disentangle_branch});
    r.push_back({"disentangle_specializations", "Eq. (A.5)", M, S, 1e-14, {"disentangle"}, disentangle_special});
    r.push_back({"disentangle_product", "Eq. (A.4)", M, S, 1e-12, {"disentangle"}, disentangle_product});
    r.push_back({"gauss_conv_sanity", "Eq. (A.31)", M, Q, 1e-6, {"gauss_conv_1d_oracle", "gauss_conv_2d_oracle"},
                 gauss_conv_sanity});
    auto op1 = [](OpKind1D k, int n, bool flip) { return [=](SuiteContext& c) { op_1d(c, k, n, flip); }; };
    auto op2 = [](OpKind2D k, int n, bool flip) { return [=](SuiteContext& c) { op_2d(c, k, n, flip); }; };
    const std::vector<std::string> c1{"op_identity_1d", "gauss_conv_1d_oracle"};
    const std::vector<std::string> c2{"op_identity_2d", "gauss_conv_2d_oracle"};
    r.push_back({"op1d_constant", "Eq. (A.14)", M, Q, 1e-6, c1, op1(OpKind1D::Constant, 0, false)});
    r.push_back({"op1d_monomial", "Eq. (A.15)", M, Q, 1e-6, c1, op1(OpKind1D::Monomial, 5, false)});
    r.push_back({"op1d_hermite", "Eq. (A.16)", M, Q, 1e-6, c1, op1(OpKind1D::Hermite, 6, false)});
    r.push_back({"op1d_gaussian", "Eq. (A.12)", M, Q, 1e-6, c1, op1(OpKind1D::Gaussian, 0, false)});
    r.push_back({"op1d_swapped", "Eq. (A.13)", M, Q, 1e-6, {"op_identity_1d"}, op_1d_swapped});
    r.push_back({"op1d_root_sign", "Eq. (A.16)", M, S, 1e-12, {"op_identity_1d"}, op1(OpKind1D::Hermite, 6, true)});
    r.push_back({"op2d_constant", "Eq. (A.24)", M, Q, 1e-6, c2, op2(OpKind2D::Constant, 0, false)});
    r.push_back({"op2d_monomial", "Eq. (A.20)", M, Q, 1e-6, c2, op2(OpKind2D::Monomial, 3, false)});
    r.push_back({"op2d_laguerre", "Eq. (A.34)", M, Q, 1e-6, c2, op2(OpKind2D::Laguerre2D, 3, false)});
    r.push_back({"op2d_gaussian", "Eq. (A.19)", M, Q, 1e-6, c2, op2(OpKind2D::Gaussian, 0, false)});
    r.push_back({"op2d_swapped", "Eq. (A.21)", M, Q, 1e-6, {"op_identity_2d"}, op_2d_swapped});
    r.push_back({"op2d_root_sign", "Eq. (A.34)", M, S, 1e-12, {"op_identity_2d"},
                 op2(OpKind2D::Laguerre2D, 3, true)});
    r.push_back({"op2d_sigma_tau", "Eq. (A.37)", M, Q, 1e-6, c2, sigma_tau_oracle});
    r.push_back({"op2d_sigma_tau_series", "Eq. (A.38)", M, S, 1e-9, {"op_identity_2d"}, sigma_tau_series});
    r.push_back({"taylor_heat", "Eq. (A.20)", M, S, 1e-9, {"op_identity_2d"}, taylor_heat, 200});
    r.push_back({"heat_gaussian_2d", "Eq. (5.10)", M, Q, 1e-6, c2, heat_gaussian});
    r.push_back({"semigroup_1d", "Eq. (A.14)", M, Q, 1e-8, {"gauss_conv_1d_oracle"},
                 [](SuiteContext& c) { semigroup(c, false); }});
    r.push_back({"semigroup_2d", "Eq. (A.24)", M, Q, 1e-8, {"gauss_conv_2d_oracle"},
                 [](SuiteContext& c) { semigroup(c, true); }});
    r.push_back({"delta_limit_1d", "Eq. (A.30)", M, Q, 1e-6, {"gauss_conv_1d_oracle"},
                 [](SuiteContext& c) { delta_limit(c, false); }});
    r.push_back({"delta_limit_2d", "Eq. (A.32)", M, Q, 1e-6, {"gauss_conv_2d_oracle"},
                 [](SuiteContext& c) { delta_limit(c, true); }});
    r.push_back({"scaling_operator", "Eq. (A.11)", M, S, 1e-10, {"scaling_operator_check"},
                 [](SuiteContext& c) { scaling(c, false); }});
    r.push_back({"scaling_operator_2d", "Eq. (A.26)", M, S, 1e-10, {"scaling_operator_check"},
                 [](SuiteContext& c) { scaling(c, true); }});
}

} // namespace lagherm
