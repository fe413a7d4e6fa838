#include "suites.hpp"

#include "lagherm/genfun.hpp"
#include "lagherm/poly.hpp"

#include <cmath>

namespace lagherm {

namespace {

// Arguments stay within modulus 2; parameters at 75% of their guard.
constexpr double kArg = 2.0;
constexpr double kUnit = 0.75;        // |t| < 1 guards
const double kProd = std::sqrt(0.6);  // each factor of an |st| <= 0.6 draw
constexpr double kAway = 0.3;         // lower modulus for divided forms

void hermite_gf(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex t = c.polar(1.5), x = c.polar(kArg);
        auto v = gf_hermite(t, x, c.trunc());
        c.check({param("t", t), param("x", x)}, v.lhs, v.rhs);
    });
}

void mehler(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex t = c.polar(kUnit);
        double x = c.uniform(-kArg, kArg), y = c.uniform(-kArg, kArg);
        auto v = gf_mehler(t, x, y, c.trunc());
        c.check({param("t", t), param("x", x), param("y", y)}, v.lhs, v.rhs_direct);
    });
}

void mehler_factorized(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex t = c.polar(kUnit), x = c.polar(kArg), y = c.polar(kArg);
        c.check({param("t", t), param("x", x), param("y", y)}, mehler_rhs_factorized(t, x, y), mehler_rhs(t, x, y));
    });
}

void even_odd_hermite(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex t = c.polar(kUnit);
        double x = c.uniform(-kArg, kArg);
        auto v = gf_even_odd_hermite(t, x, c.trunc());
        Params p{param("t", t), param("x", x)};
        auto tag = [&](const char* form) {
            auto q = p;
            q.emplace_back("form", form);
            return q;
        };
        c.check(tag("even"), v.even->lhs, v.even->rhs);
        c.check(tag("odd"), v.odd->lhs, v.odd->rhs);
        c.check(tag("cosh"), v.cosh_form.lhs, v.cosh_form.rhs);
        c.check(tag("sinh"), v.sinh_form.lhs, v.sinh_form.rhs);
    });
}

void factherm(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int n = c.integer(0, 30);
        double x = c.uniform(-kArg, kArg), y = c.uniform(-kArg, kArg);
        auto v = gf_factherm(n, x, y);
        c.check({param("n", n), param("x", x), param("y", y), {"form", "hermite"}}, v.rhs_direct, v.lhs);
        c.check({param("n", n), param("x", x), param("y", y), {"form", "laguerre"}}, v.rhs_factorized, v.lhs);
    });
}

void simple_laguerre2d(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(1.5), t = c.polar(1.5), z = c.polar(kArg), zp = c.polar(kArg);
        auto v = gf_simple_laguerre2d(s, t, z, zp, c.trunc());
        c.check({param("s", s), param("t", t), param("z", z), param("zp", zp)}, v.lhs, v.rhs);
    });
}

void simple_laguerre2d_special(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex z = c.polar(1.5), zp = c.polar(1.5), kappa = c.polar(2.0, 0.5);
        Complex s = c.polar(1.5), t = c.polar(1.5);
        auto v = gf_simple_laguerre2d(zp, z, z, zp, c.trunc());
        c.check({param("z", z), param("zp", zp), {"case", "s=z',t=z"}}, v.lhs, std::exp(z * zp));
        c.check({param("s", s), param("t", t), param("z", z), param("zp", zp), param("kappa", kappa),
                 {"case", "scaling"}},
                simple_laguerre2d_rhs(s / kappa, kappa * t, kappa * z, zp / kappa), simple_laguerre2d_rhs(s, t, z, zp));
    });
}

void single_index(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 10);
        Complex t = c.polar(1.5), z = c.polar(kArg), zp = c.polar(kArg);
        auto v = gf_single_index_laguerre2d(m, t, z, zp, c.trunc());
        c.check({param("m", m), param("t", t), param("z", z), param("zp", zp)}, v.lhs, v.rhs);
    });
}

void single_index_genlaguerre(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 10);
        Complex z = c.polar(kArg, kAway), zp = c.polar(kArg, kAway);
        Complex t = c.polar(kUnit * std::abs(z));
        auto v = gf_single_index_genlaguerre(m, t, z, zp, c.trunc());
        Params p{param("m", m), param("t", t), param("z", z), param("zp", zp)};
        auto p1 = p, p2 = p, p3 = p;
        p1.emplace_back("form", "first");
        p2.emplace_back("form", "middle");
        c.check(p1, v.first, v.rhs);
        c.check(p2, v.middle, v.rhs);
        Complex u = z * zp, t2 = c.polar(1.5);
        auto f = gf_genlaguerre_fixed_upper(m, t2, u, c.trunc());
        c.check({param("m", m), param("t", t2), param("u", u), {"form", "fixed upper index"}}, f.lhs, f.rhs);
    });
}

void bilinear(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd), t = c.polar(kProd);
        Complex z = c.polar(kArg), zp = c.polar(kArg), w = c.polar(kArg), wp = c.polar(kArg);
        auto v = gf_bilinear_laguerre2d(s, t, z, zp, w, wp, c.trunc());
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp), param("w", w), param("wp", wp)};
        auto p1 = p, p2 = p;
        p1.emplace_back("form", "L(w',w)");
        p2.emplace_back("form", "L(w,w') swapped");
        c.check(p1, v.lhs, v.rhs_direct);
        c.check(p2, v.lhs_swapped, v.rhs_direct);
    });
}

void bilinear_factorized(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd), t = c.polar(kProd);
        Complex z = c.polar(kArg), zp = c.polar(kArg), w = c.polar(kArg), wp = c.polar(kArg);
        Complex rs = std::sqrt(s), rt = std::sqrt(t);
        Complex direct = bilinear_rhs(s, t, z, zp, w, wp);
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp), param("w", w), param("wp", wp)};
        auto p1 = p, p2 = p;
        p1.emplace_back("roots", "principal");
        p2.emplace_back("roots", "negated");
        c.check(p1, bilinear_rhs_factorized(rs, rt, z, zp, w, wp), direct);
        c.check(p2, bilinear_rhs_factorized(-rs, -rt, z, zp, w, wp), direct);
    });
}

void bilinear_genlaguerre(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd), t = c.polar(kProd);
        Complex z = c.polar(kArg, kAway), zp = c.polar(kArg, kAway), w = c.polar(kArg, kAway),
                wp = c.polar(kArg, kAway);
        auto v = gf_bilinear_genlaguerre(s, t, z, zp, w, wp, c.trunc());
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp), param("w", w), param("wp", wp)};
        auto p1 = p, p2 = p;
        p1.emplace_back("form", "first");
        p2.emplace_back("form", "second");
        c.check(p1, v.first, v.rhs);
        c.check(p2, v.second, v.rhs);
    });
}

void laguerre_diagonal(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        // st -> t reduction of the bilinear sum, so the same |st| guard
        Complex t = c.polar(0.6), z = c.polar(kArg), zp = c.polar(kArg), s = c.polar(kProd), t2 = c.polar(kProd);
        auto v = gf_laguerre_diagonal(t, z, zp, c.trunc());
        c.check({param("t", t), param("z", z), param("zp", zp), {"form", "2D diagonal"}}, v.lhs2d, v.rhs);
        c.check({param("t", t), param("z", z), param("zp", zp), {"form", "usual Laguerre"}}, v.lhs_1d, v.rhs);
        c.check({param("s", s), param("t", t2), param("z", z), param("zp", zp), {"form", "bilinear at w=w'=0"}},
                bilinear_rhs(s, t2, z, zp, 0.0, 0.0), laguerre_gf_rhs(s * t2, z * zp));
    });
}

void bilinear_limit(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(1.0), t = c.polar(1.0), z = c.polar(kArg), zp = c.polar(kArg);
        Complex w0 = c.polar(kArg, 0.5), w0p = c.polar(kArg, 0.5);
        auto v = bilinear_limit_probe(1e-3, s, t, z, zp, w0, w0p);
        c.check({param("s", s), param("t", t), param("z", z), param("zp", zp), param("w0", w0), param("w0p", w0p),
                 param("delta", 1e-3)},
                v.bilinear, v.simple, std::abs(v.simple));
    });
}

void completeness(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex z = c.polar(1.5);
        double eps = c.uniform(0.25, 0.5);
        auto a = completeness_limit_probe(eps, z);
        auto b = completeness_limit_probe(eps / 2.0, z);
        c.predicate({param("z", z), param("eps", eps), {"check", "concentration grows"}}, b.concentration,
                    a.concentration, b.concentration > a.concentration && a.concentration > 1.0);
        // |envelope - 1| = O(eps (1 + |z|^2))
        for (auto [e, probe] : {std::pair{eps, a}, std::pair{eps / 2.0, b}})
            c.predicate({param("z", z), param("eps", e), {"check", "envelope near 1"}}, probe.envelope, 1.0,
                        std::abs(probe.envelope - 1.0) <= e * (1.0 + std::norm(z)) / 2.0);
    });
}

void hermite2d_product(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kUnit), t = c.polar(kUnit);
        double x = c.uniform(-kArg, kArg), y = c.uniform(-kArg, kArg), u = c.uniform(-kArg, kArg),
               v = c.uniform(-kArg, kArg);
        auto r = gf_hermite2d_product(s, t, x, y, u, v, c.trunc());
        Params p{param("s", s), param("t", t), param("x", x), param("y", y), param("u", u), param("v", v)};
        auto p1 = p, p2 = p;
        p1.emplace_back("form", "series");
        p2.emplace_back("form", "two Mehler kernels");
        c.check(p1, r.lhs, r.rhs_direct);
        c.check(p2, r.rhs_factorized, r.rhs_direct);
    });
}

void hermite2d_even(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kUnit), t = c.polar(kUnit);
        double x = c.uniform(-kArg, kArg), y = c.uniform(-kArg, kArg);
        auto r = gf_hermite2d_even_product(s, t, x, y, c.trunc());
        c.check({param("s", s), param("t", t), param("x", x), param("y", y)}, r.lhs, r.rhs);
        c.check({param("s", s), param("t", t), param("x", x), param("y", y), {"form", "u=v=0 of product"}},
                hermite2d_product_rhs(s, t, x, y, 0.0, 0.0), r.rhs);
    });
}

void mixed(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd), t = c.polar(kProd), z = c.polar(kArg), zp = c.polar(kArg);
        double u = c.uniform(-kArg, kArg), v = c.uniform(-kArg, kArg);
        auto r = gf_mixed(s, t, z, zp, u, v, c.trunc());
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp), param("u", u), param("v", v)};
        c.check(p, r.lhs, r.rhs);
        Params q{param("s", s), param("t", t), param("u", u), param("v", v), {"form", "z=z'=0 is Mehler at -st"}};
        c.check(q, mixed_rhs(s, t, 0.0, 0.0, u, v), mehler_rhs(-s * t, u, v));
    });
}

void even_index(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd), t = c.polar(kProd), z = c.polar(kArg), zp = c.polar(kArg);
        auto r = gf_even_index_laguerre2d(s, t, z, zp, c.trunc());
        c.check({param("s", s), param("t", t), param("z", z), param("zp", zp)}, r.lhs, r.rhs_direct);
    });
}

void even_index_factorized(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd), t = c.polar(kProd), z = c.polar(kArg), zp = c.polar(kArg);
        c.check({param("s", s), param("t", t), param("z", z), param("zp", zp)}, even_index_rhs_factorized(s, t, z, zp),
                even_index_rhs(s, t, z, zp));
    });
}

void even_index_sigma_tau(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex sigma = c.polar(kProd), tau = c.polar(kProd), z = c.polar(kArg), zp = c.polar(kArg);
        auto r = gf_even_index_sigma_tau(sigma, tau, z, zp, c.trunc());
        c.check({param("sigma", sigma), param("tau", tau), param("z", z), param("zp", zp)}, r.lhs, r.rhs);
        // s^2 -> -sigma, t^2 -> -tau with either root
        Complex s = std::sqrt(-sigma), t = std::sqrt(-tau);
        c.check({param("sigma", sigma), param("tau", tau), param("z", z), param("zp", zp), {"form", "s^2=-sigma"}},
                even_index_rhs(s, t, z, zp), r.rhs);
    });
}

void even_index_xy(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd, 0.05), t = c.polar(kProd, 0.05), z = c.polar(kArg), zp = c.polar(kArg);
        auto r = even_index_xy_decomposition(s, t, z, zp, c.trunc());
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp)};
        c.check(p, r.hermite_series, r.closed);
        p.emplace_back("form", "closed in x,y");
        c.check(p, r.closed, even_index_rhs(s, t, z, zp));
    });
}

void even_index_genlaguerre(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(0.5), t = c.polar(0.5), z = c.polar(kArg, kAway), zp = c.polar(kArg, kAway);
        auto r = gf_even_index_genlaguerre(s, t, z, zp, c.trunc());
        Complex ref = even_index_rhs(s, t, z, zp);
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp)};
        auto p1 = p, p2 = p;
        p1.emplace_back("form", "first");
        p2.emplace_back("form", "second");
        c.check(p1, r.first, ref);
        c.check(p2, r.second, ref);
    });
}

void lagsum(SuiteContext& c) {
    const int per_pair = std::max(1, c.draws() / 4);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            c.each(per_pair, [&](int) {
                Complex t = c.polar(1.0, 0.05), z = c.polar(kArg), zp = c.polar(kArg), w = c.polar(kArg),
                        wp = c.polar(kArg);
                auto v = gf_lagsum(m, n, t, z, zp, w, wp, c.trunc());
                Params p{param("m", m), param("n", n), param("t", t), param("z", z), param("zp", zp), param("w", w),
                         param("wp", wp)};
                auto p1 = p, p2 = p, p3 = p;
                p1.emplace_back("form", "L(w,w')");
                p2.emplace_back("form", "L(w',w) swapped");
                p3.emplace_back("form", "sqrt(t) root form");
                c.check(p1, v.lhs, *v.rhs_division);
                c.check(p2, v.lhs_swapped, *v.rhs_division);
                c.check(p3, *v.rhs_sqrt, v.rhs_root);
            });
}

void lagsum_limit(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 6), n = c.integer(0, 6);
        Complex z = c.polar(kArg), zp = c.polar(kArg), w = c.polar(kArg), wp = c.polar(kArg);
        auto v = gf_lagsum(m, n, 0.0, z, zp, w, wp, c.trunc());
        Params p{param("m", m), param("n", n), param("z", z), param("zp", zp), param("w", w), param("wp", wp)};
        c.check(p, v.lhs, v.rhs_root);
        p.emplace_back("form", "z^m w'^n");
        c.check(p, v.rhs_root, std::pow(z, m) * std::pow(wp, n));
    });
}

void lagsum_genlaguerre(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 6), n = c.integer(0, 6);
        Complex t = c.polar(1.5, kAway), z = c.polar(kArg, kAway), zp = c.polar(kArg, kAway),
                w = c.polar(kArg, kAway), wp = c.polar(kArg, kAway);
        auto v = gf_lagsum_genlaguerre(m, n, t, z, zp, w, wp, c.trunc());
        Params p{param("m", m), param("n", n), param("t", t), param("z", z), param("zp", zp), param("w", w),
                 param("wp", wp)};
        const char* names[] = {"a", "b", "c", "d"};
        Complex vals[] = {v.a, v.b, v.c, v.d};
        for (int k = 0; k < 4; ++k) {
            auto q = p;
            q.emplace_back("form", names[k]);
            c.check(q, vals[k], v.reference);
        }
    });
}

void lagsum_diagonal(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 6), n = c.integer(0, 6);
        Complex t = c.polar(1.0, 0.05), z = c.polar(kArg), zp = c.polar(kArg);
        auto v = gf_lagsum_diagonal(m, n, t, z, zp, c.trunc());
        Params p{param("m", m), param("n", n), param("t", t), param("z", z), param("zp", zp)};
        c.check(p, v.lhs, v.rhs_sqrt);
        p.emplace_back("form", "expanded root");
        c.check(p, v.rhs_root, v.rhs_sqrt);
    });
}

void lagsum_diagonal_genlaguerre(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        int m = c.integer(0, 6), n = c.integer(0, 6);
        Complex t = c.polar(1.5, kAway), z = c.polar(kArg, kAway), zp = c.polar(kArg, kAway);
        auto v = gf_lagsum_diagonal_genlaguerre(m, n, t, z, zp, c.trunc());
        Params p{param("m", m), param("n", n), param("t", t), param("z", z), param("zp", zp)};
        const char* names[] = {"a", "b", "c", "d"};
        Complex vals[] = {v.a, v.b, v.c, v.d};
        for (int k = 0; k < 4; ++k) {
            auto q = p;
            q.emplace_back("form", names[k]);
            c.check(q, vals[k], v.reference);
        }
    });
}

void lagsum_resum(SuiteContext& c) {
    c.each(std::max(1, c.draws() / 4), [&](int) {
        Complex s = c.polar(kProd), t = c.polar(kProd, 0.05);
        Complex z = c.polar(kArg), zp = c.polar(kArg), w = c.polar(kArg), wp = c.polar(kArg);
        auto v = lagsum_resummation(s, t, z, zp, w, wp, c.trunc());
        Complex ref = bilinear_rhs(s, t, z, zp, w, wp);
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp), param("w", w), param("wp", wp)};
        auto p1 = p, p2 = p, p3 = p;
        p1.emplace_back("form", "single sums");
        p2.emplace_back("form", "usual Laguerre");
        p3.emplace_back("form", "closed");
        c.check(p1, v.via_lagsum, ref);
        c.check(p2, v.via_laguerre, ref);
        c.check(p3, v.closed, ref);
    });
}

void s10_roundtrip(SuiteContext& c) {
    c.each(c.draws(), [&](int) {
        Complex s = c.polar(kProd, 0.05), t = c.polar(kProd, 0.05);
        Complex z = c.polar(kArg), zp = c.polar(kArg), w = c.polar(kArg), wp = c.polar(kArg);
        auto back = recompose_coords_s10(s, t, decompose_coords_s10(s, t, z, zp, w, wp));
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp), param("w", w), param("wp", wp)};
        const char* names[] = {"z", "z'", "w", "w'"};
        Complex got[] = {back.z, back.zp, back.w, back.wp}, want[] = {z, zp, w, wp};
        for (int k = 0; k < 4; ++k) {
            auto q = p;
            q.emplace_back("coordinate", names[k]);
            c.check(q, got[k], want[k]);
        }
    });
}

void s10_decomposition(SuiteContext& c) {
    c.each(std::max(1, c.draws() / 2), [&](int) {
        // |st| <= 0.5: the diagonal series in the new coordinates run out of terms near 0.6
        Complex s = c.polar(std::sqrt(0.5), 0.2), t = c.polar(std::sqrt(0.5), 0.2);
        Complex z = c.polar(kArg), zp = c.polar(kArg), w = c.polar(kArg), wp = c.polar(kArg);
        auto v = decomposition_product(s, t, z, zp, w, wp, c.trunc());
        Params p{param("s", s), param("t", t), param("z", z), param("zp", zp), param("w", w), param("wp", wp)};
        auto p1 = p, p2 = p;
        p1.emplace_back("form", "series product");
        p2.emplace_back("form", "closed product");
        c.check(p1, v.series_product, v.bilinear);
        c.check(p2, v.closed_product, v.bilinear);
    });
}

} // namespace

void register_genfun_suites(std::vector<SuiteInfo>& r) {
    const SuiteKind S = SuiteKind::Series;
    const std::string G = "genfun";
    r.push_back({"hermite_gf", "Eq. (3.1)", G, S, 1e-9, {"gf_hermite"}, hermite_gf});
    r.push_back({"mehler", "Eq. (3.2)", G, S, 1e-9, {"gf_mehler"}, mehler});
    r.push_back({"mehler_factorized", "Eq. (3.2)", G, S, 1e-11, {"gf_mehler"}, mehler_factorized});
    r.push_back({"even_odd_hermite", "Eqs. (3.5)-(3.8)", G, S, 1e-9, {"gf_even_odd_hermite"}, even_odd_hermite});
    r.push_back({"factherm", "Eq. (3.3)", G, S, 1e-9, {"gf_factherm"}, factherm});
    r.push_back({"simple_laguerre2d", "Eq. (4.2)", G, S, 1e-9, {"gf_simple_laguerre2d"}, simple_laguerre2d});
    r.push_back({"simple_laguerre2d_special", "Eq. (4.3)", G, S, 1e-9, {"gf_simple_laguerre2d"},
                 simple_laguerre2d_special});
    r.push_back({"single_index_laguerre2d", "Eq. (4.4)", G, S, 1e-9, {"gf_simple_laguerre2d"}, single_index});
    r.push_back({"single_index_genlaguerre", "Eq. (4.5)", G, S, 1e-9, {}, single_index_genlaguerre});
    r.push_back({"bilinear", "Eq. (5.2)", G, S, 1e-9, {"gf_bilinear_laguerre2d"}, bilinear, 200});
    r.push_back({"bilinear_factorized", "Eq. (5.3)", G, S, 1e-11, {"gf_bilinear_laguerre2d"}, bilinear_factorized});
    r.push_back({"bilinear_genlaguerre", "Eq. (5.4)", G, S, 1e-9, {}, bilinear_genlaguerre, 200});
    r.push_back({"laguerre_diagonal", "Eq. (5.9)", G, S, 1e-9, {"gf_bilinear_laguerre2d"}, laguerre_diagonal, 200});
    r.push_back({"bilinear_limit", "Eq. (5.1)", G, S, 1e-2, {"gf_bilinear_laguerre2d"}, bilinear_limit});
    r.push_back({"completeness_probe", "Eq. (5.5)", G, S, 0.0, {"completeness_limit_probe"}, completeness});
    r.push_back({"hermite2d_product_gf", "Eq. (6.3)", G, S, 1e-9, {"gf_hermite2d_product"}, hermite2d_product});
    r.push_back({"hermite2d_even_product", "Eq. (6.4)", G, S, 1e-9, {"gf_hermite2d_product"}, hermite2d_even});
    r.push_back({"mixed", "Eq. (7.4)", G, S, 1e-9, {"gf_mixed"}, mixed});
    r.push_back({"even_index", "Eq. (7.5)", G, S, 1e-9, {"gf_even_index_laguerre2d"}, even_index});
    r.push_back({"even_index_factorized", "Eq. (7.5)", G, S, 1e-11, {"gf_even_index_laguerre2d"},
                 even_index_factorized});
    r.push_back({"even_index_sigma_tau", "Eq. (7.5)", G, S, 1e-9, {"gf_even_index_laguerre2d"}, even_index_sigma_tau, 200});
    r.push_back({"even_index_xy", "Eq. (7.5)", G, S, 1e-9, {"gf_even_index_laguerre2d"}, even_index_xy});
    r.push_back({"even_index_genlaguerre", "Eq. (7.9)", G, S, 1e-9, {}, even_index_genlaguerre, 40});
    r.push_back({"lagsum", "Eq. (8.2)", G, S, 1e-9, {"gf_lagsum"}, lagsum, 100});
    r.push_back({"lagsum_t_zero", "Eq. (8.2)", G, S, 1e-12, {"gf_lagsum"}, lagsum_limit, 100});
    r.push_back({"lagsum_genlaguerre", "Eq. (8.3)", G, S, 1e-9, {}, lagsum_genlaguerre, 100});
    r.push_back({"lagsum_diagonal", "Eq. (8.4)", G, S, 1e-9, {"gf_lagsum"}, lagsum_diagonal, 100});
    r.push_back({"lagsum_diagonal_genlaguerre", "Eq. (8.5)", G, S, 1e-9, {}, lagsum_diagonal_genlaguerre, 100});
    r.push_back({"lagsum_resummation", "Eq. (8.8)", G, S, 1e-10, {"gf_lagsum"}, lagsum_resum});
    r.push_back({"s10_roundtrip", "Eq. (10.1)", G, S, 1e-12, {"decompose_coords_s10"}, s10_roundtrip});
    r.push_back({"s10_decomposition", "Eq. (10.6)", G, S, 1e-10, {"decompose_coords_s10"}, s10_decomposition, 200});
}

} // namespace lagherm
