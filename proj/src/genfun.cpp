#include "lagherm/genfun.hpp"

#include "lagherm/poly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lagherm {

namespace {

constexpr Complex I{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);

int term_count(const TruncationSpec& trunc) {
    trunc.validate();
    return trunc.max_terms_per_index;
}

Complex ipow(Complex a, int e) {
    if (e < 0)
        return 1.0 / ipow(a, -e);
    Complex r = 1.0;
    while (e) {
        if (e & 1)
            r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

std::vector<Complex> powers(Complex a, int N) {
    std::vector<Complex> p(static_cast<std::size_t>(N));
    Complex c = 1.0;
    for (int k = 0; k < N; ++k) {
        p[k] = c;
        c *= a;
    }
    return p;
}

void require_nonzero(Complex v, const char* what) {
    if (v == Complex(0.0))
        throw DomainError(std::string(what) + " must be nonzero");
}

void require_below_one(double r, const char* what) {
    if (!(r < 1.0))
        throw DomainError(std::string(what) + " must be below 1 in modulus");
}

// Ratio handed to TailBound for series with factorial decay.
constexpr double kEntireRatio = 0.5;

// m!n!/(j!(m-j)!(n-j)!) in double
double tri(int m, int n, int j) {
    return std::exp(std::lgamma(m + 1.0) + std::lgamma(n + 1.0) - std::lgamma(j + 1.0) -
                    std::lgamma(m - j + 1.0) - std::lgamma(n - j + 1.0));
}

// Expanded (sqrt t)^{m+n} L_{m,n}(A/sqrt t, B/sqrt t) = sum_j (-1)^j tri t^j A^{m-j} B^{n-j}.
Complex root_form(int m, int n, Complex t, Complex A, Complex B) {
    Complex s = 0.0;
    for (int j = 0; j <= std::min(m, n); ++j) {
        Complex term = tri(m, n, j) * ipow(t, j) * ipow(A, m - j) * ipow(B, n - j);
        s += (j % 2) ? -term : term;
    }
    return s;
}

// Terms a_m h_{2m}(x) of sum (-1)^m/m! (T/2)^{2m} H_{2m}(x), with h the normalized Hermite values.
std::vector<Complex> even_hermite_terms(Complex T, Complex x, int N) {
    auto h = hermite_normalized_table(2 * N, x);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex a = 1.0;
    const Complex q = -T * T / 2.0;
    for (int m = 0; m < N; ++m) {
        terms[m] = a * h[2 * m];
        a *= q * std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0)) / (m + 1.0);
    }
    return terms;
}

Complex even_hermite_series(Complex T, Complex x, const TruncationSpec& trunc, double ratio, const char* what) {
    return accept_1d(even_hermite_terms(T, x, term_count(trunc)), trunc, ratio, what).value;
}

// Terms c_n h_n(x) of sum t^n/n! H_n(x).
std::vector<Complex> hermite_gf_terms(Complex t, Complex x, int N) {
    auto h = hermite_normalized_table(N, x);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex c = 1.0;
    for (int n = 0; n < N; ++n) {
        terms[n] = c * h[n];
        c *= kSqrt2 * t / std::sqrt(n + 1.0);
    }
    return terms;
}

// L_n(u), n = 0..N-1
std::vector<Complex> laguerre_table(Complex u, int N) {
    std::vector<Complex> L(static_cast<std::size_t>(N));
    if (N > 0)
        L[0] = 1.0;
    if (N > 1)
        L[1] = 1.0 - u;
    for (int n = 1; n + 1 < N; ++n)
        L[n + 1] = ((2.0 * n + 1.0 - u) * L[n] - static_cast<double>(n) * L[n - 1]) / (n + 1.0);
    return L;
}

// sum_m c^m l_{m,m}(a, b) with the normalized diagonal
Complex diagonal_series(Complex c, Complex a, Complex b, const TruncationSpec& trunc, const char* what) {
    const int N = term_count(trunc);
    Laguerre2DTable tab(N - 1, N - 1, a, b);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex p = 1.0;
    for (int m = 0; m < N; ++m) {
        terms[m] = p * tab(m, m);
        p *= c;
    }
    return accept_1d(terms, trunc, std::abs(c), what).value;
}

} // namespace

// ---- closed forms -------------------------------------------------------

Complex hermite_gf_rhs(Complex t, Complex x) { return std::exp(2.0 * t * x - t * t); }

Complex mehler_rhs(Complex t, Complex x, Complex y) {
    Complex d = 1.0 - t * t;
    return std::exp((2.0 * t * x * y - t * t * (x * x + y * y)) / d) / std::sqrt(d);
}

Complex mehler_rhs_factorized(Complex t, Complex x, Complex y) {
    Complex p = 1.0 + t, m = 1.0 - t;
    return std::exp(t * (x + y) * (x + y) / (2.0 * p)) / std::sqrt(p) *
           std::exp(-t * (x - y) * (x - y) / (2.0 * m)) / std::sqrt(m);
}

Complex even_hermite_rhs(Complex t, Complex x) {
    Complex d = 1.0 - t * t;
    return std::exp(-(t * x) * (t * x) / d) / std::sqrt(d);
}

Complex odd_hermite_rhs(Complex t, Complex x) {
    Complex d = 1.0 - t * t;
    Complex r = std::sqrt(d);
    return t * x / (r * r * r) * std::exp(-(t * x) * (t * x) / d);
}

Complex simple_laguerre2d_rhs(Complex s, Complex t, Complex z, Complex zp) {
    return std::exp(s * z + t * zp - s * t);
}

Complex bilinear_rhs(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp) {
    Complex d = 1.0 - s * t;
    return std::exp((s * z * wp + t * w * zp - s * t * (z * zp + w * wp)) / d) / d;
}

Complex bilinear_rhs_factorized(Complex rs, Complex rt, Complex z, Complex zp, Complex w, Complex wp) {
    Complex r = rs * rt;
    Complex p = 1.0 + r, m = 1.0 - r;
    return std::exp((rs * z + rt * w) * (rt * zp + rs * wp) / (2.0 * p)) / p *
           std::exp(-(rs * z - rt * w) * (rt * zp - rs * wp) / (2.0 * m)) / m;
}

Complex laguerre_gf_rhs(Complex t, Complex u) {
    Complex d = 1.0 - t;
    return std::exp(-t * u / d) / d;
}

Complex hermite2d_product_rhs(Complex s, Complex t, Complex x, Complex y, Complex u, Complex v) {
    Complex ds = 1.0 - s * s, dt = 1.0 - t * t;
    return std::exp((2.0 * s * x * u - s * s * (x * x + u * u)) / ds +
                    (2.0 * t * y * v - t * t * (y * y + v * v)) / dt) /
           std::sqrt(ds * dt);
}

Complex mixed_rhs(Complex s, Complex t, Complex z, Complex zp, Complex u, Complex v) {
    Complex st = s * t;
    Complex d = 1.0 - st * st;
    Complex num = 2.0 * kSqrt2 * (s * u * z + t * v * zp + st * (s * v * z + t * u * zp)) - s * s * z * z -
                  t * t * zp * zp - 4.0 * st * u * v - 2.0 * st * st * (z * zp + u * u + v * v);
    return std::exp(num / (2.0 * d)) / std::sqrt(d);
}

Complex even_index_rhs(Complex s, Complex t, Complex z, Complex zp) {
    Complex s2 = s * s, t2 = t * t;
    Complex d = 1.0 - s2 * t2;
    return std::exp(-(s2 * z * z + t2 * zp * zp + 2.0 * s2 * t2 * z * zp) / (2.0 * d)) / std::sqrt(d);
}

Complex even_index_rhs_factorized(Complex s, Complex t, Complex z, Complex zp) {
    Complex st = s * t;
    Complex a = s * z + t * zp, b = s * z - t * zp;
    return std::exp(-a * a / (4.0 * (1.0 - st))) / std::sqrt(1.0 - st) *
           std::exp(-b * b / (4.0 * (1.0 + st))) / std::sqrt(1.0 + st);
}

Complex sigma_tau_rhs(Complex sigma, Complex tau, Complex z, Complex zp) {
    Complex d = 1.0 - sigma * tau;
    return std::exp((sigma * z * z + tau * zp * zp - 2.0 * sigma * tau * z * zp) / (2.0 * d)) / std::sqrt(d);
}

// ---- Hermite ------------------------------------------------------------

GFPair gf_hermite(Complex t, Complex x, const TruncationSpec& trunc) {
    auto terms = hermite_gf_terms(t, x, term_count(trunc));
    return {accept_1d(terms, trunc, kEntireRatio, "hermite generating function").value, hermite_gf_rhs(t, x)};
}

GFTriple gf_mehler(Complex t, Complex x, Complex y, const TruncationSpec& trunc) {
    require_below_one(std::abs(t), "Mehler parameter t");
    const int N = term_count(trunc);
    auto hx = hermite_normalized_table(N, x);
    auto hy = hermite_normalized_table(N, y);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex p = 1.0;
    for (int n = 0; n < N; ++n) {
        terms[n] = p * hx[n] * hy[n];
        p *= t;
    }
    Complex lhs = accept_1d(terms, trunc, std::abs(t), "Mehler series").value;
    return {lhs, mehler_rhs(t, x, y), mehler_rhs_factorized(t, x, y)};
}

EvenOddHermite gf_even_odd_hermite(Complex t, Complex x, const TruncationSpec& trunc) {
    const int N = term_count(trunc);
    EvenOddHermite out;
    if (std::abs(t) < 1.0) {
        const double ratio = std::abs(t * t);
        out.even = GFPair{even_hermite_series(t, x, trunc, ratio, "even Hermite series"), even_hermite_rhs(t, x)};

        auto h = hermite_normalized_table(2 * N + 1, x);
        std::vector<Complex> odd(static_cast<std::size_t>(N));
        Complex b = t / kSqrt2;
        const Complex q = -t * t / 2.0;
        for (int m = 0; m < N; ++m) {
            odd[m] = b * h[2 * m + 1];
            b *= q * std::sqrt((2.0 * m + 2.0) * (2.0 * m + 3.0)) / (m + 1.0);
        }
        out.odd = GFPair{accept_1d(odd, trunc, ratio, "odd Hermite series").value, odd_hermite_rhs(t, x)};
    }
    auto all = hermite_gf_terms(t, x, N);
    std::vector<Complex> even_part, odd_part;
    for (int n = 0; n < N; ++n)
        (n % 2 ? odd_part : even_part).push_back(all[n]);
    Complex e = std::exp(-t * t);
    out.cosh_form = {accept_1d(even_part, trunc, kEntireRatio, "cosh-form series").value, e * std::cosh(2.0 * t * x)};
    out.sinh_form = {accept_1d(odd_part, trunc, kEntireRatio, "sinh-form series").value, e * std::sinh(2.0 * t * x)};
    return out;
}

GFTriple gf_factherm(int n, Complex x, Complex y) {
    if (n < 0 || n > 30)
        throw IndexError("gf_factherm index outside [0,30]");
    const Complex a = (x + y) / kSqrt2, b = (x - y) / kSqrt2;
    Complex first = 0.0, second = 0.0;
    for (int k = 0; k <= n; ++k) {
        double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
        Complex f = binom * hermite(2 * (n - k), a) * hermite(2 * k, b);
        first += (k % 2) ? -f : f;
        Complex g = gen_laguerre_real(n - k, -0.5, a * a) * gen_laguerre_real(k, -0.5, b * b);
        second += ((n - k) % 2) ? -g : g;
    }
    first /= std::ldexp(1.0, n);
    second *= std::ldexp(1.0, n) * std::tgamma(n + 1.0);
    return {hermite(n, x) * hermite(n, y), first, second};
}

// ---- simple Laguerre 2D -------------------------------------------------

GFPair gf_simple_laguerre2d(Complex s, Complex t, Complex z, Complex zp, const TruncationSpec& trunc) {
    const int N = term_count(trunc);
    Laguerre2DTable tab(N - 1, N - 1, z, zp);
    // s^m t^n/(m!n!) L_{m,n} = (s^m/sqrt m!)(t^n/sqrt n!) l_{m,n}
    std::vector<Complex> cs(static_cast<std::size_t>(N)), ct(static_cast<std::size_t>(N));
    Complex a = 1.0, b = 1.0;
    for (int k = 0; k < N; ++k) {
        cs[k] = a;
        ct[k] = b;
        a *= s / std::sqrt(k + 1.0);
        b *= t / std::sqrt(k + 1.0);
    }
    std::vector<Complex> terms(static_cast<std::size_t>(N) * N);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
            terms[static_cast<std::size_t>(m) * N + n] = cs[m] * ct[n] * tab(m, n);
    Complex lhs = accept_2d(terms, N, trunc, kEntireRatio, "simple Laguerre 2D series").value;
    return {lhs, simple_laguerre2d_rhs(s, t, z, zp)};
}

GFPair gf_single_index_laguerre2d(int m, Complex t, Complex z, Complex zp, const TruncationSpec& trunc) {
    PolyIndex::checked(m, 0);
    const int N = term_count(trunc);
    Laguerre2DTable tab(m, N - 1, z, zp);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex c = 1.0; // t^n/sqrt(n!)
    for (int n = 0; n < N; ++n) {
        terms[n] = c * tab(m, n);
        c *= t / std::sqrt(n + 1.0);
    }
    const double scale = std::sqrt(std::tgamma(m + 1.0));
    Complex lhs = scale * accept_1d(terms, trunc, kEntireRatio, "single-index Laguerre 2D series").value;
    return {lhs, ipow(z - t, m) * std::exp(t * zp)};
}

SingleIndexGenLaguerre gf_single_index_genlaguerre(int m, Complex t, Complex z, Complex zp,
                                                   const TruncationSpec& trunc) {
    PolyIndex::checked(m, 0);
    require_nonzero(z, "z");
    require_nonzero(zp, "z'");
    const int N = term_count(trunc);
    const Complex u = z * zp;
    std::vector<Complex> first(static_cast<std::size_t>(N)), middle(static_cast<std::size_t>(N));
    Complex p = 1.0, q = 1.0;
    for (int n = 0; n < N; ++n) {
        first[n] = p * gen_laguerre(n, m - n, u);
        middle[n] = q * gen_laguerre(m, n - m, u);
        p *= -t / z;
        q *= t * zp / (n + 1.0);
    }
    SingleIndexGenLaguerre out;
    out.first = accept_1d(first, trunc, std::min(kEntireRatio, std::abs(t / z)), "first generalized form").value;
    Complex pre = std::tgamma(m + 1.0) / ipow(-u, m);
    out.middle = pre * accept_1d(middle, trunc, kEntireRatio, "middle generalized form").value;
    out.rhs = ipow(1.0 - t / z, m) * std::exp(t * zp);
    return out;
}

GFPair gf_genlaguerre_fixed_upper(int m, Complex t, Complex u, const TruncationSpec& trunc) {
    PolyIndex::checked(m, 0);
    const int N = term_count(trunc);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex p = 1.0;
    for (int n = 0; n < N; ++n) {
        terms[n] = p * gen_laguerre(n, m - n, u);
        p *= t;
    }
    Complex lhs = accept_1d(terms, trunc, kEntireRatio, "fixed-upper-index series").value;
    return {lhs, std::exp(-u * t) * ipow(1.0 + t, m)};
}

// ---- bilinear -----------------------------------------------------------

BilinearValues gf_bilinear_laguerre2d(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                      const TruncationSpec& trunc) {
    require_below_one(std::abs(s * t), "bilinear parameter st");
    const int N = term_count(trunc);
    Laguerre2DTable a(N - 1, N - 1, z, zp);
    Laguerre2DTable b(N - 1, N - 1, wp, w);
    auto ps = powers(s, N), pt = powers(t, N);
    std::vector<Complex> terms(static_cast<std::size_t>(N) * N), swapped(terms.size());
    Laguerre2DTable c(N - 1, N - 1, w, wp);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            Complex f = ps[m] * pt[n] * a(m, n);
            terms[static_cast<std::size_t>(m) * N + n] = f * b(m, n);
            swapped[static_cast<std::size_t>(m) * N + n] = f * c(n, m);
        }
    const double ratio = std::sqrt(std::abs(s * t));
    BilinearValues out;
    out.lhs = accept_2d(terms, N, trunc, ratio, "bilinear series").value;
    out.lhs_swapped = accept_2d(swapped, N, trunc, ratio, "bilinear series, swapped form").value;
    out.rhs_direct = bilinear_rhs(s, t, z, zp, w, wp);
    out.rhs_factorized = bilinear_rhs_factorized(std::sqrt(s), std::sqrt(t), z, zp, w, wp);
    return out;
}

BilinearGenLaguerre gf_bilinear_genlaguerre(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                            const TruncationSpec& trunc) {
    require_below_one(std::abs(s * t), "bilinear parameter st");
    require_nonzero(z, "z");
    require_nonzero(wp, "w'");
    const int N = term_count(trunc);
    const Complex u1 = z * zp, u2 = w * wp;
    // L_n^{m-n}(u) for all m, n < N
    std::vector<Complex> A(static_cast<std::size_t>(N) * N), B(A.size());
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            A[static_cast<std::size_t>(m) * N + n] = gen_laguerre(n, m - n, u1);
            B[static_cast<std::size_t>(m) * N + n] = gen_laguerre(n, m - n, u2);
        }
    auto at = [&](const std::vector<Complex>& v, int m, int n) { return v[static_cast<std::size_t>(m) * N + n]; };
    std::vector<Complex> first(A.size()), second(A.size());
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            Complex st = ipow(s, m) * ipow(t, n);
            // n!/m! L_n^{m-n}(u); for m < n both factors overflow alone, the product is (-u)^{n-m} L_m^{n-m}(u)
            Complex fa = m >= n ? std::exp(std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) * at(A, m, n)
                                : ipow(-u1, n - m) * at(A, n, m);
            first[static_cast<std::size_t>(m) * N + n] = fa * ipow(z * wp, m - n) * st * at(B, m, n);
            // L_m^{n-m}(zz') is A at (n, m)
            second[static_cast<std::size_t>(m) * N + n] = st * ipow(-zp / wp, n - m) * at(A, n, m) * at(B, m, n);
        }
    const double ratio = std::sqrt(std::abs(s * t));
    BilinearGenLaguerre out;
    out.first = accept_2d(first, N, trunc, ratio, "bilinear generalized form 1").value;
    out.second = accept_2d(second, N, trunc, ratio, "bilinear generalized form 2").value;
    out.rhs = bilinear_rhs(s, t, z, zp, w, wp);
    return out;
}

DiagonalValues gf_laguerre_diagonal(Complex t, Complex z, Complex zp, const TruncationSpec& trunc) {
    require_below_one(std::abs(t), "Laguerre parameter t");
    const int N = term_count(trunc);
    DiagonalValues out;
    out.lhs2d = diagonal_series(-t, z, zp, trunc, "diagonal Laguerre 2D series");
    auto L = laguerre_table(z * zp, N);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex p = 1.0;
    for (int n = 0; n < N; ++n) {
        terms[n] = p * L[n];
        p *= t;
    }
    out.lhs_1d = accept_1d(terms, trunc, std::abs(t), "Laguerre series").value;
    out.rhs = laguerre_gf_rhs(t, z * zp);
    return out;
}

LimitProbe bilinear_limit_probe(double delta, Complex s, Complex t, Complex z, Complex zp, Complex w0,
                                Complex w0p) {
    if (!(delta > 0.0))
        throw DomainError("limit probe needs delta > 0");
    require_nonzero(w0, "w0");
    require_nonzero(w0p, "w0'");
    LimitProbe out;
    out.bilinear = bilinear_rhs(s * delta / w0p, t * delta / w0, z, zp, w0 / delta, w0p / delta);
    out.simple = simple_laguerre2d_rhs(s, t, z, zp);
    out.rel_diff = std::abs(out.bilinear - out.simple) / std::abs(out.simple);
    return out;
}

// ---- Hermite 2D products ------------------------------------------------

GFTriple gf_hermite2d_product(Complex s, Complex t, Complex x, Complex y, Complex u, Complex v,
                              const TruncationSpec& trunc) {
    require_below_one(std::abs(s), "parameter s");
    require_below_one(std::abs(t), "parameter t");
    const int N = term_count(trunc);
    auto hx = hermite_normalized_table(N, x), hu = hermite_normalized_table(N, u);
    auto hy = hermite_normalized_table(N, y), hv = hermite_normalized_table(N, v);
    auto ps = powers(s, N), pt = powers(t, N);
    std::vector<Complex> terms(static_cast<std::size_t>(N) * N);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
            terms[static_cast<std::size_t>(m) * N + n] = ps[m] * hx[m] * hu[m] * pt[n] * hy[n] * hv[n];
    const double ratio = std::max(std::abs(s), std::abs(t));
    Complex lhs = accept_2d(terms, N, trunc, ratio, "Hermite 2D product series").value;
    return {lhs, hermite2d_product_rhs(s, t, x, y, u, v), mehler_rhs(s, x, u) * mehler_rhs(t, y, v)};
}

GFPair gf_hermite2d_even_product(Complex s, Complex t, Complex x, Complex y, const TruncationSpec& trunc) {
    require_below_one(std::abs(s), "parameter s");
    require_below_one(std::abs(t), "parameter t");
    Complex a = even_hermite_series(s, x, trunc, std::abs(s * s), "even Hermite series in x");
    Complex b = even_hermite_series(t, y, trunc, std::abs(t * t), "even Hermite series in y");
    Complex ds = 1.0 - s * s, dt = 1.0 - t * t;
    Complex rhs = std::exp(-(s * x) * (s * x) / ds - (t * y) * (t * y) / dt) / std::sqrt(ds * dt);
    return {a * b, rhs};
}

// ---- mixed and even-index -----------------------------------------------

GFPair gf_mixed(Complex s, Complex t, Complex z, Complex zp, Complex u, Complex v, const TruncationSpec& trunc) {
    require_below_one(std::abs(s * t), "mixed parameter st");
    const int N = term_count(trunc);
    Laguerre2DTable tab(N - 1, N - 1, z, zp);
    auto hu = hermite_normalized_table(N, u), hv = hermite_normalized_table(N, v);
    auto ps = powers(s, N), pt = powers(t, N);
    std::vector<Complex> terms(static_cast<std::size_t>(N) * N);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
            terms[static_cast<std::size_t>(m) * N + n] = ps[m] * pt[n] * tab(m, n) * hu[m] * hv[n];
    const double ratio = std::sqrt(std::abs(s * t));
    Complex lhs = accept_2d(terms, N, trunc, ratio, "mixed Laguerre-Hermite series").value;
    return {lhs, mixed_rhs(s, t, z, zp, u, v)};
}

namespace {

// sum_{k,l} a_k b_l l_{2k,2l}(z,z') with a_k = (p/2)^k sqrt((2k)!)/k!, b_l likewise in q
Complex even_index_series(Complex p, Complex q, Complex z, Complex zp, const TruncationSpec& trunc, double ratio,
                          const char* what) {
    const int N = term_count(trunc);
    Laguerre2DTable tab(2 * N - 2, 2 * N - 2, z, zp);
    std::vector<Complex> a(static_cast<std::size_t>(N)), b(static_cast<std::size_t>(N));
    Complex ca = 1.0, cb = 1.0;
    for (int k = 0; k < N; ++k) {
        a[k] = ca;
        b[k] = cb;
        double r = std::sqrt((2.0 * k + 1.0) * (2.0 * k + 2.0)) / (k + 1.0);
        ca *= p / 2.0 * r;
        cb *= q / 2.0 * r;
    }
    std::vector<Complex> terms(static_cast<std::size_t>(N) * N);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
            terms[static_cast<std::size_t>(k) * N + l] = a[k] * b[l] * tab(2 * k, 2 * l);
    return accept_2d(terms, N, trunc, ratio, what).value;
}

} // namespace

GFTriple gf_even_index_laguerre2d(Complex s, Complex t, Complex z, Complex zp, const TruncationSpec& trunc) {
    require_below_one(std::abs(s * t), "even-index parameter st");
    Complex lhs = even_index_series(-s * s, -t * t, z, zp, trunc, std::abs(s * t), "even-index series");
    return {lhs, even_index_rhs(s, t, z, zp), even_index_rhs_factorized(s, t, z, zp)};
}

GFPair gf_even_index_sigma_tau(Complex sigma, Complex tau, Complex z, Complex zp, const TruncationSpec& trunc) {
    require_below_one(std::abs(sigma * tau), "even-index parameter sigma tau");
    Complex lhs = even_index_series(sigma, tau, z, zp, trunc, std::sqrt(std::abs(sigma * tau)), "sigma-tau series");
    return {lhs, sigma_tau_rhs(sigma, tau, z, zp)};
}

EvenIndexXY even_index_xy_decomposition(Complex s, Complex t, Complex z, Complex zp, const TruncationSpec& trunc) {
    require_nonzero(s, "s");
    require_nonzero(t, "t");
    require_below_one(std::abs(s * t), "even-index parameter st");
    const Complex a = std::sqrt(s / t);
    const Complex r = std::sqrt(s * t);
    EvenIndexXY out;
    out.x = 0.5 * (a * z + zp / a);
    out.y = -0.5 * I * (a * z - zp / a);
    const double ratio = std::abs(s * t);
    out.hermite_series = even_hermite_series(r, out.x, trunc, ratio, "even Hermite series in x") *
                         even_hermite_series(I * r, out.y, trunc, ratio, "even Hermite series in y");
    const Complex st = s * t;
    out.closed = std::exp(-st * out.x * out.x / (1.0 - st)) / std::sqrt(1.0 - st) *
                 std::exp(st * out.y * out.y / (1.0 + st)) / std::sqrt(1.0 + st);
    return out;
}

EvenIndexGenLaguerre gf_even_index_genlaguerre(Complex s, Complex t, Complex z, Complex zp,
                                               const TruncationSpec& trunc) {
    require_below_one(std::abs(s * t), "even-index parameter st");
    require_nonzero(z, "z");
    require_nonzero(zp, "z'");
    const int N = term_count(trunc);
    const Complex u = z * zp;
    const Complex hz = -z * z / 2.0, hzp = -zp * zp / 2.0;
    const double ln4 = std::log(4.0);
    std::vector<Complex> first(static_cast<std::size_t>(N) * N), second(first.size());
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
            Complex st = ipow(s, 2 * k) * ipow(t, 2 * l);
            // (l-1/2)!/(-1/2)! = (2l)!/(4^l l!)
            double f1 = std::exp(std::lgamma(2.0 * l + 1.0) - l * ln4 - std::lgamma(l + 1.0) - std::lgamma(k + 1.0));
            double f2 = std::exp(std::lgamma(2.0 * k + 1.0) - k * ln4 - std::lgamma(k + 1.0) - std::lgamma(l + 1.0));
            first[static_cast<std::size_t>(k) * N + l] = f1 * st * ipow(hz, k - l) * gen_laguerre(2 * l, 2 * (k - l), u);
            second[static_cast<std::size_t>(k) * N + l] =
                f2 * st * ipow(hzp, l - k) * gen_laguerre(2 * k, 2 * (l - k), u);
        }
    const double ratio = std::max(std::abs(s), std::abs(t));
    EvenIndexGenLaguerre out;
    out.first = accept_2d(first, N, trunc, std::min(ratio * ratio, 0.99), "even-index generalized form 1").value;
    out.second = accept_2d(second, N, trunc, std::min(ratio * ratio, 0.99), "even-index generalized form 2").value;
    return out;
}

// ---- single sums --------------------------------------------------------

LagsumValues gf_lagsum(int m, int n, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                       const TruncationSpec& trunc) {
    PolyIndex::checked(m, n);
    const int N = term_count(trunc);
    Laguerre2DTable a(m, N - 1, z, zp);
    Laguerre2DTable b(N - 1, n, w, wp);
    Laguerre2DTable c(n, N - 1, wp, w);
    std::vector<Complex> terms(static_cast<std::size_t>(N)), swapped(terms.size());
    Complex p = 1.0;
    for (int k = 0; k < N; ++k) {
        terms[k] = p * a(m, k) * b(k, n);
        swapped[k] = p * a(m, k) * c(n, k);
        p *= -t;
    }
    const double scale = std::sqrt(std::tgamma(m + 1.0) * std::tgamma(n + 1.0));
    LagsumValues out;
    out.lhs = scale * accept_1d(terms, trunc, kEntireRatio, "single sum").value;
    out.lhs_swapped = scale * accept_1d(swapped, trunc, kEntireRatio, "single sum, swapped form").value;
    const Complex e = std::exp(-t * w * zp);
    const Complex A = z + t * w, B = wp + t * zp;
    out.rhs_root = e * root_form(m, n, t, A, B);
    if (t != Complex(0.0)) {
        const Complex r = std::sqrt(t);
        out.rhs_sqrt = e * ipow(r, m + n) * laguerre2d(m, n, A / r, B / r, EvalRoute::ExplicitSum);
        out.rhs_division = e * ipow(t, n) * laguerre2d(m, n, A, zp + wp / t, EvalRoute::ExplicitSum);
    }
    return out;
}

FourForms gf_lagsum_genlaguerre(int m, int n, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                const TruncationSpec& trunc) {
    PolyIndex::checked(m, n);
    for (auto [v, name] : {std::pair{z, "z"}, {zp, "z'"}, {w, "w"}, {wp, "w'"}, {t, "t"}})
        require_nonzero(v, name);
    const int N = term_count(trunc);
    const Complex u1 = z * zp, u2 = w * wp;
    std::vector<Complex> ta(static_cast<std::size_t>(N)), tb(ta.size());
    Complex pa = 1.0, pb = 1.0; // k!(-t/(zw'))^k and (-twz')^k/k!
    for (int k = 0; k < N; ++k) {
        ta[k] = pa * gen_laguerre(k, m - k, u1) * gen_laguerre(k, n - k, u2);
        tb[k] = pb * gen_laguerre(m, k - m, u1) * gen_laguerre(n, k - n, u2);
        pa *= -t / (z * wp) * (k + 1.0);
        pb *= -t * w * zp / (k + 1.0);
    }
    FourForms out;
    out.reference = gf_lagsum(m, n, t, z, zp, w, wp, trunc).rhs_root;
    out.a = ipow(z, m) * ipow(wp, n) * accept_1d(ta, trunc, kEntireRatio, "single sum form a").value;
    const double mn = std::tgamma(m + 1.0) * std::tgamma(n + 1.0);
    out.b = ((m + n) % 2 ? -mn : mn) / (ipow(zp, m) * ipow(w, n)) *
            accept_1d(tb, trunc, kEntireRatio, "single sum form b").value;
    const Complex e = std::exp(-t * w * zp);
    const Complex A = z + t * w, B = wp + t * zp, U = A * B / t;
    out.c = e * std::tgamma(n + 1.0) * ipow(-t, n) * ipow(A, m - n) * gen_laguerre(n, m - n, U);
    out.d = e * std::tgamma(m + 1.0) * ipow(-t, m) * ipow(B, n - m) * gen_laguerre(m, n - m, U);
    return out;
}

LagsumDiagonal gf_lagsum_diagonal(int m, int n, Complex t, Complex z, Complex zp, const TruncationSpec& trunc) {
    auto v = gf_lagsum(m, n, t, z, zp, z, zp, trunc);
    LagsumDiagonal out;
    out.lhs = v.lhs;
    out.rhs_root = v.rhs_root;
    if (t == Complex(0.0)) {
        out.rhs_sqrt = v.rhs_root;
    } else {
        const Complex r = std::sqrt(t);
        const Complex f = (1.0 + t) / r;
        out.rhs_sqrt = std::exp(-t * z * zp) * ipow(r, m + n) * laguerre2d(m, n, f * z, f * zp, EvalRoute::ExplicitSum);
    }
    return out;
}

FourForms gf_lagsum_diagonal_genlaguerre(int m, int n, Complex t, Complex z, Complex zp,
                                         const TruncationSpec& trunc) {
    PolyIndex::checked(m, n);
    require_nonzero(t, "t");
    const Complex u = z * zp;
    require_nonzero(u, "u");
    const int N = term_count(trunc);
    std::vector<Complex> ta(static_cast<std::size_t>(N)), tb(ta.size());
    Complex pa = 1.0, pb = 1.0;
    for (int k = 0; k < N; ++k) {
        ta[k] = pa * gen_laguerre(k, m - k, u) * gen_laguerre(k, n - k, u);
        tb[k] = pb * gen_laguerre(m, k - m, u) * gen_laguerre(n, k - n, u);
        pa *= -t / u * (k + 1.0);
        pb *= -t * u / (k + 1.0);
    }
    FourForms out;
    out.reference = gf_lagsum_diagonal(m, n, t, z, zp, trunc).lhs / (ipow(z, m) * ipow(zp, n));
    out.a = accept_1d(ta, trunc, kEntireRatio, "diagonal form a").value;
    const double mn = std::tgamma(m + 1.0) * std::tgamma(n + 1.0);
    out.b = ((m + n) % 2 ? -mn : mn) / ipow(u, m + n) * accept_1d(tb, trunc, kEntireRatio, "diagonal form b").value;
    const Complex e = std::exp(-t * u);
    const Complex U = (1.0 + t) * (1.0 + t) / t * u;
    out.c = e * std::tgamma(n + 1.0) * ipow(-t / u, n) * ipow(1.0 + t, m - n) * gen_laguerre(n, m - n, U);
    out.d = e * std::tgamma(m + 1.0) * ipow(-t / u, m) * ipow(1.0 + t, n - m) * gen_laguerre(m, n - m, U);
    return out;
}

Resummation lagsum_resummation(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                               const TruncationSpec& trunc) {
    require_nonzero(t, "t");
    const Complex st = s * t;
    require_below_one(std::abs(st), "parameter st");
    const int N = term_count(trunc);
    const Complex e = std::exp(t * w * zp);
    Resummation out;
    out.via_lagsum = e * diagonal_series(-st, z - t * w, zp - wp / t, trunc, "resummed single sums");
    const Complex U = -(z - t * w) * (wp - t * zp) / t;
    auto L = laguerre_table(U, N);
    std::vector<Complex> terms(static_cast<std::size_t>(N));
    Complex p = 1.0;
    for (int m = 0; m < N; ++m) {
        terms[m] = p * L[m];
        p *= st;
    }
    out.via_laguerre = e * accept_1d(terms, trunc, std::abs(st), "resummed Laguerre series").value;
    out.closed = e * std::exp(s * (z - t * w) * (wp - t * zp) / (1.0 - st)) / (1.0 - st);
    return out;
}

// ---- coordinate decomposition -------------------------------------------

S10Coords decompose_coords_s10(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp) {
    require_nonzero(s, "s");
    require_nonzero(t, "t");
    const Complex q = std::pow(t / s, 0.25);
    return {(z / q + q * w) / kSqrt2, (q * zp + wp / q) / kSqrt2, (z / q - q * w) / kSqrt2,
            (q * zp - wp / q) / kSqrt2};
}

S10Original recompose_coords_s10(Complex s, Complex t, const S10Coords& c) {
    require_nonzero(s, "s");
    require_nonzero(t, "t");
    const Complex q = std::pow(t / s, 0.25);
    return {q * (c.x + c.y) / kSqrt2, (c.xp + c.yp) / (q * kSqrt2), (c.x - c.y) / (q * kSqrt2),
            q * (c.xp - c.yp) / kSqrt2};
}

Decomposition decomposition_product(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                    const TruncationSpec& trunc) {
    require_below_one(std::abs(s * t), "parameter st");
    auto c = decompose_coords_s10(s, t, z, zp, w, wp);
    const Complex q = std::pow(t / s, 0.25);
    const Complex R = s * q * q;
    Decomposition out;
    out.series_product = diagonal_series(R, c.x, c.xp, trunc, "decomposed series in x") *
                         diagonal_series(-R, c.y, c.yp, trunc, "decomposed series in y");
    out.closed_product = std::exp(R * c.x * c.xp / (1.0 + R)) / (1.0 + R) *
                         std::exp(-R * c.y * c.yp / (1.0 - R)) / (1.0 - R);
    out.bilinear = bilinear_rhs(s, t, z, zp, w, wp);
    return out;
}

// ---- completeness surrogate ---------------------------------------------

CompletenessProbe completeness_limit_probe(double eps, Complex z) {
    if (!(eps > 0.0 && eps <= 0.5))
        throw DomainError("completeness probe needs eps in (0, 0.5]");
    const Complex s = 1.0 - eps / 2.0;
    const Complex w = z + 1.0;
    const double zz = std::norm(z), ww = std::norm(w);
    CompletenessProbe out;
    out.kernel_coincident = std::abs(bilinear_rhs(s, s, z, std::conj(z), z, std::conj(z))) * std::exp(-zz);
    out.kernel_displaced = std::abs(bilinear_rhs(s, s, z, std::conj(z), w, std::conj(w))) * std::exp(-(zz + ww) / 2.0);
    out.concentration = out.kernel_coincident / out.kernel_displaced;
    out.envelope = eps * out.kernel_coincident;
    return out;
}

} // namespace lagherm
