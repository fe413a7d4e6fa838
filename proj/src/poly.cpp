#include "lagherm/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lagherm {

namespace {

// mant * 2^exp with max(|re|,|im|) of mant in [0.5, 1). Explicit-sum
// coefficients leave double range long before the index bound.
struct Scaled {
    Complex mant{0.0, 0.0};
    int exp = 0;
};

Scaled normalize(Complex c, int exp) {
    double a = std::max(std::abs(c.real()), std::abs(c.imag()));
    if (a == 0.0)
        return {};
    int e = 0;
    std::frexp(a, &e);
    return {Complex(std::ldexp(c.real(), -e), std::ldexp(c.imag(), -e)), exp + e};
}

Scaled times(const Scaled& a, const Scaled& b) { return normalize(a.mant * b.mant, a.exp + b.exp); }

std::vector<Scaled> power_table(Complex x, int k) {
    std::vector<Scaled> p(static_cast<std::size_t>(k) + 1);
    p[0] = normalize(1.0, 0);
    Scaled base = normalize(x, 0);
    for (int i = 1; i <= k; ++i)
        p[i] = times(p[i - 1], base);
    return p;
}

Complex scaled_ldexp(Complex c, int e) { return {std::ldexp(c.real(), e), std::ldexp(c.imag(), e)}; }

struct ScaledSum {
    Complex value;
    double magnitude;
};

ScaledSum accumulate(const std::vector<Scaled>& terms) {
    int top = 0;
    bool any = false;
    for (const auto& t : terms) {
        if (t.mant == Complex(0.0, 0.0))
            continue;
        top = any ? std::max(top, t.exp) : t.exp;
        any = true;
    }
    if (!any)
        return {Complex(0.0, 0.0), 0.0};
    Complex s = 0.0;
    double mag = 0.0;
    for (const auto& t : terms) {
        if (t.mant == Complex(0.0, 0.0))
            continue;
        Complex c = scaled_ldexp(t.mant, t.exp - top);
        s += c;
        mag += std::abs(c);
    }
    return {scaled_ldexp(s, top), std::ldexp(mag, top)};
}

void check_n(int n) {
    if (n < 0 || n > kMaxPolyIndex)
        throw IndexError("polynomial degree " + std::to_string(n) + " outside [0," +
                         std::to_string(kMaxPolyIndex) + "]");
}

ScaledSum hermite_explicit(int n, Complex x) {
    auto pw = power_table(2.0 * x, n);
    std::vector<Scaled> terms;
    Scaled c = normalize(1.0, 0);
    for (int l = 0; 2 * l <= n; ++l) {
        terms.push_back(times(c, pw[n - 2 * l]));
        double ratio = -static_cast<double>(n - 2 * l) * (n - 2 * l - 1) / (l + 1);
        c = normalize(c.mant * ratio, c.exp);
    }
    return accumulate(terms);
}

Complex hermite_recurrence(int n, Complex x) {
    Complex prev = 1.0;
    if (n == 0)
        return prev;
    Complex cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        Complex next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double factorial_times_power(int m, double base) {
    // base^m * m!
    double r = 1.0;
    for (int k = 1; k <= m; ++k)
        r *= base * k;
    return r;
}

Complex hermite_cross(int n, Complex x) {
    int m = n / 2;
    double sign = m % 2 ? -1.0 : 1.0;
    if (n % 2 == 0)
        return sign * factorial_times_power(m, 4.0) * gen_laguerre_real(m, -0.5, x * x);
    return sign * 2.0 * factorial_times_power(m, 4.0) * x * gen_laguerre_real(m, 0.5, x * x);
}

ScaledSum laguerre_explicit(int m, int n, Complex z, Complex zp) {
    auto pz = power_table(z, m);
    auto pzp = power_table(zp, n);
    std::vector<Scaled> terms;
    Scaled c = normalize(1.0, 0);
    for (int j = 0; j <= std::min(m, n); ++j) {
        terms.push_back(times(times(c, pz[m - j]), pzp[n - j]));
        double ratio = -static_cast<double>(m - j) * (n - j) / (j + 1);
        c = normalize(c.mant * ratio, c.exp);
    }
    return accumulate(terms);
}

Complex laguerre_recurrence(int m, int n, Complex z, Complex zp) {
    // col[k] holds L_{k,j}(z,z') for the current j; start from L_{k,0} = z^k.
    std::vector<Complex> col(static_cast<std::size_t>(m) + 1);
    col[0] = 1.0;
    for (int k = 1; k <= m; ++k)
        col[k] = col[k - 1] * z;
    for (int j = 0; j < n; ++j)
        for (int k = m; k >= 0; --k)
            col[k] = zp * col[k] - (k > 0 ? static_cast<double>(k) * col[k - 1] : Complex(0.0));
    return col[m];
}

Complex laguerre_cross(int m, int n, Complex z, Complex zp) {
    if (m >= n) {
        double f = (n % 2 ? -1.0 : 1.0) * std::tgamma(n + 1.0);
        return f * std::pow(z, m - n) * gen_laguerre(n, m - n, z * zp);
    }
    double f = (m % 2 ? -1.0 : 1.0) * std::tgamma(m + 1.0);
    return f * std::pow(zp, n - m) * gen_laguerre(m, n - m, z * zp);
}

Complex laguerre_recurrence_general(int n, Complex alpha, Complex u) {
    Complex prev = 1.0;
    if (n == 0)
        return prev;
    Complex cur = 1.0 + alpha - u;
    for (int k = 1; k < n; ++k) {
        Complex next = ((2.0 * k + 1.0 + alpha - u) * cur - (static_cast<double>(k) + alpha) * prev) /
                       static_cast<double>(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

// Gaussian integer a + ib with exact components.
struct GaussInt {
    BigInt re = 0;
    BigInt im = 0;
};

// i^p as a Gaussian integer.
GaussInt i_power(int p) {
    switch (((p % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

GaussInt gmul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

} // namespace

Complex hermite(int n, Complex x, EvalRoute route) {
    check_n(n);
    switch (route) {
    case EvalRoute::ExplicitSum: return hermite_explicit(n, x).value;
    case EvalRoute::Recurrence: return hermite_recurrence(n, x);
    case EvalRoute::CrossFamily: return hermite_cross(n, x);
    }
    throw std::logic_error("unhandled route");
}

Complex laguerre2d(PolyIndex idx, ComplexPoint2D p, EvalRoute route) {
    idx = PolyIndex::checked(idx.m, idx.n);
    p = ComplexPoint2D::checked(p.z, p.zp);
    switch (route) {
    case EvalRoute::ExplicitSum: return laguerre_explicit(idx.m, idx.n, p.z, p.zp).value;
    case EvalRoute::Recurrence: return laguerre_recurrence(idx.m, idx.n, p.z, p.zp);
    case EvalRoute::CrossFamily: return laguerre_cross(idx.m, idx.n, p.z, p.zp);
    }
    throw std::logic_error("unhandled route");
}

Complex laguerre2d(int m, int n, Complex z, Complex zp, EvalRoute route) {
    return laguerre2d(PolyIndex::checked(m, n), ComplexPoint2D{z, zp}, route);
}

Complex gen_laguerre(int n, int nu, Complex u) {
    check_n(n);
    if (n + nu < 0)
        throw DomainError("generalized Laguerre order nu=" + std::to_string(nu) + " below -n for n=" +
                          std::to_string(n));
    if (nu >= 0)
        return laguerre_recurrence_general(n, static_cast<double>(nu), u);
    // L_n^{-k}(u) = (-u)^k (n-k)!/n! L_{n-k}^k(u); the recurrence at negative order cancels badly.
    const int k = -nu;
    Complex f = 1.0;
    for (int j = 0; j < k; ++j)
        f *= -u / static_cast<double>(n - j);
    return f * laguerre_recurrence_general(n - k, static_cast<double>(k), u);
}

Complex gen_laguerre_real(int n, double alpha, Complex u) {
    check_n(n);
    return laguerre_recurrence_general(n, alpha, u);
}

Complex hermite2d(PolyIndex idx, Complex x, Complex y) {
    idx = PolyIndex::checked(idx.m, idx.n);
    return hermite_recurrence(idx.m, x) * hermite_recurrence(idx.n, y);
}

Complex laguerre2d_function(PolyIndex idx, Complex z) {
    idx = PolyIndex::checked(idx.m, idx.n);
    if (!is_finite(z))
        throw DomainError("non-finite argument");
    Laguerre2DTable tab(idx.m, idx.n, z, std::conj(z));
    return tab(idx.m, idx.n) * std::exp(-0.5 * std::norm(z)) / std::sqrt(std::numbers::pi);
}

std::vector<BigRational> jacobi0_row(int m, int n) {
    PolyIndex::checked(m, n);
    const int N = m + n;
    // (x+iy)^m = sum_a C(m,a) i^{m-a} x^a y^{m-a};  (x-iy)^n likewise with -i.
    std::vector<GaussInt> A(static_cast<std::size_t>(m) + 1), B(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a <= m; ++a) {
        GaussInt u = i_power(m - a);
        BigInt c = binomial(m, a);
        A[a] = {u.re * c, u.im * c};
    }
    for (int b = 0; b <= n; ++b) {
        GaussInt u = i_power(3 * (n - b)); // (-i)^k = i^{3k}
        BigInt c = binomial(n, b);
        B[b] = {u.re * c, u.im * c};
    }
    std::vector<GaussInt> C(static_cast<std::size_t>(N) + 1);
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= n; ++b) {
            GaussInt p = gmul(A[a], B[b]);
            C[a + b].re += p.re;
            C[a + b].im += p.im;
        }
    std::vector<BigRational> row(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
        // P_j = (-1)^n c_j / (i^{N-j} 2^j)
        GaussInt q = gmul(C[j], i_power(3 * (N - j)));
        if (q.im != 0)
            throw std::logic_error("non-real Jacobi coefficient");
        BigInt num = n % 2 ? BigInt(-q.re) : q.re;
        BigInt den = 1;
        den <<= static_cast<mp_bitcnt_t>(j);
        row[j] = make_rational(num, den);
    }
    return row;
}

BigRational jacobi0(int j, int m, int n) {
    PolyIndex::checked(m, n);
    if (j < 0 || j > m + n)
        throw IndexError("jacobi0 index j=" + std::to_string(j) + " outside [0," + std::to_string(m + n) + "]");
    return jacobi0_row(m, n)[j];
}

DerivativeCheck derivative_check(PolyIndex idx, ComplexPoint2D p, double h) {
    idx = PolyIndex::checked(idx.m, idx.n);
    if (!(h >= 1e-6 && h <= 1e-3))
        throw DomainError("finite-difference step outside [1e-6, 1e-3]");
    Complex up = laguerre_recurrence(idx.m, idx.n, p.z + h, p.zp);
    Complex down = laguerre_recurrence(idx.m, idx.n, p.z - h, p.zp);
    Complex fd = (up - down) / (2.0 * h);
    Complex an = idx.m == 0 ? Complex(0.0) : static_cast<double>(idx.m) * laguerre_recurrence(idx.m - 1, idx.n, p.z, p.zp);
    return {fd, an};
}

Complex laguerre2d_from_hermite(PolyIndex idx, Complex x, Complex y) {
    idx = PolyIndex::checked(idx.m, idx.n);
    const int N = idx.m + idx.n;
    auto P = jacobi0_row(idx.m, idx.n);
    const Complex half_i(0.0, 0.5);
    Complex s = 0.0;
    for (int j = 0; j <= N; ++j) {
        if (P[j] == 0)
            continue;
        s += std::pow(half_i, N - j) * P[j].get_d() * hermite_recurrence(j, x) * hermite_recurrence(N - j, y);
    }
    return idx.n % 2 ? -s : s;
}

Complex hermite_product_from_laguerre2d(PolyIndex idx, Complex x, Complex y) {
    idx = PolyIndex::checked(idx.m, idx.n);
    const int N = idx.m + idx.n;
    auto P = jacobi0_row(idx.m, idx.n);
    Complex z(x + Complex(0.0, 1.0) * y), zs(x - Complex(0.0, 1.0) * y);
    Complex s = 0.0;
    for (int j = 0; j <= N; ++j) {
        if (P[j] == 0)
            continue;
        s += std::ldexp(P[j].get_d(), j) * laguerre_recurrence(j, N - j, z, zs);
    }
    return std::pow(Complex(0.0, 1.0), idx.n) * s;
}

double hermite_magnitude(int n, Complex x) {
    check_n(n);
    return hermite_explicit(n, x).magnitude;
}

double laguerre2d_magnitude(PolyIndex idx, ComplexPoint2D p) {
    idx = PolyIndex::checked(idx.m, idx.n);
    return laguerre_explicit(idx.m, idx.n, p.z, p.zp).magnitude;
}

std::vector<Complex> hermite_normalized_table(int N, Complex x) {
    if (N < 0)
        throw IndexError("negative table size");
    std::vector<Complex> h(static_cast<std::size_t>(N) + 1);
    h[0] = 1.0;
    if (N >= 1)
        h[1] = std::sqrt(2.0) * x;
    for (int k = 1; k < N; ++k)
        h[k + 1] = (std::sqrt(2.0) * x * h[k] - std::sqrt(static_cast<double>(k)) * h[k - 1]) /
                   std::sqrt(k + 1.0);
    return h;
}

Laguerre2DTable::Laguerre2DTable(int M, int N, Complex z, Complex zp)
    : M_(M), N_(N), data_(static_cast<std::size_t>(M + 1) * (N + 1)) {
    if (M < 0 || N < 0)
        throw IndexError("negative table size");
    auto at = [&](int m, int n) -> Complex& { return data_[static_cast<std::size_t>(m) * (N_ + 1) + n]; };
    at(0, 0) = 1.0;
    for (int k = 1; k <= M; ++k)
        at(k, 0) = at(k - 1, 0) * z / std::sqrt(static_cast<double>(k));
    for (int n = 0; n < N; ++n)
        for (int k = 0; k <= M; ++k) {
            Complex v = zp * at(k, n);
            if (k > 0)
                v -= std::sqrt(static_cast<double>(k)) * at(k - 1, n);
            at(k, n + 1) = v / std::sqrt(n + 1.0);
        }
}

} // namespace lagherm
