#include "lagherm/su11.hpp"

#include "lagherm/exact_identities.hpp"
#include "lagherm/genfun.hpp"
#include "lagherm/poly.hpp"

#include <algorithm>
#include <cmath>

namespace lagherm {

namespace {

constexpr Complex I{0.0, 1.0};
const double kPi = std::acos(-1.0);

Complex ipow(Complex a, int e) {
    Complex r = 1.0;
    for (int k = 0; k < e; ++k)
        r *= a;
    return r;
}

// Real part of alpha|w|^2 + beta w^2 + gamma w*^2 + delta w + eps w*, w = x+iy,
// as a quadratic form in (x, y). Used only to place integration windows.
struct Quadratic2 {
    Complex alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0, eps = 0.0;

    // adds (w - a)(w* - b)/c
    void add_product(Complex a, Complex b, Complex c) {
        alpha += 1.0 / c;
        delta -= b / c;
        eps -= a / c;
    }

    std::pair<Window, Window> windows(int degree) const {
        double mxx = alpha.real() + beta.real() + gamma.real();
        double myy = alpha.real() - beta.real() - gamma.real();
        double mxy = -beta.imag() + gamma.imag();
        double gx = (delta + eps).real();
        double gy = (I * (delta - eps)).real();
        double det = mxx * myy - mxy * mxy;
        double tr = mxx + myy;
        double lmin = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
        if (!(lmin > 0.0) || !(det > 0.0))
            throw DomainError("integrand does not decay on the plane");
        // minimizer of x^T M x + g.x
        double cx = -(myy * gx - mxy * gy) / (2.0 * det);
        double cy = -(-mxy * gx + mxx * gy) / (2.0 * det);
        return {gaussian_window(cx, lmin, degree), gaussian_window(cy, lmin, degree)};
    }
};

// 1D: Re(a y^2 + b y)
Window window_1d(Complex a, Complex b, int degree) {
    if (!(a.real() > 0.0))
        throw DomainError("integrand does not decay on the line");
    return gaussian_window(-b.real() / (2.0 * a.real()), a.real(), degree);
}

Complex heat_kernel_norm_1d(Complex s) { return 1.0 / std::sqrt(kPi * s); }

Complex ch_taylor(Complex e2) { return 1.0 + e2 / 2.0 + e2 * e2 / 24.0 + e2 * e2 * e2 / 720.0 + e2 * e2 * e2 * e2 / 40320.0; }
Complex shc_taylor(Complex e2) {
    return 1.0 + e2 / 6.0 + e2 * e2 / 120.0 + e2 * e2 * e2 / 5040.0 + e2 * e2 * e2 * e2 / 362880.0;
}

} // namespace

// ---- disentanglement ------------------------------------------------------

UnimodularMatrix disentangle_with_root(const DisentangleInput& in, Complex eps) {
    Complex ch, shc;
    if (std::abs(eps) < 1e-4) {
        Complex e2 = eps * eps;
        ch = ch_taylor(e2);
        shc = shc_taylor(e2);
    } else {
        ch = std::cosh(eps);
        shc = std::sinh(eps) / eps;
    }
    return {ch - I * in.eta * shc, in.xi * shc, in.zeta * shc, ch + I * in.eta * shc};
}

UnimodularMatrix disentangle(const DisentangleInput& in) {
    return disentangle_with_root(in, std::sqrt(in.xi * in.zeta - in.eta * in.eta));
}

Mat2 matmul2(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 expm2(const Mat2& a) {
    double norm = std::max(std::abs(a[0]) + std::abs(a[1]), std::abs(a[2]) + std::abs(a[3]));
    int squarings = 0;
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    Mat2 x{a[0] * scale, a[1] * scale, a[2] * scale, a[3] * scale};
    Mat2 result{1.0, 0.0, 0.0, 1.0};
    Mat2 term{1.0, 0.0, 0.0, 1.0};
    for (int k = 1; k <= 24; ++k) {
        term = matmul2(term, x);
        for (auto& v : term)
            v /= static_cast<double>(k);
        for (int i = 0; i < 4; ++i)
            result[i] += term[i];
    }
    for (int k = 0; k < squarings; ++k)
        result = matmul2(result, result);
    return result;
}

Mat2 generator_matrix(const DisentangleInput& in) { return {-I * in.eta, in.xi, in.zeta, I * in.eta}; }

double disentangle_product_residual(const DisentangleInput& in) {
    UnimodularMatrix u = disentangle(in);
    if (std::abs(u.kappa) < 1e-8)
        throw DomainError("kappa vanishes; this factor ordering does not exist");
    // c K+ is zeta = -c; c K- is xi = c; c 2K0 is eta = -i c.
    Mat2 f1 = expm2(generator_matrix({0.0, 0.0, u.mu / u.kappa}));
    Mat2 f2 = expm2(generator_matrix({u.lambda * u.kappa, 0.0, 0.0}));
    Mat2 f3 = expm2(generator_matrix({0.0, I * std::log(u.kappa), 0.0}));
    Mat2 prod = matmul2(matmul2(f1, f2), f3);
    Mat2 whole = expm2(generator_matrix(in));
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        r = std::max(r, std::abs(prod[i] - whole[i]));
    return r;
}

// ---- oracles ------------------------------------------------------------

Complex gauss_conv_1d_oracle(Complex s, double x, const std::function<Complex(double)>& g, Window w,
                             const QuadratureSpec& spec) {
    if (!((1.0 / s).real() > 0.0))
        throw DomainError("convolution kernel does not decay");
    Complex v = integrate_1d([&](double y) { return std::exp(-(x - y) * (x - y) / s) * g(y); }, w, spec);
    return v * heat_kernel_norm_1d(s);
}

Complex gauss_conv_2d_oracle(Complex s, Complex z, const std::function<Complex(Complex)>& g, Window wx, Window wy,
                             const QuadratureSpec& spec) {
    if (!((1.0 / s).real() > 0.0))
        throw DomainError("convolution kernel does not decay");
    Complex v = integrate_2d(
        [&](double x, double y) {
            Complex w{x, y};
            return std::exp(-std::norm(z - w) / s) * g(w);
        },
        wx, wy, spec);
    return v / (kPi * s);
}

// ---- 1D operator identities ---------------------------------------------

OpCheck op_identity_1d(const ConvParams1D& p, OpKind1D kind, int n, double x, Complex q, const QuadratureSpec& spec) {
    const Complex r = p.r, s = p.s, x0 = p.x0;
    if (n < 0 || n > kMaxPolyIndex)
        throw IndexError("operator identity index out of range");
    std::function<Complex(double)> f;
    int degree = 0;
    Complex a = 1.0 / s + 1.0 / r, b = -2.0 * x / s - 2.0 * x0 / r;
    switch (kind) {
    case OpKind1D::Constant: f = [&](double) { return 1.0 / std::sqrt(kPi * r); }; break;
    case OpKind1D::Monomial:
        f = [&](double y) { return ipow(2.0 * y, n); };
        degree = n;
        break;
    case OpKind1D::Hermite:
        f = [&](double y) { return hermite(n, y); };
        degree = n;
        break;
    case OpKind1D::Gaussian:
        f = [&](double y) { return std::exp(-y * y / q); };
        a += 1.0 / q;
        break;
    }
    auto g = [&](double y) { return std::exp(-(y - x0) * (y - x0) / r) * f(y); };
    OpCheck out;
    out.oracle = gauss_conv_1d_oracle(s, x, g, window_1d(a, b, degree), spec);

    const Complex rs = r + s;
    const Complex pre = std::sqrt(r / rs) * std::exp(-(x - x0) * (x - x0) / rs);
    const Complex num = r * x + s * x0; // (r+s) X
    auto rooted = [&](Complex rho) { return pre * ipow(rho / rs, n) * hermite(n, num / rho); };
    switch (kind) {
    case OpKind1D::Constant: out.closed = out.closed_flipped = pre / std::sqrt(kPi * r); break;
    case OpKind1D::Monomial: {
        Complex rho = std::sqrt(-r * s * rs);
        out.closed = rooted(rho);
        out.closed_flipped = rooted(-rho);
        break;
    }
    case OpKind1D::Hermite: {
        Complex rho = std::sqrt((rs - r * s) * rs);
        out.closed = rooted(rho);
        out.closed_flipped = rooted(-rho);
        break;
    }
    case OpKind1D::Gaussian: {
        Complex c = r * s / rs;
        Complex X = num / rs;
        out.closed = out.closed_flipped = pre * std::sqrt(q / (q + c)) * std::exp(-X * X / (q + c));
        break;
    }
    }
    return out;
}

std::pair<Complex, Complex> op_identity_1d_swapped(Complex rp, Complex sp, int n, double y, const QuadratureSpec& spec) {
    const Complex sum = rp + sp;
    const Complex k = sum / rp;
    Complex lhs = std::exp(-y * y / rp) *
                  gauss_conv_1d_oracle(sp, y, [&](double u) { return hermite(n, u); },
                                       window_1d(1.0 / sp, -2.0 * y / sp, n), spec);
    const Complex sigma = rp * sp / sum;
    const Complex damp = sum / (rp * rp);
    Complex rhs = std::sqrt(k) * gauss_conv_1d_oracle(
                                     sigma, y, [&](double u) { return std::exp(-damp * u * u) * hermite(n, k * u); },
                                     window_1d(1.0 / sigma + damp, -2.0 * y / sigma, n), spec);
    return {lhs, rhs};
}

// ---- 2D operator identities ---------------------------------------------

OpCheck op_identity_2d(const ConvParams2D& p, OpKind2D kind, int m, int n, Complex z, Complex q,
                       const QuadratureSpec& spec) {
    PolyIndex::checked(m, n);
    const Complex r = p.r, s = p.s, z0 = p.z0, z0p = p.z0p;
    const Complex zs = std::conj(z);
    Quadratic2 form;
    form.add_product(z, zs, s);
    form.add_product(z0, z0p, r);
    int degree = 0;
    std::function<Complex(Complex)> f;
    switch (kind) {
    case OpKind2D::Constant: f = [&](Complex) { return 1.0 / (kPi * r); }; break;
    case OpKind2D::Monomial:
        f = [&](Complex w) { return ipow(w, m) * ipow(std::conj(w), n); };
        degree = m + n;
        break;
    case OpKind2D::Laguerre2D:
        f = [&](Complex w) { return laguerre2d(m, n, w, std::conj(w)); };
        degree = m + n;
        break;
    case OpKind2D::Gaussian:
        f = [&](Complex w) { return std::exp(-std::norm(w) / q); };
        form.alpha += 1.0 / q;
        break;
    }
    auto g = [&](Complex w) { return std::exp(-(w - z0) * (std::conj(w) - z0p) / r) * f(w); };
    auto [wx, wy] = form.windows(degree);
    OpCheck out;
    out.oracle = gauss_conv_2d_oracle(s, z, g, wx, wy, spec);

    const Complex rs = r + s;
    const Complex pre = r / rs * std::exp(-(z - z0) * (zs - z0p) / rs);
    const Complex n1 = r * z + s * z0, n2 = r * zs + s * z0p;
    auto rooted = [&](Complex rho) {
        return pre * ipow(rho / rs, m + n) * laguerre2d(m, n, n1 / rho, n2 / rho, EvalRoute::ExplicitSum);
    };
    switch (kind) {
    case OpKind2D::Constant: out.closed = out.closed_flipped = pre / (kPi * r); break;
    case OpKind2D::Monomial: {
        Complex rho = std::sqrt(-r * s * rs);
        out.closed = rooted(rho);
        out.closed_flipped = rooted(-rho);
        break;
    }
    case OpKind2D::Laguerre2D: {
        Complex rho = std::sqrt((rs - r * s) * rs);
        out.closed = rooted(rho);
        out.closed_flipped = rooted(-rho);
        break;
    }
    case OpKind2D::Gaussian: {
        Complex c = r * s / rs;
        out.closed = out.closed_flipped = pre * q / (q + c) * std::exp(-(n1 / rs) * (n2 / rs) / (q + c));
        break;
    }
    }
    return out;
}

std::pair<Complex, Complex> op_identity_2d_swapped(Complex rp, Complex sp, int m, int n, Complex w,
                                                   const QuadratureSpec& spec) {
    PolyIndex::checked(m, n);
    const Complex ws = std::conj(w);
    const Complex sum = rp + sp;
    const Complex k = sum / rp;
    Quadratic2 left;
    left.add_product(w, ws, sp);
    auto [lx, ly] = left.windows(m + n);
    Complex lhs = std::exp(-w * ws / rp) *
                  gauss_conv_2d_oracle(sp, w, [&](Complex u) { return laguerre2d(m, n, u, std::conj(u)); }, lx, ly, spec);
    const Complex sigma = rp * sp / sum;
    const Complex damp = sum / (rp * rp);
    Quadratic2 right;
    right.add_product(w, ws, sigma);
    right.alpha += damp;
    auto [rx, ry] = right.windows(m + n);
    Complex rhs = k * gauss_conv_2d_oracle(
                          sigma, w,
                          [&](Complex u) { return std::exp(-damp * std::norm(u)) * laguerre2d(m, n, k * u, k * std::conj(u)); },
                          rx, ry, spec);
    return {lhs, rhs};
}

Complex sigma_tau_closed(Complex s, Complex sigma2, Complex tau2, Complex z, Complex zp) {
    Complex d = 1.0 - s * s * sigma2 * tau2;
    return std::exp(-(sigma2 * z * z + tau2 * zp * zp - 2.0 * s * sigma2 * tau2 * z * zp) / (2.0 * d)) / std::sqrt(d);
}

SigmaTauCheck op_identity_sigma_tau(Complex s, Complex sigma2, Complex tau2, Complex z, int terms,
                                    const QuadratureSpec& spec) {
    const Complex zs = std::conj(z);
    Quadratic2 form;
    form.add_product(z, zs, s);
    form.beta += sigma2 / 2.0;
    form.gamma += tau2 / 2.0;
    auto [wx, wy] = form.windows(0);
    SigmaTauCheck out;
    out.oracle = gauss_conv_2d_oracle(
        s, z,
        [&](Complex w) {
            Complex ws = std::conj(w);
            return std::exp(-sigma2 * w * w / 2.0 - tau2 * ws * ws / 2.0);
        },
        wx, wy, spec);
    const Complex root = std::sqrt(-s);
    TruncationSpec trunc;
    trunc.max_terms_per_index = terms;
    out.series = gf_even_index_sigma_tau(s * sigma2, s * tau2, z / root, zs / root, trunc).lhs;
    out.closed = sigma_tau_closed(s, sigma2, tau2, z, zs);
    return out;
}

std::pair<Complex, Complex> taylor_heat_check(Complex s, Complex a, Complex z, Complex zp, int terms) {
    const Complex root = std::sqrt(-s);
    TruncationSpec trunc;
    trunc.max_terms_per_index = terms;
    // sum (as)^m/m! L_{m,m}(z/root, z'/root) is the diagonal series at t = -as
    Complex series = gf_laguerre_diagonal(-a * s, z / root, zp / root, trunc).lhs2d;
    Complex d = 1.0 + a * s;
    return {series, std::exp(-a * z * zp / d) / d};
}

// ---- semigroup and limits -------------------------------------------------

SemigroupCheck semigroup_1d(Complex r, Complex s1, Complex s2, double x, const QuadratureSpec& spec) {
    auto g = [&](double y) { return std::exp(-y * y / r) / std::sqrt(kPi * r); };
    const Complex a_in = 1.0 / s2 + 1.0 / r;
    auto inner = [&](double y) { return gauss_conv_1d_oracle(s2, y, g, window_1d(a_in, -2.0 * y / s2, 0), spec); };
    SemigroupCheck out;
    const Complex mid = r + s2;
    out.nested = gauss_conv_1d_oracle(s1, x, inner, window_1d(1.0 / s1 + 1.0 / mid, -2.0 * x / s1, 0), spec);
    const Complex st = s1 + s2;
    out.direct = gauss_conv_1d_oracle(st, x, g, window_1d(1.0 / st + 1.0 / r, -2.0 * x / st, 0), spec);
    const Complex w = r + st;
    out.closed = std::exp(-x * x / w) / std::sqrt(kPi * w);
    return out;
}

SemigroupCheck semigroup_2d(Complex r, Complex s1, Complex s2, Complex z, const QuadratureSpec& spec) {
    const Complex zs = std::conj(z);
    const Complex mid = r + s2;
    // width r+s2 Gaussian obtained from the closed width addition
    auto after_s2 = [&](Complex w) { return std::exp(-std::norm(w) / mid) / (kPi * mid); };
    Quadratic2 f1;
    f1.add_product(z, zs, s1);
    f1.alpha += 1.0 / mid;
    auto [ax, ay] = f1.windows(0);
    SemigroupCheck out;
    out.nested = gauss_conv_2d_oracle(s1, z, after_s2, ax, ay, spec);
    const Complex st = s1 + s2;
    Quadratic2 f2;
    f2.add_product(z, zs, st);
    f2.alpha += 1.0 / r;
    auto [bx, by] = f2.windows(0);
    out.direct = gauss_conv_2d_oracle(st, z, [&](Complex w) { return std::exp(-std::norm(w) / r) / (kPi * r); }, bx, by,
                                      spec);
    const Complex w = r + st;
    out.closed = std::exp(-z * zs / w) / (kPi * w);
    return out;
}

DeltaLimit delta_limit_1d(double r, Complex s, double x0, double x, const QuadratureSpec& spec) {
    if (!(r > 0.0))
        throw DomainError("delta limit needs r > 0");
    auto g = [&](double y) { return std::exp(-(y - x0) * (y - x0) / r) / std::sqrt(kPi * r); };
    DeltaLimit out;
    out.oracle = gauss_conv_1d_oracle(s, x, g, window_1d(1.0 / s + 1.0 / r, -2.0 * x / s - 2.0 * x0 / r, 0), spec);
    const Complex w = r + s;
    out.closed = std::exp(-(x - x0) * (x - x0) / w) / std::sqrt(kPi * w);
    out.limit = std::exp(-(x - x0) * (x - x0) / s) / std::sqrt(kPi * s);
    return out;
}

DeltaLimit delta_limit_2d(double r, Complex s, Complex z0, Complex z, const QuadratureSpec& spec) {
    if (!(r > 0.0))
        throw DomainError("delta limit needs r > 0");
    const Complex zs = std::conj(z), z0s = std::conj(z0);
    Quadratic2 form;
    form.add_product(z, zs, s);
    form.add_product(z0, z0s, r);
    auto [wx, wy] = form.windows(0);
    DeltaLimit out;
    out.oracle = gauss_conv_2d_oracle(s, z, [&](Complex w) { return std::exp(-std::norm(w - z0) / r) / (kPi * r); },
                                      wx, wy, spec);
    const Complex d = (z - z0) * (zs - z0s);
    out.closed = std::exp(-d / (r + s)) / (kPi * (r + s));
    out.limit = std::exp(-d / s) / (kPi * s);
    return out;
}

std::pair<Complex, Complex> heat_gaussian_2d(Complex s, Complex a, Complex z, const QuadratureSpec& spec) {
    const Complex zs = std::conj(z);
    Quadratic2 form;
    form.add_product(z, zs, s);
    form.alpha += a;
    auto [wx, wy] = form.windows(0);
    Complex oracle = gauss_conv_2d_oracle(s, z, [&](Complex w) { return std::exp(-a * std::norm(w)); }, wx, wy, spec);
    Complex d = 1.0 + a * s;
    return {oracle, std::exp(-a * z * zs / d) / d};
}

// ---- scaling operator ---------------------------------------------------

ScalingCheck scaling_operator_check(Complex gamma, ScalingKind kind, int n, Complex z, Complex zp) {
    const Complex e = std::exp(gamma);
    ScalingCheck out;
    auto to_complex = [](const BigRational& c) { return Complex(c.get_d()); };
    switch (kind) {
    case ScalingKind::Monomial:
        out.series = std::exp(gamma * static_cast<double>(n)) * ipow(z, n);
        out.direct = ipow(e * z, n);
        break;
    case ScalingKind::Hermite: {
        out.series = 0.0;
        const ExactPoly2 poly = exact_hermite(n);
        for (const auto& [ex, c] : poly.terms())
            out.series += to_complex(c) * std::exp(gamma * static_cast<double>(ex.first)) * ipow(z, ex.first);
        out.direct = hermite(n, e * z);
        break;
    }
    case ScalingKind::Gaussian: {
        // exp(-x^2) = sum (-1)^k x^{2k}/k!
        out.series = 0.0;
        Complex c = 1.0;
        for (int k = 0; k < 200; ++k) {
            out.series += c * std::exp(gamma * (2.0 * k)) * ipow(z, 2 * k);
            c *= -1.0 / (k + 1.0);
        }
        out.direct = std::exp(-(e * z) * (e * z));
        break;
    }
    case ScalingKind::Laguerre2D: {
        // index (n, n/2) keeps the two degrees different
        const int m = n, l = n / 2;
        out.series = 0.0;
        const ExactPoly2 poly = exact_laguerre2d(m, l);
        for (const auto& [ex, c] : poly.terms())
            out.series += to_complex(c) * std::exp(gamma * static_cast<double>(ex.first + ex.second + 1)) *
                          ipow(z, ex.first) * ipow(zp, ex.second);
        out.direct = e * laguerre2d(m, l, e * z, e * zp);
        break;
    }
    case ScalingKind::Gaussian2D: {
        out.series = 0.0;
        Complex c = 1.0;
        for (int k = 0; k < 200; ++k) {
            out.series += c * std::exp(gamma * (2.0 * k + 1.0)) * ipow(z * zp, k);
            c *= -1.0 / (k + 1.0);
        }
        out.direct = e * std::exp(-(e * z) * (e * zp));
        break;
    }
    }
    return out;
}

// ---- orthonormality -------------------------------------------------------

std::vector<Complex> laguerre2d_function_gram(int max_index, const QuadratureSpec& spec) {
    if (max_index < 0 || max_index > 10)
        throw IndexError("Gram matrix index outside [0,10]");
    const int side = max_index + 1;
    const int K = side * side;
    Window w = gaussian_window(0.0, 1.0, 2 * max_index);
    std::vector<Complex> vals(static_cast<std::size_t>(K));
    const double norm = 1.0 / std::sqrt(kPi);
    return integrate_2d_multi(
        K * K,
        [&](double x, double y, Complex* out) {
            Complex zc{x, y};
            Laguerre2DTable tab(max_index, max_index, zc, std::conj(zc));
            double env = norm * std::exp(-std::norm(zc) / 2.0);
            for (int m = 0; m < side; ++m)
                for (int n = 0; n < side; ++n)
                    vals[static_cast<std::size_t>(m) * side + n] = env * tab(m, n);
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j)
                    out[static_cast<std::size_t>(i) * K + j] = std::conj(vals[i]) * vals[j];
        },
        w, w, spec);
}

std::vector<Complex> hermite_function_gram(int max_index, const QuadratureSpec& spec) {
    if (max_index < 0 || max_index > 60)
        throw IndexError("Gram matrix index outside [0,60]");
    const int K = max_index + 1;
    Window w = gaussian_window(0.0, 1.0, 2 * max_index);
    std::vector<Complex> gram(static_cast<std::size_t>(K) * K);
    const double norm = std::pow(kPi, -0.25);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            gram[static_cast<std::size_t>(i) * K + j] = integrate_1d(
                [&](double x) {
                    auto h = hermite_normalized_table(max_index, x);
                    double env = norm * norm * std::exp(-x * x);
                    return env * std::conj(h[i]) * h[j];
                },
                w, spec);
    return gram;
}

} // namespace lagherm
