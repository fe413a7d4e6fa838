#include "lagherm/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace lagherm {

namespace {

void check_spec(const QuadratureSpec& spec, Window w) {
    if (!(spec.rel_tol > 0.0) || spec.min_panels < 2 || spec.max_panels < spec.min_panels)
        throw DomainError("invalid quadrature settings");
    if (!(w.hi > w.lo) || !std::isfinite(w.lo) || !std::isfinite(w.hi))
        throw DomainError("invalid integration window");
}

double node(Window w, int i, int n) { return w.lo + (w.hi - w.lo) * static_cast<double>(i) / n; }

} // namespace

Window gaussian_window(double center, double decay, int degree) {
    if (!(decay > 0.0) || !std::isfinite(decay))
        throw DomainError("integrand does not decay");
    double half = (9.0 + 1.5 * std::sqrt(degree + 1.0)) / std::sqrt(decay);
    return {center - half, center + half};
}

Complex integrate_1d(const std::function<Complex(double)>& f, Window w, const QuadratureSpec& spec) {
    check_spec(spec, w);
    int n = spec.min_panels;
    Complex sum = 0.0;
    double abs_sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        double wt = (i == 0 || i == n) ? 0.5 : 1.0;
        Complex v = f(node(w, i, n));
        sum += wt * v;
        abs_sum += wt * std::abs(v);
    }
    double h = (w.hi - w.lo) / n;
    Complex prev = sum * h;
    double diff = INFINITY;
    while (n < spec.max_panels) {
        n *= 2;
        h /= 2.0;
        Complex added = 0.0;
        double added_abs = 0.0;
        for (int i = 1; i < n; i += 2) {
            Complex v = f(node(w, i, n));
            added += v;
            added_abs += std::abs(v);
        }
        sum += added;
        abs_sum += added_abs;
        Complex cur = sum * h;
        if (!is_finite(cur))
            throw QuadratureError("integrand produced non-finite values", INFINITY);
        diff = std::abs(cur - prev);
        if (diff <= spec.rel_tol * abs_sum * h)
            return cur;
        prev = cur;
    }
    throw QuadratureError("1D quadrature did not converge", diff);
}

std::vector<Complex> integrate_2d_multi(int count, const std::function<void(double, double, Complex*)>& f,
                                        Window wx, Window wy, const QuadratureSpec& spec) {
    check_spec(spec, wx);
    check_spec(spec, wy);
    if (count < 1)
        throw DomainError("integrand count must be positive");
    const std::size_t c = static_cast<std::size_t>(count);
    std::vector<Complex> sum(c, 0.0), buf(c), prev(c), cur(c);
    std::vector<double> abs_sum(c, 0.0);

    auto visit = [&](int i, int j, int n) {
        double wt = ((i == 0 || i == n) ? 0.5 : 1.0) * ((j == 0 || j == n) ? 0.5 : 1.0);
        f(node(wx, i, n), node(wy, j, n), buf.data());
        for (std::size_t k = 0; k < c; ++k) {
            sum[k] += wt * buf[k];
            abs_sum[k] += wt * std::abs(buf[k]);
        }
    };

    int n = spec.min_panels;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            visit(i, j, n);
    double area = (wx.hi - wx.lo) * (wy.hi - wy.lo) / (static_cast<double>(n) * n);
    for (std::size_t k = 0; k < c; ++k)
        prev[k] = sum[k] * area;
    double diff = INFINITY;
    while (n < spec.max_panels) {
        n *= 2;
        area /= 4.0;
        for (int i = 0; i <= n; ++i)
            for (int j = (i % 2 ? 0 : 1); j <= n; j += (i % 2 ? 1 : 2))
                visit(i, j, n);
        double scale = 0.0;
        for (std::size_t k = 0; k < c; ++k) {
            cur[k] = sum[k] * area;
            scale = std::max(scale, abs_sum[k] * area);
        }
        diff = 0.0;
        for (std::size_t k = 0; k < c; ++k) {
            if (!is_finite(cur[k]))
                throw QuadratureError("integrand produced non-finite values", INFINITY);
            diff = std::max(diff, std::abs(cur[k] - prev[k]));
        }
        if (diff <= spec.rel_tol * scale)
            return cur;
        prev = cur;
    }
    throw QuadratureError("2D quadrature did not converge", diff);
}

Complex integrate_2d(const std::function<Complex(double, double)>& f, Window wx, Window wy,
                     const QuadratureSpec& spec) {
    return integrate_2d_multi(
        1, [&](double x, double y, Complex* out) { out[0] = f(x, y); }, wx, wy, spec)[0];
}

} // namespace lagherm
