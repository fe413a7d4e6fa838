#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

namespace {

long double fact(int n) {
    long double f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

long double binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long double b = 1;
    for (int j = 1; j <= k; ++j)
        b = b * (n - k + j) / j;
    return b;
}

CL ipow(CL x, int e) {
    CL r = 1;
    for (int i = 0; i < e; ++i)
        r *= x;
    return r;
}

} // namespace

std::uint64_t Gen::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Gen::uniform(double lo, double hi) { return lo + (hi - lo) * (next() >> 11) * 0x1.0p-53; }

int Gen::integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

C Gen::disk(double rmax, double rmin) {
    double r = uniform(rmin, rmax);
    return std::polar(r, uniform(0.0, 2.0 * M_PI));
}

CL hermite_sum(int n, CL x) {
    CL s = 0;
    for (int k = 0; 2 * k <= n; ++k)
        s += (k % 2 ? -1.0L : 1.0L) * ipow(2.0L * x, n - 2 * k) / (fact(k) * fact(n - 2 * k));
    return s * fact(n);
}

CL laguerre2d_sum(int m, int n, CL z, CL zp) {
    CL s = 0;
    for (int k = 0; k <= std::min(m, n); ++k)
        s += (k % 2 ? -1.0L : 1.0L) * fact(k) * binom(m, k) * binom(n, k) * ipow(z, m - k) * ipow(zp, n - k);
    return s;
}

CL gen_laguerre_sum(int n, int nu, CL u) {
    CL s = 0;
    for (int k = 0; k <= n; ++k)
        s += binom(n + nu, n - k) * ipow(-u, k) / fact(k);
    return s;
}

C simpson(const std::function<C(double)>& f, double a, double b, int panels) {
    const int N = 2 * panels;
    const double h = (b - a) / N;
    C s = f(a) + f(b);
    for (int i = 1; i < N; ++i)
        s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

C simpson_2d(const std::function<C(double, double)>& f, double a, double b, double c, double d, int panels) {
    return simpson([&](double x) { return simpson([&](double y) { return f(x, y); }, c, d, panels); }, a, b, panels);
}

M2 expm_taylor(const M2& a, int terms) {
    M2 sum{1, 0, 0, 1}, term{1, 0, 0, 1};
    for (int k = 1; k <= terms; ++k) {
        M2 next{term[0] * a[0] + term[1] * a[2], term[0] * a[1] + term[1] * a[3], term[2] * a[0] + term[3] * a[2],
                term[2] * a[1] + term[3] * a[3]};
        for (auto& e : next)
            e /= static_cast<long double>(k);
        term = next;
        for (int i = 0; i < 4; ++i)
            sum[i] += term[i];
    }
    return sum;
}

double rel(C got, C want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

} // namespace oracle
