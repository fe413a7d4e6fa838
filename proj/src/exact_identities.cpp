#include "lagherm/exact_identities.hpp"

#include "lagherm/poly.hpp"
#include "lagherm/types.hpp"

#include <string>

namespace lagherm {

namespace {

void require_range(const char* what, int v, int hi) {
    if (v < 0 || v > hi)
        throw IndexError(std::string(what) + " argument " + std::to_string(v) + " outside [0," +
                         std::to_string(hi) + "]");
}

BigRational pow2(int e) {
    BigInt p = 1;
    p <<= static_cast<mp_bitcnt_t>(e);
    return BigRational(p);
}

// a!b!/(j!(a-j)!(b-j)!)
BigRational tri_coefficient(int a, int b, int j) {
    return make_rational(factorial(a) * factorial(b), factorial(j) * factorial(a - j) * factorial(b - j));
}

ExactPoly2 apply_z_minus_dzp(const ExactPoly2& f) {
    return f.times_monomial(1, 0) - f.derivative(Var::Second);
}

ExactPoly2 apply_zp_minus_dz(const ExactPoly2& f) {
    return f.times_monomial(0, 1) - f.derivative(Var::First);
}

// Polynomial with Gaussian-rational coefficients, kept as real and imaginary parts.
struct GaussPoly {
    ExactPoly2 re;
    ExactPoly2 im;
};

GaussPoly gmul(const GaussPoly& a, const GaussPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

} // namespace

ExactPoly2 exact_laguerre2d(int m, int n) {
    PolyIndex::checked(m, n);
    ExactPoly2 p;
    for (int j = 0; j <= std::min(m, n); ++j) {
        BigRational c = tri_coefficient(m, n, j);
        p.add_term(m - j, n - j, j % 2 ? BigRational(-c) : c);
    }
    return p;
}

ExactPoly2 exact_hermite(int n) {
    require_range("exact_hermite", n, kMaxPolyIndex);
    ExactPoly2 p;
    for (int l = 0; 2 * l <= n; ++l) {
        BigRational c = make_rational(factorial(n), factorial(l) * factorial(n - 2 * l)) * pow2(n - 2 * l);
        p.add_term(n - 2 * l, 0, l % 2 ? BigRational(-c) : c);
    }
    return p;
}

bool check_monomial_inversion_2d(int m, int n) {
    require_range("check_monomial_inversion_2d", m, 30);
    require_range("check_monomial_inversion_2d", n, 30);
    ExactPoly2 sum;
    for (int j = 0; j <= std::min(m, n); ++j)
        sum += tri_coefficient(m, n, j) * exact_laguerre2d(m - j, n - j);
    return sum == ExactPoly2::monomial(m, n);
}

bool check_hermite_inversion(int n) {
    require_range("check_hermite_inversion", n, 40);
    ExactPoly2 sum;
    for (int l = 0; 2 * l <= n; ++l)
        sum += make_rational(factorial(n), factorial(l) * factorial(n - 2 * l)) * exact_hermite(n - 2 * l);
    return sum == ExactPoly2::monomial(n, 0, pow2(n));
}

bool check_reordering(int k, int l) {
    require_range("check_reordering", k, 12);
    require_range("check_reordering", l, 12);
    for (int a = 0; a <= k + l + 4; ++a) {
        ExactPoly2 f = ExactPoly2::monomial(a, 0);
        ExactPoly2 lhs = f.times_monomial(k, 0).derivative(Var::First, l);
        ExactPoly2 rhs;
        for (int j = 0; j <= std::min(k, l); ++j)
            rhs += tri_coefficient(k, l, j) * f.derivative(Var::First, l - j).times_monomial(k - j, 0);
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

bool check_laguerre_operator_identity(int m, int n) {
    require_range("check_laguerre_operator_identity", m, 8);
    require_range("check_laguerre_operator_identity", n, 8);
    std::vector<ExactPoly2> tests;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            tests.push_back(ExactPoly2::monomial(a, b));
    for (const auto& f : tests) {
        ExactPoly2 lhs = f;
        for (int i = 0; i < n; ++i)
            lhs = apply_zp_minus_dz(lhs);
        for (int i = 0; i < m; ++i)
            lhs = apply_z_minus_dzp(lhs);
        ExactPoly2 rhs;
        for (int k = 0; k <= m; ++k)
            for (int l = 0; l <= n; ++l) {
                BigRational c = make_rational(factorial(m) * factorial(n),
                                              factorial(k) * factorial(m - k) * factorial(l) * factorial(n - l));
                if ((k + l) % 2)
                    c = -c;
                rhs += c * exact_laguerre2d(m - k, n - l) * f.derivative(Var::Second, k).derivative(Var::First, l);
            }
        if (!(lhs == rhs))
            return false;
        if (f == ExactPoly2::constant(1) && !(lhs == exact_laguerre2d(m, n)))
            return false;
    }
    return true;
}

std::pair<BigRational, BigRational> sum_identity(int m, int n) {
    require_range("sum_identity", m, 20);
    require_range("sum_identity", n, 20);
    BigRational lhs = 0;
    for (int k = 0; k <= m + n; ++k) {
        // P_{2n}^{(2(k-n), 2(m-k))}(0): upper indices are (M-j, N-j) with j = 2n.
        BigRational p = jacobi0(2 * n, 2 * k, 2 * (m + n - k));
        lhs += pow2(2 * n) * p / BigRational(factorial(k) * factorial(m + n - k));
    }
    BigRational rhs = pow2(m + n) / BigRational(factorial(m) * factorial(n));
    return {lhs, rhs};
}

BigRational sum_identity_second_form(int m, int n) {
    require_range("sum_identity", m, 20);
    require_range("sum_identity", n, 20);
    auto row = jacobi0_row(2 * m, 2 * n); // P_{2k}^{(2(m-k),2(n-k))}(0) = row[2k]
    BigRational s = 0;
    for (int k = 0; k <= m + n; ++k)
        s += make_rational(factorial(2 * k) * factorial(2 * (m + n - k)), factorial(k) * factorial(m + n - k)) *
             pow2(2 * k) * row[2 * k];
    return s / BigRational(factorial(2 * m) * factorial(2 * n));
}

bool check_specialized_jacobi0(int n) {
    require_range("check_specialized_jacobi0", n, 30);
    auto row = jacobi0_row(n, n);
    for (int k = 0; k <= n; ++k) {
        BigRational closed = make_rational(factorial(n), factorial(k) * factorial(n - k)) / pow2(2 * k);
        if (k % 2)
            closed = -closed;
        if (row[2 * k] != closed)
            return false;
    }
    for (int k = 0; 2 * k + 1 <= 2 * n; ++k)
        if (row[2 * k + 1] != 0)
            return false;
    return true;
}

bool check_jacobi0_inversion(int m, int n) {
    require_range("check_jacobi0_inversion", m, 30);
    require_range("check_jacobi0_inversion", n, 30);
    // variables: first = z, second = z*
    GaussPoly sum_zz{ExactPoly2::monomial(1, 0) + ExactPoly2::monomial(0, 1), {}};
    // -i (z - z*)
    GaussPoly diff{{}, ExactPoly2::monomial(0, 1) - ExactPoly2::monomial(1, 0)};
    GaussPoly lhs{ExactPoly2::constant(1), {}};
    for (int i = 0; i < m; ++i)
        lhs = gmul(lhs, sum_zz);
    for (int i = 0; i < n; ++i)
        lhs = gmul(lhs, diff);

    const int N = m + n;
    auto row = jacobi0_row(m, n);
    ExactPoly2 real_sum;
    for (int j = 0; j <= N; ++j)
        real_sum.add_term(j, N - j, pow2(j) * row[j]);
    // multiply by i^n
    GaussPoly rhs;
    switch (n % 4) {
    case 0: rhs = {real_sum, {}}; break;
    case 1: rhs = {{}, real_sum}; break;
    case 2: rhs = {ExactPoly2() - real_sum, {}}; break;
    default: rhs = {{}, ExactPoly2() - real_sum}; break;
    }
    return lhs.re == rhs.re && lhs.im == rhs.im;
}

} // namespace lagherm
