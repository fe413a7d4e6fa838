#pragma once

#include "lagherm/exact.hpp"
#include "lagherm/types.hpp"

#include <utility>
#include <vector>

namespace lagherm {

// Hermite polynomials H_n(x), physicists' normalization (leading term (2x)^n).
Complex hermite(int n, Complex x, EvalRoute route = EvalRoute::Recurrence);

// Laguerre 2D polynomials L_{m,n}(z,z') = sum_j (-1)^j m!n!/(j!(m-j)!(n-j)!) z^{m-j} z'^{n-j}.
Complex laguerre2d(PolyIndex idx, ComplexPoint2D p, EvalRoute route = EvalRoute::Recurrence);
Complex laguerre2d(int m, int n, Complex z, Complex zp, EvalRoute route = EvalRoute::Recurrence);

// Generalized Laguerre L_n^nu(u) for integer nu with n + nu >= 0.
Complex gen_laguerre(int n, int nu, Complex u);
// Real order, by the same three-term recurrence. Used with alpha = -1/2, 1/2.
Complex gen_laguerre_real(int n, double alpha, Complex u);

// H_m(x) H_n(y).
Complex hermite2d(PolyIndex idx, Complex x, Complex y);

// l_{m,n}(z,z*) = pi^{-1/2} exp(-|z|^2/2) L_{m,n}(z,z*) / sqrt(m! n!).
Complex laguerre2d_function(PolyIndex idx, Complex z);

// P_j^{(m-j,n-j)}(0), read off from (x+iy)^m (x-iy)^n
//   = (-1)^n sum_j i^{m+n-j} 2^j P_j x^j y^{m+n-j}.
BigRational jacobi0(int j, int m, int n);
// All j = 0..m+n at once.
std::vector<BigRational> jacobi0_row(int m, int n);

struct DerivativeCheck {
    Complex finite_difference;
    Complex analytic;
};

// Central difference of L_{m,n} in z against m L_{m-1,n}.
DerivativeCheck derivative_check(PolyIndex idx, ComplexPoint2D p, double h = 1e-4);

// L_{m,n}(x+iy, x-iy) through the Hermite products H_j(x) H_{m+n-j}(y).
Complex laguerre2d_from_hermite(PolyIndex idx, Complex x, Complex y);
// H_m(x) H_n(y) through L_{j,m+n-j}(x+iy, x-iy).
Complex hermite_product_from_laguerre2d(PolyIndex idx, Complex x, Complex y);

// Sum of term moduli of the explicit sums. Cancellation in the explicit sum
// is measured against this, so route comparisons use it as their scale.
double hermite_magnitude(int n, Complex x);
double laguerre2d_magnitude(PolyIndex idx, ComplexPoint2D p);

// Normalized values h_n = H_n / sqrt(2^n n!) for n = 0..N. Stays in double
// range where H_n itself over- or underflows.
std::vector<Complex> hermite_normalized_table(int N, Complex x);

// Normalized values L_{m,n}(z,z') / sqrt(m! n!) for 0 <= m <= M, 0 <= n <= N.
class Laguerre2DTable {
public:
    Laguerre2DTable(int M, int N, Complex z, Complex zp);
    Complex operator()(int m, int n) const { return data_[static_cast<std::size_t>(m) * (N_ + 1) + n]; }
    int rows() const { return M_; }
    int cols() const { return N_; }

private:
    int M_;
    int N_;
    std::vector<Complex> data_;
};

} // namespace lagherm
