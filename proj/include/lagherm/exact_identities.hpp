#pragma once

#include "lagherm/exact.hpp"

#include <utility>

namespace lagherm {

// L_{m,n}(z,z') as an exact polynomial in (z, z').
ExactPoly2 exact_laguerre2d(int m, int n);
// H_n as an exact polynomial in the first variable.
ExactPoly2 exact_hermite(int n);

// z^m z'^n == sum_j m!n!/(j!(m-j)!(n-j)!) L_{m-j,n-j}(z,z').  m, n <= 30.
bool check_monomial_inversion_2d(int m, int n);
// (2x)^n == sum_l n!/(l!(n-2l)!) H_{n-2l}(x).  n <= 40.
bool check_hermite_inversion(int n);
// d^l/dz^l z^k f == sum_j k!l!/(j!(k-j)!(l-j)!) z^{k-j} d^{l-j}/dz^{l-j} f
// for f = z^a, a <= k+l+4.  k, l <= 12.
bool check_reordering(int k, int l);
// (z - d/dz')^m (z' - d/dz)^n f against its normally ordered expansion in
// L_{m-k,n-l} times derivatives, for f = z^a z'^b with a, b <= 4 and f = 1.
// m, n <= 8.
bool check_laguerre_operator_identity(int m, int n);

// First written form of the finite sum and the closed value 2^{m+n}/(m!n!).
// m, n <= 20.
std::pair<BigRational, BigRational> sum_identity(int m, int n);
// The re-indexed middle form of the same sum.
BigRational sum_identity_second_form(int m, int n);

// Equal-upper-index values P_{2k}^{(n-2k,n-2k)}(0) = (-1)^k n!/(4^k k!(n-k)!)
// and P_{2k+1}^{(n-2k-1,n-2k-1)}(0) = 0.  n <= 30.
bool check_specialized_jacobi0(int n);
// (z+z*)^m (-i(z-z*))^n == i^n sum_j 2^j P_j^{(m-j,n-j)}(0) z^j z*^{m+n-j},
// compared as Gaussian-rational polynomials.  m, n <= 30.
bool check_jacobi0_inversion(int m, int n);

} // namespace lagherm
