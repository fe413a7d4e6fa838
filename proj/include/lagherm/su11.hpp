#pragma once

#include "lagherm/quadrature.hpp"
#include "lagherm/types.hpp"

#include <array>
#include <functional>
#include <vector>

namespace lagherm {

// Coefficients of exp(xi K- + i eta 2K0 - zeta K+).
struct DisentangleInput {
    Complex xi, eta, zeta;
};

// exp(xi K- + i eta 2K0 - zeta K+) = exp(-mu/kappa K+) exp(lambda kappa K-) exp(-log(kappa) 2K0)
struct UnimodularMatrix {
    Complex kappa, lambda, mu, nu;
    Complex det() const { return kappa * nu - lambda * mu; }
};

// eps = sqrt(xi zeta - eta^2), principal branch; ch(eps) and sh(eps)/eps
// switch to their Taylor series below |eps| = 1e-4.
UnimodularMatrix disentangle(const DisentangleInput& in);
// Same with a caller-chosen root eps (either sign of the square root).
UnimodularMatrix disentangle_with_root(const DisentangleInput& in, Complex eps);

using Mat2 = std::array<Complex, 4>; // row major

// Generic matrix exponential by scaling and squaring of the Taylor series.
Mat2 expm2(const Mat2& a);
Mat2 matmul2(const Mat2& a, const Mat2& b);

// Image of the generator in the two-dimensional representation on (d/dx, x):
// [[-i eta, xi], [zeta, i eta]].
Mat2 generator_matrix(const DisentangleInput& in);

// max |entry| of expm2(generator) minus the product of the three factor
// exponentials built from disentangle(); the factor coefficients are mapped
// to generators and exponentiated independently.
double disentangle_product_residual(const DisentangleInput& in);

// ---- Gaussian convolution ---------------------------------------------

struct ConvParams1D {
    Complex r, s, x0;
};

struct ConvParams2D {
    Complex r, s, z0, z0p;
};

// (pi s)^{-1/2} int exp(-(x-y)^2/s) g(y) dy over the window.  Re(1/s) > 0.
Complex gauss_conv_1d_oracle(Complex s, double x, const std::function<Complex(double)>& g, Window w,
                             const QuadratureSpec& spec = {});
// (pi s)^{-1} int exp(-|z-z0|^2/s) g(z0) d^2z0 with g given on the real plane.
Complex gauss_conv_2d_oracle(Complex s, Complex z, const std::function<Complex(Complex)>& g, Window wx, Window wy,
                             const QuadratureSpec& spec = {});

enum class OpKind1D { Constant, Monomial, Hermite, Gaussian };

struct OpCheck {
    Complex oracle;
    Complex closed;
    Complex closed_flipped; // closed form with the other sign of the square root
};

// conv_s[exp(-(y-x0)^2/r) f(y)](x) against
// sqrt(r/(r+s)) exp(-(x-x0)^2/(r+s)) exp(s(r+s)/(4r) d^2) f((rx+s x0)/(r+s)).
// Constant: f = (pi r)^{-1/2}; Monomial: (2x)^n; Hermite: H_n; Gaussian: exp(-x^2/q).
// Needs Re(1/s) > 0 and Re(1/s + 1/r) > 0.
OpCheck op_identity_1d(const ConvParams1D& p, OpKind1D kind, int n, double x, Complex q = 1.0,
                       const QuadratureSpec& spec = {});

// exp(-y^2/r') exp(s'/4 d^2) f against
// sqrt((r'+s')/r') exp(r's'/(4(r'+s')) d^2) [exp(-(r'+s') y^2/r'^2) f((r'+s')y/r')], f = H_n,
// both sides by quadrature.
std::pair<Complex, Complex> op_identity_1d_swapped(Complex rp, Complex sp, int n, double y,
                                                   const QuadratureSpec& spec = {});

enum class OpKind2D { Constant, Monomial, Laguerre2D, Gaussian };

// 2D analogue on z' = z*: conv_s[exp(-(z-z0)(z*-z0')/r) f](z) against
// r/(r+s) exp(-(z-z0)(z*-z0')/(r+s)) exp(s(r+s)/r d d') f((rz+sz0)/(r+s), (rz*+sz0')/(r+s)).
// Constant: 1/(pi r); Monomial: z^m z'^n; Laguerre2D: L_{m,n}; Gaussian: exp(-zz'/q).
OpCheck op_identity_2d(const ConvParams2D& p, OpKind2D kind, int m, int n, Complex z, Complex q = 1.0,
                       const QuadratureSpec& spec = {});

std::pair<Complex, Complex> op_identity_2d_swapped(Complex rp, Complex sp, int m, int n, Complex w,
                                                   const QuadratureSpec& spec = {});

struct SigmaTauCheck {
    Complex oracle; // conv_s of exp(-sigma^2 z^2/2 - tau^2 z'^2/2) at z' = z*
    Complex series; // sum (s/2)^{k+l} sigma^{2k} tau^{2l}/(k!l!) L_{2k,2l}(z/sqrt(-s), z'/sqrt(-s))
    Complex closed;
};
// sigma2 = sigma^2 and tau2 = tau^2 are passed directly.
SigmaTauCheck op_identity_sigma_tau(Complex s, Complex sigma2, Complex tau2, Complex z, int terms = 60,
                                    const QuadratureSpec& spec = {});
Complex sigma_tau_closed(Complex s, Complex sigma2, Complex tau2, Complex z, Complex zp);

// exp(s d^2/(dz dz')) f as sum_{m,n} f^{(m,n)}(0,0)/(m!n!) (sqrt(-s))^{m+n} L_{m,n}(z/sqrt(-s), z'/sqrt(-s))
// for f = exp(-a z z'), against the closed heat-flow value (1+as)^{-1} exp(-a zz'/(1+as)).
std::pair<Complex, Complex> taylor_heat_check(Complex s, Complex a, Complex z, Complex zp, int terms = 60);

struct SemigroupCheck {
    Complex nested; // conv_{s1} applied to a quadrature of conv_{s2}
    Complex direct; // conv_{s1+s2} by one quadrature
    Complex closed; // normalized Gaussian of width r + s1 + s2
};
SemigroupCheck semigroup_1d(Complex r, Complex s1, Complex s2, double x, const QuadratureSpec& spec = {});
SemigroupCheck semigroup_2d(Complex r, Complex s1, Complex s2, Complex z, const QuadratureSpec& spec = {});

struct DeltaLimit {
    Complex oracle;  // conv_s of the normalized Gaussian of width r centred at x0
    Complex closed;  // normalized Gaussian of width r+s
    Complex limit;   // normalized Gaussian of width s
};
DeltaLimit delta_limit_1d(double r, Complex s, double x0, double x, const QuadratureSpec& spec = {});
DeltaLimit delta_limit_2d(double r, Complex s, Complex z0, Complex z, const QuadratureSpec& spec = {});

// Heat flow of exp(-a zz*): oracle against (1+as)^{-1} exp(-a zz*/(1+as)).
std::pair<Complex, Complex> heat_gaussian_2d(Complex s, Complex a, Complex z, const QuadratureSpec& spec = {});

enum class ScalingKind { Monomial, Hermite, Gaussian, Laguerre2D, Gaussian2D };

struct ScalingCheck {
    Complex series; // term-by-term scaled Taylor expansion
    Complex direct; // f(e^gamma x), or e^gamma f(e^gamma z, e^gamma z') in 2D
};
// 1D kinds use x = z; 2D kinds use (z, zp).
ScalingCheck scaling_operator_check(Complex gamma, ScalingKind kind, int n, Complex z, Complex zp = 0.0);

// Gram matrix of l_{m,n}(z,z*) for 0 <= m, n <= max_index by 2D quadrature,
// row major over the (max_index+1)^2 functions, index m*(max_index+1)+n.
std::vector<Complex> laguerre2d_function_gram(int max_index, const QuadratureSpec& spec = {});
// Gram matrix of the Hermite functions h_n(x) exp(-x^2/2) pi^{-1/4}, n <= max_index.
std::vector<Complex> hermite_function_gram(int max_index, const QuadratureSpec& spec = {});

} // namespace lagherm
