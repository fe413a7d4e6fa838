#pragma once

#include "lagherm/series.hpp"
#include "lagherm/types.hpp"

#include <optional>

namespace lagherm {

// Parameter bundle of a generating-function case. Which fields are read
// depends on the identity; unused ones stay zero.
struct GFParams {
    Complex s, t;
    Complex z, zp;
    Complex w, wp;
    Complex x, y, u, v;
    Complex sigma, tau;
};

struct GFPair {
    Complex lhs;
    Complex rhs;
};

struct GFTriple {
    Complex lhs;
    Complex rhs_direct;
    Complex rhs_factorized;
};

// ---- closed forms -------------------------------------------------------

Complex hermite_gf_rhs(Complex t, Complex x);                      // exp(2tx - t^2)
Complex mehler_rhs(Complex t, Complex x, Complex y);
Complex mehler_rhs_factorized(Complex t, Complex x, Complex y);
Complex even_hermite_rhs(Complex t, Complex x);                    // (1-t^2)^{-1/2} exp(-(tx)^2/(1-t^2))
Complex odd_hermite_rhs(Complex t, Complex x);
Complex simple_laguerre2d_rhs(Complex s, Complex t, Complex z, Complex zp);
Complex bilinear_rhs(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp);
// Two-factor form built from the given square roots of s and t.
Complex bilinear_rhs_factorized(Complex root_s, Complex root_t, Complex z, Complex zp, Complex w, Complex wp);
Complex laguerre_gf_rhs(Complex t, Complex u);                     // (1-t)^{-1} exp(-tu/(1-t))
Complex hermite2d_product_rhs(Complex s, Complex t, Complex x, Complex y, Complex u, Complex v);
Complex mixed_rhs(Complex s, Complex t, Complex z, Complex zp, Complex u, Complex v);
Complex even_index_rhs(Complex s, Complex t, Complex z, Complex zp);
Complex even_index_rhs_factorized(Complex s, Complex t, Complex z, Complex zp);
Complex sigma_tau_rhs(Complex sigma, Complex tau, Complex z, Complex zp);

// ---- Hermite ------------------------------------------------------------

GFPair gf_hermite(Complex t, Complex x, const TruncationSpec& trunc = {});
// |t| < 1.
GFTriple gf_mehler(Complex t, Complex x, Complex y, const TruncationSpec& trunc = {});

struct EvenOddHermite {
    std::optional<GFPair> even; // present for |t| < 1
    std::optional<GFPair> odd;
    GFPair cosh_form;
    GFPair sinh_form;
};
EvenOddHermite gf_even_odd_hermite(Complex t, Complex x, const TruncationSpec& trunc = {});

// H_n(x) H_n(y) against the shifted-argument Hermite sum (rhs_direct) and
// the L^{-1/2} form (rhs_factorized).  n <= 30.
GFTriple gf_factherm(int n, Complex x, Complex y);

// ---- simple Laguerre 2D -------------------------------------------------

GFPair gf_simple_laguerre2d(Complex s, Complex t, Complex z, Complex zp, const TruncationSpec& trunc = {});
// sum_n t^n/n! L_{m,n}(z,z') = (z-t)^m exp(tz')
GFPair gf_single_index_laguerre2d(int m, Complex t, Complex z, Complex zp, const TruncationSpec& trunc = {});

struct SingleIndexGenLaguerre {
    Complex first;  // sum_n (-t/z)^n L_n^{m-n}(zz')
    Complex middle; // (-1)^m m!/(zz')^m sum_n (tz')^n/n! L_m^{n-m}(zz')
    Complex rhs;    // (1-t/z)^m exp(tz')
};
SingleIndexGenLaguerre gf_single_index_genlaguerre(int m, Complex t, Complex z, Complex zp,
                                                   const TruncationSpec& trunc = {});
// sum_n t^n L_n^{m-n}(u) = exp(-ut) (1+t)^m
GFPair gf_genlaguerre_fixed_upper(int m, Complex t, Complex u, const TruncationSpec& trunc = {});

// ---- bilinear Laguerre 2D -----------------------------------------------

struct BilinearValues {
    Complex lhs;         // sum s^m t^n/(m!n!) L_{m,n}(z,z') L_{m,n}(w',w)
    Complex lhs_swapped; // same with L_{n,m}(w,w')
    Complex rhs_direct;
    Complex rhs_factorized;
};
// |st| < 1.
BilinearValues gf_bilinear_laguerre2d(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                      const TruncationSpec& trunc = {});

struct BilinearGenLaguerre {
    Complex first;  // n!/m! s^m t^n (zw')^{m-n} L_n^{m-n}(zz') L_n^{m-n}(ww')
    Complex second; // s^m t^n (-z'/w')^{n-m} L_m^{n-m}(zz') L_n^{m-n}(ww')
    Complex rhs;
};
BilinearGenLaguerre gf_bilinear_genlaguerre(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                            const TruncationSpec& trunc = {});

struct DiagonalValues {
    Complex lhs2d;   // sum (-t)^n/n! L_{n,n}(z,z')
    Complex lhs_1d;  // sum t^n L_n(zz')
    Complex rhs;
};
// |t| < 1.
DiagonalValues gf_laguerre_diagonal(Complex t, Complex z, Complex zp, const TruncationSpec& trunc = {});

struct LimitProbe {
    Complex bilinear; // bilinear closed form at s*delta/w0', t*delta/w0, w = w0/delta, w' = w0'/delta
    Complex simple;   // exp(sz + tz' - st)
    double rel_diff;
};
LimitProbe bilinear_limit_probe(double delta, Complex s, Complex t, Complex z, Complex zp, Complex w0,
                                Complex w0p);

// ---- Hermite 2D products ------------------------------------------------

// lhs double sum, rhs closed form, rhs_factorized = product of two Mehler kernels.
// |s| < 1, |t| < 1.
GFTriple gf_hermite2d_product(Complex s, Complex t, Complex x, Complex y, Complex u, Complex v,
                              const TruncationSpec& trunc = {});
// u = v = 0: product of two even-index Hermite series.
GFPair gf_hermite2d_even_product(Complex s, Complex t, Complex x, Complex y, const TruncationSpec& trunc = {});

// ---- mixed and even-index -----------------------------------------------

// sum s^m t^n/(sqrt(2^{m+n}) m!n!) L_{m,n}(z,z') H_m(u) H_n(v).  |st| < 1.
GFPair gf_mixed(Complex s, Complex t, Complex z, Complex zp, Complex u, Complex v,
                const TruncationSpec& trunc = {});
// sum (-1)^{k+l} s^{2k} t^{2l}/(k!l!2^{k+l}) L_{2k,2l}(z,z').  |st| < 1.
GFTriple gf_even_index_laguerre2d(Complex s, Complex t, Complex z, Complex zp, const TruncationSpec& trunc = {});
// sum sigma^k tau^l/(2^{k+l} k!l!) L_{2k,2l}(z,z').  |sigma tau| < 1.
GFPair gf_even_index_sigma_tau(Complex sigma, Complex tau, Complex z, Complex zp,
                               const TruncationSpec& trunc = {});

struct EvenIndexXY {
    Complex x;
    Complex y;
    Complex hermite_series; // product of the two even-Hermite series in x and y
    Complex closed;         // (1-st)^{-1/2} exp(-st x^2/(1-st)) (1+st)^{-1/2} exp(st y^2/(1+st))
};
// x = (sqrt(s/t) z + sqrt(t/s) z')/2, y = -(i/2)(sqrt(s/t) z - sqrt(t/s) z').  s, t != 0.
EvenIndexXY even_index_xy_decomposition(Complex s, Complex t, Complex z, Complex zp,
                                        const TruncationSpec& trunc = {});

struct EvenIndexGenLaguerre {
    Complex first;  // over L_{2l}^{2(k-l)}(zz') with (-z^2/2)^{k-l}
    Complex second; // over L_{2k}^{2(l-k)}(zz') with (-z'^2/2)^{l-k}
};
EvenIndexGenLaguerre gf_even_index_genlaguerre(Complex s, Complex t, Complex z, Complex zp,
                                               const TruncationSpec& trunc = {});

// ---- single sums --------------------------------------------------------

struct LagsumValues {
    Complex lhs;         // sum (-t)^k/k! L_{m,k}(z,z') L_{k,n}(w,w')
    Complex lhs_swapped; // with L_{n,k}(w',w)
    Complex rhs_root;    // exp(-twz') (sqrt t)^{m+n} L_{m,n}((z+tw)/sqrt t, (w'+tz')/sqrt t), expanded; finite at t = 0
    std::optional<Complex> rhs_sqrt;     // the same with an explicit principal sqrt(t), t != 0
    std::optional<Complex> rhs_division; // exp(-twz') t^n L_{m,n}(z+tw, z'+w'/t), t != 0
};
LagsumValues gf_lagsum(int m, int n, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                       const TruncationSpec& trunc = {});

struct FourForms {
    Complex reference; // the Laguerre 2D value these rewrites must reproduce
    Complex a, b, c, d;
};
// Generalized-Laguerre rewrites of the single sum.
FourForms gf_lagsum_genlaguerre(int m, int n, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                const TruncationSpec& trunc = {});

struct LagsumDiagonal {
    Complex lhs;      // (w,w') = (z,z')
    Complex rhs_root; // expanded, branch free
    Complex rhs_sqrt; // with principal sqrt(t)
};
LagsumDiagonal gf_lagsum_diagonal(int m, int n, Complex t, Complex z, Complex zp, const TruncationSpec& trunc = {});
// Rewrites in u = zz'; reference is the diagonal sum divided by z^m z'^n.
FourForms gf_lagsum_diagonal_genlaguerre(int m, int n, Complex t, Complex z, Complex zp,
                                         const TruncationSpec& trunc = {});

struct Resummation {
    Complex via_lagsum;   // sum_m s^m/m! of the (m,m) single-sum closed form at -t
    Complex via_laguerre; // exp(twz') sum (st)^m L_m(-(z-tw)(w'-tz')/t)
    Complex closed;       // exp(twz') (1-st)^{-1} exp(s(z-tw)(w'-tz')/(1-st))
};
// t != 0, |st| < 1.
Resummation lagsum_resummation(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                               const TruncationSpec& trunc = {});

// ---- coordinate decomposition -------------------------------------------

struct S10Coords {
    Complex x, xp, y, yp;
};
struct S10Original {
    Complex z, zp, w, wp;
};
// q = (t/s)^{1/4} principal; (s/t)^{1/4} is taken as 1/q.  s, t != 0.
S10Coords decompose_coords_s10(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp);
S10Original recompose_coords_s10(Complex s, Complex t, const S10Coords& c);

struct Decomposition {
    Complex series_product; // sum R^m/m! L_{m,m}(x,x') * sum (-R)^n/n! L_{n,n}(y,y'), R = s q^2
    Complex closed_product;
    Complex bilinear;       // bilinear_rhs in the original coordinates
};
Decomposition decomposition_product(Complex s, Complex t, Complex z, Complex zp, Complex w, Complex wp,
                                    const TruncationSpec& trunc = {});

// ---- completeness limit surrogate ---------------------------------------

struct CompletenessProbe {
    double kernel_coincident; // |K(z,z)| with K the bilinear kernel at s = t = 1 - eps/2, z' = z*, times exp(-|z|^2)
    double kernel_displaced;  // same at w = z + 1, times exp(-(|z|^2+|w|^2)/2)
    double concentration;     // coincident / displaced
    double envelope;          // eps * kernel_coincident, tends to 1
};
// eps in (0, 0.5].
CompletenessProbe completeness_limit_probe(double eps, Complex z);

} // namespace lagherm
