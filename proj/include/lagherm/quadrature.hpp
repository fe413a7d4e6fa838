#pragma once

#include "lagherm/types.hpp"

#include <functional>
#include <vector>

namespace lagherm {

struct QuadratureSpec {
    double rel_tol = 1e-12;  // |T_2n - T_n| <= rel_tol * (integral of |f|)
    int min_panels = 64;     // per axis
    int max_panels = 1 << 15;
};

struct Window {
    double lo;
    double hi;
};

// Composite trapezoid rule on [lo, hi] with panel doubling. Integrands here
// are Gaussian-dominated and negligible at the window ends, where the rule
// converges exponentially. Throws QuadratureError carrying the last
// difference estimate when max_panels is reached.
Complex integrate_1d(const std::function<Complex(double)>& f, Window w, const QuadratureSpec& spec = {});

// Tensor-product version. Each level only evaluates the new nodes.
Complex integrate_2d(const std::function<Complex(double, double)>& f, Window wx, Window wy,
                     const QuadratureSpec& spec = {});

// Several integrands sharing the nodes: f(x, y, out) writes count values.
// Convergence is required of every component, each measured against the
// largest component scale.
std::vector<Complex> integrate_2d_multi(int count, const std::function<void(double, double, Complex*)>& f,
                                        Window wx, Window wy, const QuadratureSpec& spec = {});

// Window around center holding a Gaussian exp(-decay (x-center)^2) times a
// polynomial of the given degree down to double-precision noise.
Window gaussian_window(double center, double decay, int degree = 0);

} // namespace lagherm
