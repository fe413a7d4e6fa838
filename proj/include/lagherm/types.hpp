#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace lagherm {

using Complex = std::complex<double>;

/// Largest polynomial index accepted by the evaluators.
inline constexpr int kMaxPolyIndex = 200;

/// Requested index lies outside the supported range.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Parameters outside the region where a formula or series is valid
/// (convergence guard, decay condition, zero divisor).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A truncated series did not meet its tail criterion within the term budget.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double tail)
        : std::runtime_error(what), tail_(tail) {}
    double tail() const noexcept { return tail_; }

private:
    double tail_;
};

/// Adaptive quadrature did not converge; carries the last error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved_error() const noexcept { return achieved_; }

private:
    double achieved_;
};

struct PolyIndex {
    int m = 0;
    int n = 0;

    /// Throws IndexError unless 0 <= m, n <= max_index.
    static PolyIndex checked(int m, int n, int max_index = kMaxPolyIndex);
};

/// Evaluation point (z, z') of a two-variable polynomial. The second
/// coordinate is independent of the first unless built with conjugate_pair().
struct ComplexPoint2D {
    Complex z;
    Complex zp;

    static ComplexPoint2D checked(Complex z, Complex zp);
    static ComplexPoint2D conjugate_pair(Complex z) { return checked(z, std::conj(z)); }
};

enum class EvalRoute { ExplicitSum, Recurrence, CrossFamily };

inline bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

inline PolyIndex PolyIndex::checked(int m, int n, int max_index) {
    if (m < 0 || n < 0 || m > max_index || n > max_index)
        throw IndexError("polynomial index (" + std::to_string(m) + "," + std::to_string(n) +
                         ") outside [0," + std::to_string(max_index) + "]");
    return {m, n};
}

inline ComplexPoint2D ComplexPoint2D::checked(Complex z, Complex zp) {
    if (!is_finite(z) || !is_finite(zp))
        throw DomainError("evaluation point has non-finite components");
    return {z, zp};
}

} // namespace lagherm
