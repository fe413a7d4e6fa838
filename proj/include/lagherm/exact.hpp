#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lagherm {

using BigInt = mpz_class;
/// Exact rational. GMP keeps every arithmetic result in lowest terms with a
/// positive denominator; values built from a raw numerator/denominator pair go
/// through make_rational() so they are canonicalized too.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Selects the variable a differential operator acts on: First is z (or x),
/// Second is z'.
enum class Var { First, Second };

/// Sparse polynomial in two variables with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
class ExactPoly2 {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, BigRational>;

    ExactPoly2() = default;

    static ExactPoly2 constant(const BigRational& c);
    static ExactPoly2 monomial(int a, int b, const BigRational& c = 1);

    void add_term(int a, int b, const BigRational& c);
    BigRational coefficient(int a, int b) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    int degree() const;

    ExactPoly2& operator+=(const ExactPoly2& other);
    ExactPoly2& operator-=(const ExactPoly2& other);
    ExactPoly2& operator*=(const ExactPoly2& other);
    ExactPoly2& operator*=(const BigRational& c);

    friend ExactPoly2 operator+(ExactPoly2 a, const ExactPoly2& b) { return a += b; }
    friend ExactPoly2 operator-(ExactPoly2 a, const ExactPoly2& b) { return a -= b; }
    friend ExactPoly2 operator*(ExactPoly2 a, const ExactPoly2& b) { return a *= b; }
    friend ExactPoly2 operator*(ExactPoly2 a, const BigRational& c) { return a *= c; }
    friend ExactPoly2 operator*(const BigRational& c, ExactPoly2 a) { return a *= c; }
    friend bool operator==(const ExactPoly2& a, const ExactPoly2& b) { return a.terms_ == b.terms_; }

    /// order-th partial derivative with respect to v.
    ExactPoly2 derivative(Var v, int order = 1) const;
    /// Multiplication by z^a z'^b.
    ExactPoly2 times_monomial(int a, int b) const;

    std::string to_string() const;

private:
    Terms terms_;
};

} // namespace lagherm
