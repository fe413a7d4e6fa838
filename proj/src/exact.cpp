#include "lagherm/exact.hpp"

#include "lagherm/types.hpp"

#include <sstream>

namespace lagherm {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInt factorial(int n) {
    if (n < 0)
        throw DomainError("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (n < 0)
        throw DomainError("binomial with negative upper argument");
    if (k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

ExactPoly2 ExactPoly2::constant(const BigRational& c) { return monomial(0, 0, c); }

ExactPoly2 ExactPoly2::monomial(int a, int b, const BigRational& c) {
    ExactPoly2 p;
    p.add_term(a, b, c);
    return p;
}

void ExactPoly2::add_term(int a, int b, const BigRational& c) {
    if (a < 0 || b < 0)
        throw DomainError("negative exponent in exact polynomial");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigRational ExactPoly2::coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? BigRational(0) : it->second;
}

int ExactPoly2::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first + e.second);
    return d;
}

ExactPoly2& ExactPoly2::operator+=(const ExactPoly2& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e.first, e.second, c);
    return *this;
}

ExactPoly2& ExactPoly2::operator-=(const ExactPoly2& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e.first, e.second, -c);
    return *this;
}

ExactPoly2& ExactPoly2::operator*=(const ExactPoly2& other) {
    ExactPoly2 out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_)
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

ExactPoly2& ExactPoly2::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_)
        coef *= c;
    return *this;
}

ExactPoly2 ExactPoly2::derivative(Var v, int order) const {
    if (order < 0)
        throw DomainError("negative derivative order");
    ExactPoly2 out;
    for (const auto& [e, c] : terms_) {
        int k = v == Var::First ? e.first : e.second;
        if (k < order)
            continue;
        // falling factorial k (k-1) ... (k-order+1)
        BigInt f = 1;
        for (int i = 0; i < order; ++i)
            f *= k - i;
        if (v == Var::First)
            out.add_term(e.first - order, e.second, c * BigRational(f));
        else
            out.add_term(e.first, e.second - order, c * BigRational(f));
    }
    return out;
}

ExactPoly2 ExactPoly2::times_monomial(int a, int b) const {
    ExactPoly2 out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(Exponent{e.first + a, e.second + b}, c);
    return out;
}

std::string ExactPoly2::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        if (e.first)
            os << "*z^" << e.first;
        if (e.second)
            os << "*z'^" << e.second;
    }
    return os.str();
}

} // namespace lagherm
