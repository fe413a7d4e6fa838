#include "suites.hpp"

#include "lagherm/exact_identities.hpp"
#include "lagherm/poly.hpp"

namespace lagherm {

namespace {

void monomial_inversion(SuiteContext& c) {
    for (int total = 0; total <= 16; ++total)
        for (int m = 0; m <= total; ++m)
            c.exact({param("m", m), param("n", total - m)}, check_monomial_inversion_2d(m, total - m));
}

void hermite_inversion(SuiteContext& c) {
    for (int n = 0; n <= 40; ++n)
        c.exact({param("n", n)}, check_hermite_inversion(n));
}

void reordering(SuiteContext& c) {
    for (int k = 0; k <= 12; ++k)
        for (int l = 0; l <= 12; ++l)
            c.exact({param("k", k), param("l", l)}, check_reordering(k, l));
}

void operator_identity(SuiteContext& c) {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            c.exact({param("m", m), param("n", n)}, check_laguerre_operator_identity(m, n));
}

void specialized_jacobi0(SuiteContext& c) {
    for (int n = 0; n <= 30; ++n)
        c.exact({param("n", n)}, check_specialized_jacobi0(n));
}

void sum_identity_rows(SuiteContext& c) {
    for (int m = 0; m <= 12; ++m)
        for (int n = 0; n <= 12; ++n) {
            auto [lhs, rhs] = sum_identity(m, n);
            c.exact({param("m", m), param("n", n), {"form", "first"}}, lhs, rhs);
            c.exact({param("m", m), param("n", n), {"form", "second"}}, sum_identity_second_form(m, n), rhs);
        }
}

void jacobi0_rows(SuiteContext& c) {
    c.exact({{"case", "P_0^(0,0)"}}, jacobi0(0, 0, 0), BigRational(1));
    c.exact({{"case", "P_2^(0,0)"}}, jacobi0(2, 2, 2), BigRational(-1, 2));
    c.exact({{"case", "P_1^(2,2)"}}, jacobi0(1, 3, 3), BigRational(0));
    for (int m = 0; m <= 12; ++m)
        for (int n = 0; n <= 12; ++n)
            c.exact({param("m", m), param("n", n)}, check_jacobi0_inversion(m, n));
}

} // namespace

void register_exact_suites(std::vector<SuiteInfo>& r) {
    const SuiteKind E = SuiteKind::Exact;
    r.push_back({"monomial_inversion_2d", "Eq. (1.3)", "exact_id", E, 0.0, {"check_monomial_inversion_2d"},
                 monomial_inversion});
    r.push_back({"hermite_inversion", "Eq. (2.3)", "exact_id", E, 0.0, {"check_hermite_inversion"}, hermite_inversion});
    r.push_back({"reordering", "Eq. (1.10)", "exact_id", E, 0.0, {"check_reordering"}, reordering});
    r.push_back({"laguerre_operator_identity", "Eq. (1.9)", "exact_id", E, 0.0, {"check_laguerre_operator_identity"},
                 operator_identity});
    r.push_back({"specialized_jacobi0", "display after Eq. (1.16)", "exact_id", E, 0.0, {"check_specialized_jacobi0"},
                 specialized_jacobi0});
    r.push_back({"sum_identity_9_4", "Eq. (9.4)", "exact_id", E, 0.0, {"sum_identity"}, sum_identity_rows});
    r.push_back({"jacobi0_inversion", "Eq. (1.13)", "poly_core", E, 0.0, {"jacobi0"}, jacobi0_rows});
}

} // namespace lagherm
