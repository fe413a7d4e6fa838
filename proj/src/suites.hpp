#pragma once

#include "lagherm/harness.hpp"

#include <vector>

namespace lagherm {

void register_poly_suites(std::vector<SuiteInfo>& r);
void register_exact_suites(std::vector<SuiteInfo>& r);
void register_genfun_suites(std::vector<SuiteInfo>& r);
void register_su11_suites(std::vector<SuiteInfo>& r);

} // namespace lagherm
