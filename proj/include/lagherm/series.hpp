#pragma once

#include "lagherm/types.hpp"

#include <string>
#include <vector>

namespace lagherm {

enum class TruncationPolicy { FixedN, TailBound };

struct TruncationSpec {
    int max_terms_per_index = 120;
    double tail_tolerance = 1e-13;
    TruncationPolicy policy = TruncationPolicy::FixedN;

    // Throws DomainError on max_terms < 1 or a non-positive tolerance.
    void validate() const;
};

struct SeriesSum {
    Complex value;
    double tail = 0.0; // size of the tail estimate that was accepted
};

// Sums terms[0..N). FixedN accepts when each of the last min(5,N) terms is at
// most tail_tolerance * max(1, |sum|). TailBound bounds the remainder by
// max|last terms| * ratio / (1 - ratio), where ratio is the geometric rate
// of the series (caller supplied, must be < 1). Throws TruncationError.
SeriesSum accept_1d(const std::vector<Complex>& terms, const TruncationSpec& spec, double ratio,
                    const std::string& what);

// Row-major N x N array of terms a_{m,n}. The tail band is max(m,n) >= N-5;
// under TailBound the remainder bound is additionally multiplied by N, the
// number of rows the band spans.
SeriesSum accept_2d(const std::vector<Complex>& terms, int N, const TruncationSpec& spec, double ratio,
                    const std::string& what);

} // namespace lagherm
