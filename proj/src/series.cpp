#include "lagherm/series.hpp"

#include <algorithm>
#include <cmath>

namespace lagherm {

void TruncationSpec::validate() const {
    if (max_terms_per_index < 1)
        throw DomainError("truncation needs at least one term per index");
    if (!(tail_tolerance > 0.0) || !std::isfinite(tail_tolerance))
        throw DomainError("tail tolerance must be positive");
}

namespace {

SeriesSum finish(Complex sum, double band_max, double band_width, const TruncationSpec& spec, double ratio,
                 const std::string& what) {
    if (!is_finite(sum))
        throw TruncationError(what + ": partial sum is not finite", INFINITY);
    double tail = band_max;
    if (spec.policy == TruncationPolicy::TailBound) {
        if (!(ratio >= 0.0 && ratio < 1.0))
            throw DomainError(what + ": tail bound needs a geometric ratio below 1");
        tail = band_max * ratio / (1.0 - ratio) * band_width;
    }
    double limit = spec.tail_tolerance * std::max(1.0, std::abs(sum));
    if (!(tail <= limit))
        throw TruncationError(what + ": tail " + std::to_string(tail) + " above " + std::to_string(limit) +
                                  " after " + std::to_string(spec.max_terms_per_index) + " terms per index",
                              tail);
    return {sum, tail};
}

} // namespace

SeriesSum accept_1d(const std::vector<Complex>& terms, const TruncationSpec& spec, double ratio,
                    const std::string& what) {
    spec.validate();
    Complex sum = 0.0;
    for (const auto& t : terms)
        sum += t;
    const std::size_t n = terms.size();
    const std::size_t band = std::min<std::size_t>(5, n);
    double band_max = 0.0;
    for (std::size_t k = n - band; k < n; ++k)
        band_max = std::max(band_max, std::abs(terms[k]));
    return finish(sum, band_max, 1.0, spec, ratio, what);
}

SeriesSum accept_2d(const std::vector<Complex>& terms, int N, const TruncationSpec& spec, double ratio,
                    const std::string& what) {
    spec.validate();
    if (static_cast<std::size_t>(N) * N != terms.size())
        throw std::invalid_argument("term array is not N x N");
    Complex sum = 0.0;
    double band_max = 0.0;
    const int edge = std::max(0, N - 5);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            Complex t = terms[static_cast<std::size_t>(m) * N + n];
            sum += t;
            if (std::max(m, n) >= edge)
                band_max = std::max(band_max, std::abs(t));
        }
    return finish(sum, band_max, static_cast<double>(N), spec, ratio, what);
}

} // namespace lagherm
