#include "pqwf/dwt.hpp"

#include <cstddef>
#include <string>

#include "pqwf/errors.hpp"

namespace pqwf {

std::string_view boundary_mode_name(BoundaryMode mode) {
    switch (mode) {
        case BoundaryMode::Periodic: return "periodic";
    }
    return "unknown";
}

BoundaryMode boundary_mode_from_name(std::string_view name) {
    if (name == "periodic") return BoundaryMode::Periodic;
    throw ParameterError("unknown boundary mode: " + std::string(name));
}

WaveletFilterPair db4_filters() {
    WaveletFilterPair f;
    f.lowpass = {0.2303778133088965,
                 0.7148465705529157,
                 0.6308807679298589,
                 -0.027983769416859854,
                 -0.18703481171909309,
                 0.030841381835560764,
                 0.0328830116668852,
                 -0.010597401785069032};
    for (std::size_t k = 0; k < 8; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        f.highpass[k] = sign * f.lowpass[7 - k];
    }
    return f;
}

std::pair<std::vector<double>, std::vector<double>>
dwt_level(std::span<const double> signal, const WaveletFilterPair& filters,
          BoundaryMode mode) {
    (void)mode; // single mode; kept in the signature for the file formats
    const std::size_t n = signal.size();
    if (n < 2 || n % 2 != 0)
        throw ShapeError("dwt_level: signal length must be even and >= 2, got " +
                         std::to_string(n));
    const std::size_t half = n / 2;
    std::vector<double> approx(half), detail(half);
    for (std::size_t i = 0; i < half; ++i) {
        double a = 0.0, d = 0.0;
        for (std::size_t k = 0; k < 8; ++k) {
            const double v = signal[(2 * i + k) % n];
            a += filters.lowpass[k] * v;
            d += filters.highpass[k] * v;
        }
        approx[i] = a;
        detail[i] = d;
    }
    return {std::move(approx), std::move(detail)};
}

DecompositionResult wavedec(std::span<const double> signal, int levels,
                            const WaveletFilterPair& filters, BoundaryMode mode) {
    if (levels < 1) throw ShapeError("wavedec: levels must be >= 1");
    const std::size_t n = signal.size();
    const std::size_t block = std::size_t{1} << levels;
    if (n == 0 || n % block != 0)
        throw ShapeError("wavedec: signal length " + std::to_string(n) +
                         " not divisible by 2^" + std::to_string(levels));

    DecompositionResult result;
    result.levels = levels;
    result.boundary_mode = mode;
    std::vector<double> current(signal.begin(), signal.end());
    for (int level = 0; level < levels; ++level) {
        auto [approx, detail] = dwt_level(current, filters, mode);
        result.details.push_back(std::move(detail));
        current = std::move(approx);
    }
    result.approx = std::move(current);
    return result;
}

namespace {

// Adjoint of one analysis step; exact inverse since the periodized
// filter-bank matrix is orthogonal.
std::vector<double> idwt_level(std::span<const double> approx,
                               std::span<const double> detail,
                               const WaveletFilterPair& filters) {
    if (approx.size() != detail.size())
        throw ShapeError("waverec: approx/detail length mismatch");
    const std::size_t half = approx.size();
    const std::size_t n = half * 2;
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < half; ++i) {
        for (std::size_t k = 0; k < 8; ++k) {
            out[(2 * i + k) % n] +=
                filters.lowpass[k] * approx[i] + filters.highpass[k] * detail[i];
        }
    }
    return out;
}

} // namespace

std::vector<double> waverec(const DecompositionResult& result,
                            const WaveletFilterPair& filters) {
    if (result.levels < 1 ||
        result.details.size() != static_cast<std::size_t>(result.levels))
        throw ShapeError("waverec: levels does not match detail band count");
    std::vector<double> current(result.approx);
    for (int level = result.levels - 1; level >= 0; --level) {
        current = idwt_level(current, result.details[static_cast<std::size_t>(level)],
                             filters);
    }
    return current;
}

} // namespace pqwf
