#pragma once

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace pqwf {

enum class BoundaryMode {
    Periodic, // signal treated as circular; lengths halve exactly, energy preserved
};

std::string_view boundary_mode_name(BoundaryMode mode);
BoundaryMode boundary_mode_from_name(std::string_view name);

/// One analysis filter pair. For the orthogonal Daubechies family the
/// highpass is the quadrature mirror of the lowpass:
///   highpass[k] = (-1)^k * lowpass[taps-1-k]
struct WaveletFilterPair {
    std::array<double, 8> lowpass;
    std::array<double, 8> highpass;
};

/// The 8-tap Daubechies filter with 4 vanishing moments. Tap values were
/// obtained by spectral factorization of the order-4 Daubechies product
/// filter (minimum-phase root selection) and are correct to the last bit;
/// the test suite asserts normalization, orthonormal shifts, the
/// quadrature-mirror relation and all four vanishing moments.
WaveletFilterPair db4_filters();

struct DecompositionResult {
    std::vector<double> approx;               // coarsest approximation (level `levels`)
    std::vector<std::vector<double>> details; // details[0] = level 1 (finest) .. level `levels`
    int levels = 0;
    BoundaryMode boundary_mode = BoundaryMode::Periodic;
};

/// One analysis step with periodic extension:
///   approx[n] = sum_k lowpass[k]  * x[(2n+k) mod N]
///   detail[n] = sum_k highpass[k] * x[(2n+k) mod N]
/// Input length must be even and >= 2.
std::pair<std::vector<double>, std::vector<double>>
dwt_level(std::span<const double> signal, const WaveletFilterPair& filters,
          BoundaryMode mode = BoundaryMode::Periodic);

/// Multi-level pyramid: dwt_level iterated on the approximation.
/// Signal length must be divisible by 2^levels.
DecompositionResult wavedec(std::span<const double> signal, int levels,
                            const WaveletFilterPair& filters,
                            BoundaryMode mode = BoundaryMode::Periodic);

/// Inverse transform (adjoint of the orthogonal analysis steps).
std::vector<double> waverec(const DecompositionResult& result,
                            const WaveletFilterPair& filters);

} // namespace pqwf
