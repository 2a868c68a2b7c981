#pragma once

#include <array>
#include <optional>
#include <span>

#include "pqwf/classes.hpp"
#include "pqwf/dwt.hpp"

namespace pqwf {

/// The five statistics of the level-3 detail coefficients, in the fixed
/// serialization order used by every CSV, model file and classifier.
struct FeatureVector {
    double entropy = 0.0;  // bits
    double std_dev = 0.0;
    double mean = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    std::optional<DisturbanceClass> label;

    std::array<double, 5> as_array() const {
        return {entropy, std_dev, mean, skewness, kurtosis};
    }
};

inline constexpr int kNumFeatures = 5;
inline constexpr std::array<std::string_view, 5> kFeatureNames = {
    "entropy", "std_dev", "mean", "skewness", "kurtosis"};

// All statistics use the population (1/N) convention.
double mean(std::span<const double> coeffs);
double std_dev(std::span<const double> coeffs);

/// (1/N) sum ((d_i - mean)/sigma)^4; 0 when sigma == 0.
double kurtosis(std::span<const double> coeffs);

/// (1/N) sum ((d_i - mean)/sigma)^3; 0 when sigma == 0.
double skewness(std::span<const double> coeffs);

/// Energy entropy in bits: -sum p_i log2 p_i with p_i = d_i^2 / sum d_j^2.
/// Throws DegenerateInputError when every coefficient is zero.
double entropy(std::span<const double> coeffs);

/// Applies the five statistics to the level-3 detail band of `decomp`
/// (which must have at least 3 levels).
FeatureVector extract_features(const DecompositionResult& decomp,
                               std::optional<DisturbanceClass> label = std::nullopt);

} // namespace pqwf
