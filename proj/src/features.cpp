#include "pqwf/features.hpp"

#include <cmath>
#include <string>

#include "pqwf/errors.hpp"

namespace pqwf {

namespace {

void require_nonempty(std::span<const double> coeffs, const char* op) {
    if (coeffs.empty())
        throw ShapeError(std::string(op) + ": empty coefficient array");
}

} // namespace

double mean(std::span<const double> coeffs) {
    require_nonempty(coeffs, "mean");
    double sum = 0.0;
    for (double v : coeffs) sum += v;
    return sum / static_cast<double>(coeffs.size());
}

double std_dev(std::span<const double> coeffs) {
    require_nonempty(coeffs, "std_dev");
    const double m = mean(coeffs);
    double sum = 0.0;
    for (double v : coeffs) sum += (v - m) * (v - m);
    return std::sqrt(sum / static_cast<double>(coeffs.size()));
}

double kurtosis(std::span<const double> coeffs) {
    require_nonempty(coeffs, "kurtosis");
    const double m = mean(coeffs);
    const double sigma = std_dev(coeffs);
    if (sigma == 0.0) return 0.0;
    double sum = 0.0;
    for (double v : coeffs) {
        const double z = (v - m) / sigma;
        sum += z * z * z * z;
    }
    return sum / static_cast<double>(coeffs.size());
}

double skewness(std::span<const double> coeffs) {
    require_nonempty(coeffs, "skewness");
    const double m = mean(coeffs);
    const double sigma = std_dev(coeffs);
    if (sigma == 0.0) return 0.0;
    double sum = 0.0;
    for (double v : coeffs) {
        const double z = (v - m) / sigma;
        sum += z * z * z;
    }
    return sum / static_cast<double>(coeffs.size());
}

double entropy(std::span<const double> coeffs) {
    require_nonempty(coeffs, "entropy");
    double energy = 0.0;
    for (double v : coeffs) energy += v * v;
    if (energy == 0.0)
        throw DegenerateInputError("entropy: all coefficients are zero");
    double ent = 0.0;
    for (double v : coeffs) {
        const double p = v * v / energy;
        if (p > 0.0) ent -= p * std::log2(p);
    }
    return ent;
}

FeatureVector extract_features(const DecompositionResult& decomp,
                               std::optional<DisturbanceClass> label) {
    if (decomp.levels < 3 || decomp.details.size() < 3)
        throw ShapeError("extract_features: decomposition needs >= 3 levels, got " +
                         std::to_string(decomp.levels));
    const std::vector<double>& d3 = decomp.details[2];
    FeatureVector f;
    f.entropy = entropy(d3);
    f.std_dev = std_dev(d3);
    f.mean = mean(d3);
    f.skewness = skewness(d3);
    f.kurtosis = kurtosis(d3);
    f.label = label;
    return f;
}

} // namespace pqwf
