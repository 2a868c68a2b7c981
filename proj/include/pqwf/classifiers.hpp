#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pqwf/classes.hpp"
#include "pqwf/features.hpp"

namespace pqwf {

using FeatureArray = std::array<double, kNumFeatures>;

/// Per-feature z-score parameters, fit on training rows only.
struct Standardization {
    FeatureArray means{};
    FeatureArray scales{1.0, 1.0, 1.0, 1.0, 1.0};

    FeatureArray apply(const FeatureArray& x) const {
        FeatureArray out;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = (x[i] - means[i]) / scales[i];
        return out;
    }

    bool operator==(const Standardization&) const = default;
};

/// Rows of (feature vector, label). Kept as parallel arrays; x[i] is in
/// the fixed feature order (entropy, std_dev, mean, skewness, kurtosis).
struct LabeledDataset {
    std::vector<FeatureArray> x;
    std::vector<DisturbanceClass> y;

    std::size_t size() const { return x.size(); }
    bool empty() const { return x.empty(); }

    void add(const FeatureVector& f, DisturbanceClass label) {
        x.push_back(f.as_array());
        y.push_back(label);
    }
};

/// Population mean/std per feature over the training rows; a scale of 0
/// (constant feature) is replaced by 1.
Standardization standardize_fit(const LabeledDataset& train);

double euclidean_distance(const FeatureArray& a, const FeatureArray& b);

/// Majority label; ties go to the smallest class code.
DisturbanceClass majority_label(const std::array<int, kNumClasses>& votes);

} // namespace pqwf
