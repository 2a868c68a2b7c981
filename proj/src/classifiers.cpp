#include "pqwf/classifiers.hpp"

#include <cmath>

#include "pqwf/errors.hpp"

namespace pqwf {

Standardization standardize_fit(const LabeledDataset& train) {
    if (train.empty()) throw ShapeError("standardize_fit: empty training set");
    const double n = static_cast<double>(train.size());
    Standardization s;
    for (std::size_t f = 0; f < s.means.size(); ++f) {
        double sum = 0.0;
        for (const FeatureArray& row : train.x) sum += row[f];
        const double m = sum / n;
        double var = 0.0;
        for (const FeatureArray& row : train.x) var += (row[f] - m) * (row[f] - m);
        const double sd = std::sqrt(var / n);
        s.means[f] = m;
        s.scales[f] = sd == 0.0 ? 1.0 : sd;
    }
    return s;
}

double euclidean_distance(const FeatureArray& a, const FeatureArray& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

DisturbanceClass majority_label(const std::array<int, kNumClasses>& votes) {
    int best = 0;
    for (int c = 1; c < kNumClasses; ++c)
        if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(best)])
            best = c;
    return class_from_code(best + 1);
}

} // namespace pqwf
