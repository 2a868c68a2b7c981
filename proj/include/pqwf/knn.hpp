#pragma once

#include "pqwf/classifiers.hpp"

namespace pqwf {

/// Instance-based classifier: the model is the standardized training data.
struct KnnModel {
    std::vector<FeatureArray> x; // standardized rows
    std::vector<DisturbanceClass> y;
    int k = 1;
    Standardization standardization;
};

/// Stores the training rows verbatim (after z-scoring). k must be >= 1 and odd.
KnnModel knn_train(const LabeledDataset& train, int k = 1);

/// Majority label among the k nearest rows by Euclidean distance.
/// Distance ties break toward the lower row index, vote ties toward the
/// smallest class code. `query` is a raw (unstandardized) feature vector.
DisturbanceClass knn_predict(const KnnModel& model, const FeatureArray& query);

} // namespace pqwf
