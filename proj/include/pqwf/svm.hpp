#pragma once

#include "pqwf/classifiers.hpp"

namespace pqwf {

/// One soft-margin binary machine of the one-vs-one ensemble. `positive`
/// is the lower-coded class of the pair (o = +1), `negative` the higher.
struct BinarySvm {
    DisturbanceClass positive = DisturbanceClass::SwellWithHarmonics;
    DisturbanceClass negative = DisturbanceClass::Swell;
    std::vector<FeatureArray> support_x; // standardized support vectors
    std::vector<double> alpha_o;         // alpha_i * o_i, |alpha_o| in (0, C]
    double bias = 0.0;
};

struct SvmModel {
    std::vector<BinarySvm> machines; // one per class pair (i < j), in pair order
    double penalty_c = 10.0;
    double gamma = 0.2;
    Standardization standardization;
    std::vector<DisturbanceClass> classes; // classes present in training data
};

/// RBF kernel exp(-gamma * ||a-b||^2).
double rbf_kernel(const FeatureArray& a, const FeatureArray& b, double gamma);

/// Decision value sum_i alpha_o_i K(sv_i, q) + bias for a standardized query.
double svm_decision(const BinarySvm& machine, double gamma, const FeatureArray& query);

/// Trains one soft-margin machine per class pair by sequential minimal
/// optimization (deterministic working-set selection, error cache). The
/// bias is the average over margin support vectors (0 < alpha < C) of the
/// per-vector exact bias. Pairs where the training data holds only one of
/// the two classes are skipped with a warning on stderr.
SvmModel svm_train(const LabeledDataset& train, double penalty_c = 10.0,
                   double gamma = 0.2, double kkt_tolerance = 1e-3,
                   int max_passes = 10000);

/// One-vs-one majority vote; vote ties break by summed |decision value|,
/// then by smallest class code. `query` is a raw feature vector.
DisturbanceClass svm_predict(const SvmModel& model, const FeatureArray& query);

} // namespace pqwf
