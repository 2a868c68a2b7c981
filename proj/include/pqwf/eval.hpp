#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqwf/classifiers.hpp"

namespace pqwf {

/// 11x11 counts, rows = true class, columns = predicted class.
struct ConfusionMatrix {
    std::array<std::array<std::int64_t, kNumClasses>, kNumClasses> counts{};

    void add(DisturbanceClass truth, DisturbanceClass predicted) {
        ++counts[static_cast<std::size_t>(class_code(truth) - 1)]
                [static_cast<std::size_t>(class_code(predicted) - 1)];
    }

    std::int64_t total() const;
    std::int64_t trace() const;

    /// trace / total, in percent.
    double overall_accuracy() const;

    /// Row-normalized percentages (0 for empty rows), as in the report tables.
    std::array<std::array<double, kNumClasses>, kNumClasses> row_percentages() const;

    /// Diagonal percentage per class; empty rows report 0.
    std::array<double, kNumClasses> per_class_accuracy() const;
};

struct SplitResult {
    LabeledDataset train;
    LabeledDataset test;
    std::vector<std::size_t> train_indices; // row ids into the input dataset
    std::vector<std::size_t> test_indices;
};

/// Stratified split: per class, rows are shuffled with a stream keyed by
/// (seed, class_code) and the first train_per_class go to train, the next
/// test_per_class to test. Throws ShapeError when a class runs short.
SplitResult split_dataset(const LabeledDataset& rows, std::size_t train_per_class,
                          std::size_t test_per_class, std::uint64_t seed);

using PredictFn = std::function<DisturbanceClass(const FeatureArray&)>;

ConfusionMatrix evaluate(const PredictFn& predict, const LabeledDataset& test);

struct ClassifierResult {
    std::string name; // "knn" | "svm" | "forest"
    ConfusionMatrix matrix;
    double train_seconds = 0.0;
    double eval_seconds = 0.0;
    std::string hyperparameters; // rendered "key=value" summary
    std::optional<double> oob_error;
};

struct EvalReport {
    std::vector<ClassifierResult> results;
    std::uint64_t dataset_seed = 0;
    std::uint64_t split_seed = 0;
    std::size_t train_per_class = 0;
    std::size_t test_per_class = 0;

    const ClassifierResult* find(const std::string& name) const;
};

/// Reference overall accuracies the pipeline is compared against.
struct ReferenceTargets {
    double knn = 90.36;
    double svm = 97.72;
    double forest = 99.54;
    double knn_floor = 85.0;
    double svm_floor = 94.0;
    double forest_floor = 97.0;
};

struct ComparisonResult {
    bool passed = true;
    std::vector<std::string> lines; // one human-readable line per check
};

/// Checks the per-classifier accuracy floors, the strict ordering
/// forest > svm > knn (when all three are present), and reports the delta
/// against the reference accuracies.
ComparisonResult compare_to_reference(const EvalReport& report,
                                      const ReferenceTargets& targets = {});

} // namespace pqwf
