#include "pqwf/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "pqwf/errors.hpp"
#include "pqwf/rng.hpp"

namespace pqwf {

std::int64_t ConfusionMatrix::total() const {
    std::int64_t sum = 0;
    for (const auto& row : counts)
        for (std::int64_t v : row) sum += v;
    return sum;
}

std::int64_t ConfusionMatrix::trace() const {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) sum += counts[i][i];
    return sum;
}

double ConfusionMatrix::overall_accuracy() const {
    const std::int64_t n = total();
    if (n == 0) return 0.0;
    return 100.0 * static_cast<double>(trace()) / static_cast<double>(n);
}

std::array<std::array<double, kNumClasses>, kNumClasses>
ConfusionMatrix::row_percentages() const {
    std::array<std::array<double, kNumClasses>, kNumClasses> out{};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        std::int64_t row_sum = 0;
        for (std::int64_t v : counts[i]) row_sum += v;
        if (row_sum == 0) continue;
        for (std::size_t j = 0; j < counts.size(); ++j)
            out[i][j] = 100.0 * static_cast<double>(counts[i][j]) /
                        static_cast<double>(row_sum);
    }
    return out;
}

std::array<double, kNumClasses> ConfusionMatrix::per_class_accuracy() const {
    const auto pct = row_percentages();
    std::array<double, kNumClasses> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pct[i][i];
    return out;
}

SplitResult split_dataset(const LabeledDataset& rows, std::size_t train_per_class,
                          std::size_t test_per_class, std::uint64_t seed) {
    if (rows.empty()) throw ShapeError("split_dataset: empty dataset");

    std::array<std::vector<std::size_t>, kNumClasses> by_class;
    for (std::size_t i = 0; i < rows.size(); ++i)
        by_class[static_cast<std::size_t>(class_code(rows.y[i]) - 1)].push_back(i);

    SplitResult result;
    for (int code = 1; code <= kNumClasses; ++code) {
        auto& ids = by_class[static_cast<std::size_t>(code - 1)];
        if (ids.empty()) continue;
        if (ids.size() < train_per_class + test_per_class)
            throw ShapeError("split_dataset: class " +
                             std::string(class_name(class_from_code(code))) + " has " +
                             std::to_string(ids.size()) + " rows, needs " +
                             std::to_string(train_per_class + test_per_class));
        // Fisher-Yates with a per-class stream so the split is independent
        // of how other classes are populated.
        RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(code), 0);
        for (std::size_t i = ids.size() - 1; i > 0; --i) {
            const std::size_t j = rng.uniform_index(i + 1);
            std::swap(ids[i], ids[j]);
        }
        for (std::size_t i = 0; i < train_per_class; ++i)
            result.train_indices.push_back(ids[i]);
        for (std::size_t i = 0; i < test_per_class; ++i)
            result.test_indices.push_back(ids[train_per_class + i]);
    }

    for (std::size_t i : result.train_indices) {
        result.train.x.push_back(rows.x[i]);
        result.train.y.push_back(rows.y[i]);
    }
    for (std::size_t i : result.test_indices) {
        result.test.x.push_back(rows.x[i]);
        result.test.y.push_back(rows.y[i]);
    }
    return result;
}

ConfusionMatrix evaluate(const PredictFn& predict, const LabeledDataset& test) {
    if (test.empty()) throw ShapeError("evaluate: empty test set");
    ConfusionMatrix matrix;
    for (std::size_t i = 0; i < test.size(); ++i)
        matrix.add(test.y[i], predict(test.x[i]));
    return matrix;
}

const ClassifierResult* EvalReport::find(const std::string& name) const {
    for (const ClassifierResult& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

std::string fmt_pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

ComparisonResult compare_to_reference(const EvalReport& report,
                                      const ReferenceTargets& targets) {
    ComparisonResult out;
    struct Check {
        const char* name;
        double floor;
        double reference;
    };
    const Check checks[] = {{"knn", targets.knn_floor, targets.knn},
                            {"svm", targets.svm_floor, targets.svm},
                            {"forest", targets.forest_floor, targets.forest}};

    std::array<std::optional<double>, 3> acc;
    for (std::size_t i = 0; i < 3; ++i) {
        const ClassifierResult* r = report.find(checks[i].name);
        if (!r) continue;
        acc[i] = r->matrix.overall_accuracy();
        const bool ok = *acc[i] >= checks[i].floor;
        out.passed = out.passed && ok;
        out.lines.push_back(std::string(checks[i].name) + ": accuracy " +
                            fmt_pct(*acc[i]) + "% (floor " + fmt_pct(checks[i].floor) +
                            "%, reference " + fmt_pct(checks[i].reference) +
                            "%, delta " + fmt_pct(*acc[i] - checks[i].reference) +
                            ") -> " + (ok ? "pass" : "FAIL"));
    }

    if (acc[0] && acc[1] && acc[2]) {
        const bool ordered = *acc[2] > *acc[1] && *acc[1] > *acc[0];
        out.passed = out.passed && ordered;
        out.lines.push_back(std::string("ordering forest > svm > knn: ") +
                            fmt_pct(*acc[2]) + " > " + fmt_pct(*acc[1]) + " > " +
                            fmt_pct(*acc[0]) + " -> " + (ordered ? "pass" : "FAIL"));
    }
    return out;
}

} // namespace pqwf
