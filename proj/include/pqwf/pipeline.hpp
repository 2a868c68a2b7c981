#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pqwf/config.hpp"
#include "pqwf/csv.hpp"
#include "pqwf/eval.hpp"
#include "pqwf/forest.hpp"
#include "pqwf/knn.hpp"
#include "pqwf/svm.hpp"

namespace pqwf {

struct ExtractOutput {
    std::vector<FeatureRow> rows;
    std::vector<std::size_t> skipped_ids; // rows whose level-3 band was all zero
};

/// Wavelet decomposition + the five statistics for every record. Records
/// whose level-3 detail band is degenerate are skipped and reported.
ExtractOutput extract_dataset_features(const std::vector<SignalRecord>& records,
                                       int levels, BoundaryMode mode);

LabeledDataset to_labeled_dataset(const std::vector<FeatureRow>& rows);

struct TrainEvalResult {
    EvalReport report;
    ComparisonResult comparison;
    std::optional<KnnModel> knn;
    std::optional<SvmModel> svm;
    std::optional<RandomForestModel> forest;
};

/// Split, train the enabled classifiers, evaluate on the held-out rows and
/// compare against the reference accuracies.
TrainEvalResult train_and_evaluate(const std::vector<FeatureRow>& rows,
                                   const ExperimentConfig& config);

/// Table-per-classifier report with row-normalized percentages and runtimes.
std::string render_text_report(const EvalReport& report, const ComparisonResult& cmp);

/// JSON report with counts, percentages, floors and pass/fail. Contains no
/// wall-clock values, so identical runs produce identical bytes.
std::string render_json_report(const EvalReport& report, const ComparisonResult& cmp);

// File-level steps used by the command line tool. All paths land under
// `out_dir`, which is created when missing.

std::string dataset_csv_path(const std::string& out_dir);
std::string features_csv_path(const std::string& out_dir);

std::vector<SignalRecord> run_generate(const ExperimentConfig& config,
                                       const std::string& out_dir);

struct ExtractSummary {
    std::size_t rows_written = 0;
    std::vector<std::size_t> skipped_ids;
};
ExtractSummary run_extract(const std::string& dataset_path,
                           const ExperimentConfig& config, const std::string& out_dir);

struct TrainEvalSummary {
    bool passed = false;
    std::string report_text;
};
TrainEvalSummary run_train_eval(const std::string& features_path,
                                const ExperimentConfig& config,
                                const std::string& out_dir);

/// Emits waveform + per-level detail series for one dataset row.
/// Throws ParameterError when the id does not exist.
void run_plot(const std::string& dataset_path, std::size_t id,
              const ExperimentConfig& config, const std::string& out_dir, bool svg);

} // namespace pqwf
