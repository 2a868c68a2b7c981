#include "pqwf/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pqwf/errors.hpp"
#include "pqwf/model_io.hpp"

namespace pqwf {

namespace fs = std::filesystem;
using nlohmann::json;

ExtractOutput extract_dataset_features(const std::vector<SignalRecord>& records,
                                       int levels, BoundaryMode mode) {
    const WaveletFilterPair filters = db4_filters();
    ExtractOutput out;
    out.rows.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const DecompositionResult decomp = wavedec(records[i].samples, levels, filters, mode);
        try {
            FeatureRow row;
            row.id = i;
            row.label = records[i].label;
            row.features = extract_features(decomp, records[i].label);
            out.rows.push_back(row);
        } catch (const DegenerateInputError&) {
            out.skipped_ids.push_back(i);
        }
    }
    return out;
}

LabeledDataset to_labeled_dataset(const std::vector<FeatureRow>& rows) {
    LabeledDataset data;
    data.x.reserve(rows.size());
    data.y.reserve(rows.size());
    for (const FeatureRow& row : rows) data.add(row.features, row.label);
    return data;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool enabled(const ExperimentConfig& config, const std::string& name) {
    for (const std::string& c : config.classifiers)
        if (c == name) return true;
    return false;
}

} // namespace

TrainEvalResult train_and_evaluate(const std::vector<FeatureRow>& rows,
                                   const ExperimentConfig& config) {
    const LabeledDataset all = to_labeled_dataset(rows);
    const SplitResult split =
        split_dataset(all, config.train_per_class, config.test_per_class, config.split_seed);

    TrainEvalResult result;
    result.report.dataset_seed = config.dataset.master_seed;
    result.report.split_seed = config.split_seed;
    result.report.train_per_class = config.train_per_class;
    result.report.test_per_class = config.test_per_class;

    if (enabled(config, "knn")) {
        ClassifierResult r;
        r.name = "knn";
        r.hyperparameters = "k=" + std::to_string(config.knn_k);
        auto t0 = std::chrono::steady_clock::now();
        result.knn = knn_train(split.train, config.knn_k);
        r.train_seconds = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        r.matrix = evaluate(
            [&](const FeatureArray& x) { return knn_predict(*result.knn, x); }, split.test);
        r.eval_seconds = seconds_since(t0);
        result.report.results.push_back(std::move(r));
    }
    if (enabled(config, "svm")) {
        ClassifierResult r;
        r.name = "svm";
        r.hyperparameters = "C=" + format_double(config.svm_c) +
                            " gamma=" + format_double(config.svm_gamma);
        auto t0 = std::chrono::steady_clock::now();
        result.svm = svm_train(split.train, config.svm_c, config.svm_gamma,
                               config.svm_kkt_tolerance, config.svm_max_passes);
        r.train_seconds = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        r.matrix = evaluate(
            [&](const FeatureArray& x) { return svm_predict(*result.svm, x); }, split.test);
        r.eval_seconds = seconds_since(t0);
        result.report.results.push_back(std::move(r));
    }
    if (enabled(config, "forest")) {
        ClassifierResult r;
        r.name = "forest";
        r.hyperparameters = "trees=" + std::to_string(config.rf_trees) +
                            " max_features=" + std::to_string(config.rf_max_features) +
                            " seed=" + std::to_string(config.rf_seed);
        auto t0 = std::chrono::steady_clock::now();
        result.forest = rf_train(split.train, config.rf_trees, config.rf_max_features,
                                 config.rf_seed);
        r.train_seconds = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        r.matrix = evaluate(
            [&](const FeatureArray& x) { return rf_predict(*result.forest, x); },
            split.test);
        r.eval_seconds = seconds_since(t0);
        r.oob_error = rf_oob_error(*result.forest, split.train).error;
        result.report.results.push_back(std::move(r));
    }

    result.comparison = compare_to_reference(result.report);
    return result;
}

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

} // namespace

std::string render_text_report(const EvalReport& report, const ComparisonResult& cmp) {
    std::ostringstream out;
    for (const ClassifierResult& r : report.results) {
        out << "=== " << r.name << " (" << r.hyperparameters << ") ===\n";
        out << "PQD";
        for (int c = 1; c <= kNumClasses; ++c) out << "\tC" << c;
        out << "\n";
        const auto pct = r.matrix.row_percentages();
        for (int i = 0; i < kNumClasses; ++i) {
            out << i + 1;
            for (int j = 0; j < kNumClasses; ++j)
                out << '\t'
                    << std::llround(pct[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            out << "\n";
        }
        out << "Overall Accuracy = " << fmt("%.2f", r.matrix.overall_accuracy()) << "%\n";
        if (r.oob_error)
            out << "OOB error = " << fmt("%.2f", 100.0 * *r.oob_error) << "%\n";
        out << "train " << fmt("%.2f", r.train_seconds) << " s, eval "
            << fmt("%.2f", r.eval_seconds) << " s\n\n";
    }
    out << "--- comparison against reference accuracies ---\n";
    for (const std::string& line : cmp.lines) out << line << "\n";
    out << (cmp.passed ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    return out.str();
}

std::string render_json_report(const EvalReport& report, const ComparisonResult& cmp) {
    const ReferenceTargets targets;
    json j;
    j["dataset_seed"] = report.dataset_seed;
    j["split_seed"] = report.split_seed;
    j["train_per_class"] = report.train_per_class;
    j["test_per_class"] = report.test_per_class;
    j["reference"] = {{"knn", targets.knn}, {"svm", targets.svm}, {"forest", targets.forest}};
    j["floors"] = {{"knn", targets.knn_floor},
                   {"svm", targets.svm_floor},
                   {"forest", targets.forest_floor}};
    json classifiers = json::array();
    for (const ClassifierResult& r : report.results) {
        json c;
        c["name"] = r.name;
        c["hyperparameters"] = r.hyperparameters;
        c["overall_accuracy"] = r.matrix.overall_accuracy();
        c["per_class_accuracy"] = r.matrix.per_class_accuracy();
        c["counts"] = r.matrix.counts;
        c["row_percentages"] = r.matrix.row_percentages();
        if (r.oob_error) c["oob_error"] = *r.oob_error;
        classifiers.push_back(std::move(c));
    }
    j["classifiers"] = std::move(classifiers);
    j["comparison"] = {{"passed", cmp.passed}, {"lines", cmp.lines}};
    return j.dump(2) + "\n";
}

std::string dataset_csv_path(const std::string& out_dir) {
    return (fs::path(out_dir) / "dataset.csv").string();
}

std::string features_csv_path(const std::string& out_dir) {
    return (fs::path(out_dir) / "features.csv").string();
}

namespace {

void ensure_dir(const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
}

} // namespace

std::vector<SignalRecord> run_generate(const ExperimentConfig& config,
                                       const std::string& out_dir) {
    ensure_dir(out_dir);
    std::vector<SignalRecord> records = generate_dataset(config.dataset);
    write_dataset_csv(dataset_csv_path(out_dir), records);
    return records;
}

ExtractSummary run_extract(const std::string& dataset_path,
                           const ExperimentConfig& config, const std::string& out_dir) {
    ensure_dir(out_dir);
    const std::vector<SignalRecord> records = read_dataset_csv(dataset_path);
    ExtractOutput extracted =
        extract_dataset_features(records, config.dwt_levels, config.boundary_mode);
    write_features_csv(features_csv_path(out_dir), extracted.rows);
    return ExtractSummary{extracted.rows.size(), std::move(extracted.skipped_ids)};
}

TrainEvalSummary run_train_eval(const std::string& features_path,
                                const ExperimentConfig& config,
                                const std::string& out_dir) {
    ensure_dir(out_dir);
    const std::vector<FeatureRow> rows = read_features_csv(features_path);
    const TrainEvalResult result = train_and_evaluate(rows, config);

    if (result.knn) save_knn_model((fs::path(out_dir) / "knn_model.json").string(), *result.knn);
    if (result.svm) save_svm_model((fs::path(out_dir) / "svm_model.json").string(), *result.svm);
    if (result.forest)
        save_forest_model((fs::path(out_dir) / "forest_model.json").string(), *result.forest);

    TrainEvalSummary summary;
    summary.passed = result.comparison.passed;
    summary.report_text = render_text_report(result.report, result.comparison);

    std::ofstream txt(fs::path(out_dir) / "report.txt", std::ios::binary);
    if (!txt) throw IoError("cannot write report.txt");
    txt << summary.report_text;

    std::ofstream js(fs::path(out_dir) / "report.json", std::ios::binary);
    if (!js) throw IoError("cannot write report.json");
    js << render_json_report(result.report, result.comparison);

    return summary;
}

void run_plot(const std::string& dataset_path, std::size_t id,
              const ExperimentConfig& config, const std::string& out_dir, bool svg) {
    ensure_dir(out_dir);
    const std::vector<SignalRecord> records = read_dataset_csv(dataset_path);
    if (id >= records.size())
        throw ParameterError("no signal with id " + std::to_string(id));
    const SignalRecord& record = records[id];
    const DecompositionResult decomp =
        wavedec(record.samples, config.dwt_levels, db4_filters(), config.boundary_mode);

    const std::string stem = (fs::path(out_dir) / ("signal_" + std::to_string(id))).string();
    write_series_csv(stem + "_waveform.csv", record.samples);
    write_detail_csv(stem + "_details.csv", decomp);
    if (svg) {
        write_series_svg(stem + "_waveform.svg", record.samples);
        for (std::size_t level = 0; level < decomp.details.size(); ++level)
            write_series_svg(stem + "_detail" + std::to_string(level + 1) + ".svg",
                             decomp.details[level]);
    }
}

} // namespace pqwf
