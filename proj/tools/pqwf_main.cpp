#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pqwf/errors.hpp"
#include "pqwf/pipeline.hpp"

namespace {

// Exit codes: 0 success/pass, 1 accuracy floors missed, 2 I/O,
// 3 parse/config, 4 infeasible split, 5 missing signal id.
enum ExitCode {
    kOk = 0,
    kFloorFailure = 1,
    kIoError = 2,
    kParseError = 3,
    kInfeasibleSplit = 4,
    kMissingId = 5,
};

struct Options {
    std::string config_path;
    std::string out_dir;
    std::string dataset_path;
    std::string features_path;
    std::size_t plot_id = 0;
    bool svg = false;
};

pqwf::ExperimentConfig load(const Options& opt) {
    pqwf::ExperimentConfig config =
        opt.config_path.empty() ? pqwf::default_config() : pqwf::load_config(opt.config_path);
    if (!opt.out_dir.empty()) config.output_dir = opt.out_dir;
    return config;
}

int do_generate(const pqwf::ExperimentConfig& config) {
    const auto records = pqwf::run_generate(config, config.output_dir);
    std::cout << "wrote " << records.size() << " signals to "
              << pqwf::dataset_csv_path(config.output_dir) << " (seed "
              << config.dataset.master_seed << ")\n";
    return kOk;
}

int do_extract(const pqwf::ExperimentConfig& config, const Options& opt) {
    const std::string dataset = opt.dataset_path.empty()
                                    ? pqwf::dataset_csv_path(config.output_dir)
                                    : opt.dataset_path;
    const auto summary = pqwf::run_extract(dataset, config, config.output_dir);
    for (std::size_t id : summary.skipped_ids)
        std::cerr << "warning: signal " << id << " skipped (degenerate level-3 band)\n";
    std::cout << "wrote " << summary.rows_written << " feature rows to "
              << pqwf::features_csv_path(config.output_dir) << " ("
              << summary.skipped_ids.size() << " warnings)\n";
    return kOk;
}

int do_train_eval(const pqwf::ExperimentConfig& config, const Options& opt) {
    const std::string features = opt.features_path.empty()
                                     ? pqwf::features_csv_path(config.output_dir)
                                     : opt.features_path;
    try {
        const auto summary = pqwf::run_train_eval(features, config, config.output_dir);
        std::cout << summary.report_text;
        return summary.passed ? kOk : kFloorFailure;
    } catch (const pqwf::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasibleSplit;
    }
}

int do_plot(const pqwf::ExperimentConfig& config, const Options& opt) {
    const std::string dataset = opt.dataset_path.empty()
                                    ? pqwf::dataset_csv_path(config.output_dir)
                                    : opt.dataset_path;
    try {
        pqwf::run_plot(dataset, opt.plot_id, config, config.output_dir, opt.svg);
    } catch (const pqwf::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMissingId;
    }
    std::cout << "wrote waveform and detail series for signal " << opt.plot_id << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesize IEEE-1159-style disturbance waveforms, extract wavelet "
                 "features and train/evaluate KNN, SVM and random forest classifiers"};
    app.require_subcommand(0, 1);

    bool print_default_config = false;
    app.add_flag("--print-default-config", print_default_config,
                 "Print the default config as JSON and exit");

    Options opt;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "Path to a JSON config file");
        cmd->add_option("--out", opt.out_dir, "Output directory (overrides the config)");
    };

    CLI::App* generate = app.add_subcommand("generate", "Synthesize the labeled dataset CSV");
    add_common(generate);

    CLI::App* extract = app.add_subcommand(
        "extract", "Decompose each signal and write the feature CSV");
    add_common(extract);
    extract->add_option("--dataset", opt.dataset_path, "Dataset CSV (default <out>/dataset.csv)");

    CLI::App* train_eval = app.add_subcommand(
        "train-eval", "Train the classifiers, evaluate and write models + reports");
    add_common(train_eval);
    train_eval->add_option("--features", opt.features_path,
                           "Feature CSV (default <out>/features.csv)");

    CLI::App* plot = app.add_subcommand(
        "plot", "Export waveform and per-level detail coefficients for one signal");
    add_common(plot);
    plot->add_option("--dataset", opt.dataset_path, "Dataset CSV (default <out>/dataset.csv)");
    plot->add_option("--id", opt.plot_id, "Signal id (row index)")->required();
    plot->add_flag("--svg", opt.svg, "Also write SVG renderings");

    CLI::App* run = app.add_subcommand("run", "generate, extract and train-eval in sequence");
    add_common(run);

    CLI11_PARSE(app, argc, argv);

    try {
        if (print_default_config) {
            std::cout << pqwf::config_to_json_text(pqwf::default_config());
            return kOk;
        }
        if (app.get_subcommands().empty()) {
            std::cout << app.help();
            return kOk;
        }
        const pqwf::ExperimentConfig config = load(opt);
        if (generate->parsed()) return do_generate(config);
        if (extract->parsed()) return do_extract(config, opt);
        if (train_eval->parsed()) return do_train_eval(config, opt);
        if (plot->parsed()) return do_plot(config, opt);
        if (run->parsed()) {
            int rc = do_generate(config);
            if (rc != kOk) return rc;
            rc = do_extract(config, opt);
            if (rc != kOk) return rc;
            return do_train_eval(config, opt);
        }
    } catch (const pqwf::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const pqwf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const pqwf::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}
