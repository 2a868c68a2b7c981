#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqwf/dwt.hpp"
#include "pqwf/signal_gen.hpp"

namespace pqwf {

/// Everything one experiment run needs; all randomness flows from the
/// seeds recorded here, none from the clock or the OS.
struct ExperimentConfig {
    DatasetSpec dataset;

    int dwt_levels = 3;
    BoundaryMode boundary_mode = BoundaryMode::Periodic;

    std::vector<std::string> classifiers = {"knn", "svm", "forest"};
    int knn_k = 1;
    // validation-grid choice over {0.1,1,10,100} x {0.05,0.2,1,5}
    double svm_c = 100.0;
    double svm_gamma = 1.0;
    double svm_kkt_tolerance = 1e-3;
    int svm_max_passes = 10000;
    int rf_trees = 100;
    int rf_max_features = 2; // ~sqrt(5)
    std::uint64_t rf_seed = 7;

    std::size_t train_per_class = 600;
    std::size_t test_per_class = 100;
    std::uint64_t split_seed = 42;

    std::string output_dir = "out";
};

ExperimentConfig default_config();

/// Parses a JSON config; unknown keys are rejected so typos fail loudly.
ExperimentConfig load_config(const std::string& path);

std::string config_to_json_text(const ExperimentConfig& config);

void save_config(const std::string& path, const ExperimentConfig& config);

} // namespace pqwf
