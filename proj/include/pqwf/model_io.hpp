#pragma once

#include <string>

#include "pqwf/forest.hpp"
#include "pqwf/knn.hpp"
#include "pqwf/svm.hpp"

namespace pqwf {

// JSON round-trips for the trained models. Each file records the
// hyperparameters and (where applicable) the standardization and seed,
// so a saved model predicts identically after reload.

void save_knn_model(const std::string& path, const KnnModel& model);
KnnModel load_knn_model(const std::string& path);

void save_svm_model(const std::string& path, const SvmModel& model);
SvmModel load_svm_model(const std::string& path);

void save_forest_model(const std::string& path, const RandomForestModel& model);
RandomForestModel load_forest_model(const std::string& path);

} // namespace pqwf
