#pragma once

#include <string>
#include <vector>

#include "pqwf/dwt.hpp"
#include "pqwf/features.hpp"
#include "pqwf/signal_gen.hpp"

namespace pqwf {

/// 17-significant-digit formatting; round-trips every finite double.
std::string format_double(double v);

/// One extracted feature row; `id` is the dataset row id the features came from.
struct FeatureRow {
    std::size_t id = 0;
    DisturbanceClass label = DisturbanceClass::Swell;
    FeatureVector features;
};

// Dataset CSV: id,class_code,class_name,seed,param_json,s0..s<N-1>.
// param_json is an RFC-4180-quoted JSON object of the SignalParams.
void write_dataset_csv(const std::string& path, const std::vector<SignalRecord>& records);
std::vector<SignalRecord> read_dataset_csv(const std::string& path);

// Feature CSV: id,class_code,entropy,std_dev,mean,skewness,kurtosis.
void write_features_csv(const std::string& path, const std::vector<FeatureRow>& rows);
std::vector<FeatureRow> read_features_csv(const std::string& path);

/// index,value rows for one series.
void write_series_csv(const std::string& path, const std::vector<double>& values);

/// level,index,value rows for every detail band of a decomposition.
void write_detail_csv(const std::string& path, const DecompositionResult& decomp);

/// Minimal polyline rendering of one series.
void write_series_svg(const std::string& path, const std::vector<double>& values);

} // namespace pqwf
