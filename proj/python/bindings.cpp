#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqwf/config.hpp"
#include "pqwf/eval.hpp"
#include "pqwf/forest.hpp"
#include "pqwf/knn.hpp"
#include "pqwf/pipeline.hpp"
#include "pqwf/svm.hpp"

namespace py = pybind11;
using namespace pqwf;

PYBIND11_MODULE(_pqwf, m) {
    m.doc() = "Power-quality disturbance synthesis, db4 wavelet features and "
              "KNN/SVM/random-forest classification";

    py::enum_<DisturbanceClass>(m, "DisturbanceClass")
        .value("SwellWithHarmonics", DisturbanceClass::SwellWithHarmonics)
        .value("Swell", DisturbanceClass::Swell)
        .value("Spike", DisturbanceClass::Spike)
        .value("SagWithHarmonics", DisturbanceClass::SagWithHarmonics)
        .value("Sag", DisturbanceClass::Sag)
        .value("OscillatoryTransient", DisturbanceClass::OscillatoryTransient)
        .value("Notch", DisturbanceClass::Notch)
        .value("InterruptionWithHarmonics", DisturbanceClass::InterruptionWithHarmonics)
        .value("Interruption", DisturbanceClass::Interruption)
        .value("FlickerWithHarmonics", DisturbanceClass::FlickerWithHarmonics)
        .value("Flicker", DisturbanceClass::Flicker);

    m.def("class_code", &class_code);
    m.def("class_from_code", &class_from_code);
    m.def("class_name", [](DisturbanceClass c) { return std::string(class_name(c)); });

    py::class_<SignalParams>(m, "SignalParams")
        .def(py::init<>())
        .def_readwrite("fundamental_hz", &SignalParams::fundamental_hz)
        .def_readwrite("sampling_hz", &SignalParams::sampling_hz)
        .def_readwrite("duration_s", &SignalParams::duration_s)
        .def_readwrite("amplitude_pu", &SignalParams::amplitude_pu)
        .def_readwrite("event_start_s", &SignalParams::event_start_s)
        .def_readwrite("event_end_s", &SignalParams::event_end_s)
        .def_readwrite("depth", &SignalParams::depth)
        .def_readwrite("harmonic_amplitudes", &SignalParams::harmonic_amplitudes)
        .def_readwrite("transient_freq_hz", &SignalParams::transient_freq_hz)
        .def_readwrite("transient_decay_s", &SignalParams::transient_decay_s)
        .def_readwrite("flicker_hz", &SignalParams::flicker_hz)
        .def_readwrite("pulse_width_cycles", &SignalParams::pulse_width_cycles)
        .def_readwrite("pulse_phase_cycles", &SignalParams::pulse_phase_cycles)
        .def_readwrite("rng_seed", &SignalParams::rng_seed);

    py::class_<SignalRecord>(m, "SignalRecord")
        .def_readonly("samples", &SignalRecord::samples)
        .def_readonly("label", &SignalRecord::label)
        .def_readonly("params", &SignalRecord::params);

    py::class_<GenerationRanges>(m, "GenerationRanges")
        .def(py::init<>())
        .def_readwrite("amplitude_pu", &GenerationRanges::amplitude_pu)
        .def_readwrite("event_cycles", &GenerationRanges::event_cycles)
        .def_readwrite("sag_depth", &GenerationRanges::sag_depth)
        .def_readwrite("swell_rise", &GenerationRanges::swell_rise)
        .def_readwrite("interruption_depth", &GenerationRanges::interruption_depth)
        .def_readwrite("flicker_amplitude", &GenerationRanges::flicker_amplitude)
        .def_readwrite("flicker_hz", &GenerationRanges::flicker_hz)
        .def_readwrite("harmonic_3rd", &GenerationRanges::harmonic_3rd)
        .def_readwrite("harmonic_5th", &GenerationRanges::harmonic_5th)
        .def_readwrite("harmonic_7th", &GenerationRanges::harmonic_7th)
        .def_readwrite("transient_magnitude", &GenerationRanges::transient_magnitude)
        .def_readwrite("transient_decay_s", &GenerationRanges::transient_decay_s)
        .def_readwrite("transient_freq_hz", &GenerationRanges::transient_freq_hz)
        .def_readwrite("pulse_magnitude", &GenerationRanges::pulse_magnitude)
        .def_readwrite("pulse_width_cycles", &GenerationRanges::pulse_width_cycles);

    py::class_<DatasetSpec>(m, "DatasetSpec")
        .def(py::init<>())
        .def_readwrite("signals_per_class", &DatasetSpec::signals_per_class)
        .def_readwrite("classes", &DatasetSpec::classes)
        .def_readwrite("master_seed", &DatasetSpec::master_seed)
        .def_readwrite("ranges", &DatasetSpec::ranges)
        .def_readwrite("fundamental_hz", &DatasetSpec::fundamental_hz)
        .def_readwrite("sampling_hz", &DatasetSpec::sampling_hz)
        .def_readwrite("duration_s", &DatasetSpec::duration_s)
        .def_readwrite("noise_snr_db", &DatasetSpec::noise_snr_db);

    m.def("sample_waveform", &sample_waveform, py::arg("cls"), py::arg("params"),
          py::arg("t"));
    m.def("generate_signal", &generate_signal, py::arg("cls"), py::arg("params"));
    m.def("generate_dataset", &generate_dataset, py::arg("spec"));

    py::enum_<BoundaryMode>(m, "BoundaryMode").value("Periodic", BoundaryMode::Periodic);

    py::class_<WaveletFilterPair>(m, "WaveletFilterPair")
        .def_readonly("lowpass", &WaveletFilterPair::lowpass)
        .def_readonly("highpass", &WaveletFilterPair::highpass);

    py::class_<DecompositionResult>(m, "DecompositionResult")
        .def_readonly("approx", &DecompositionResult::approx)
        .def_readonly("details", &DecompositionResult::details)
        .def_readonly("levels", &DecompositionResult::levels);

    m.def("db4_filters", &db4_filters);
    m.def(
        "dwt_level",
        [](const std::vector<double>& x, BoundaryMode mode) {
            return dwt_level(x, db4_filters(), mode);
        },
        py::arg("signal"), py::arg("mode") = BoundaryMode::Periodic);
    m.def(
        "wavedec",
        [](const std::vector<double>& x, int levels, BoundaryMode mode) {
            return wavedec(x, levels, db4_filters(), mode);
        },
        py::arg("signal"), py::arg("levels") = 3,
        py::arg("mode") = BoundaryMode::Periodic);
    m.def(
        "waverec",
        [](const DecompositionResult& d) { return waverec(d, db4_filters()); },
        py::arg("decomposition"));

    py::class_<FeatureVector>(m, "FeatureVector")
        .def(py::init<>())
        .def_readwrite("entropy", &FeatureVector::entropy)
        .def_readwrite("std_dev", &FeatureVector::std_dev)
        .def_readwrite("mean", &FeatureVector::mean)
        .def_readwrite("skewness", &FeatureVector::skewness)
        .def_readwrite("kurtosis", &FeatureVector::kurtosis)
        .def_readwrite("label", &FeatureVector::label)
        .def("as_array", &FeatureVector::as_array);

    m.def("mean", [](const std::vector<double>& x) { return mean(x); });
    m.def("std_dev", [](const std::vector<double>& x) { return std_dev(x); });
    m.def("kurtosis", [](const std::vector<double>& x) { return kurtosis(x); });
    m.def("skewness", [](const std::vector<double>& x) { return skewness(x); });
    m.def("entropy", [](const std::vector<double>& x) { return entropy(x); });
    m.def("extract_features", &extract_features, py::arg("decomposition"),
          py::arg("label") = std::nullopt);

    py::class_<LabeledDataset>(m, "LabeledDataset")
        .def(py::init<>())
        .def_readwrite("x", &LabeledDataset::x)
        .def_readwrite("y", &LabeledDataset::y)
        .def("add_row",
             [](LabeledDataset& d, const FeatureArray& x, DisturbanceClass y) {
                 d.x.push_back(x);
                 d.y.push_back(y);
             })
        .def("__len__", &LabeledDataset::size);

    py::class_<KnnModel>(m, "KnnModel").def_readonly("k", &KnnModel::k);
    m.def("knn_train", &knn_train, py::arg("train"), py::arg("k") = 1);
    m.def("knn_predict", &knn_predict, py::arg("model"), py::arg("query"));

    py::class_<SvmModel>(m, "SvmModel")
        .def_readonly("penalty_c", &SvmModel::penalty_c)
        .def_readonly("gamma", &SvmModel::gamma);
    m.def("svm_train", &svm_train, py::arg("train"), py::arg("penalty_c") = 10.0,
          py::arg("gamma") = 0.2, py::arg("kkt_tolerance") = 1e-3,
          py::arg("max_passes") = 10000);
    m.def("svm_predict", &svm_predict, py::arg("model"), py::arg("query"));

    py::class_<RandomForestModel>(m, "RandomForestModel")
        .def_readonly("n_trees", &RandomForestModel::n_trees)
        .def_readonly("seed", &RandomForestModel::seed);
    m.def("rf_train", &rf_train, py::arg("train"), py::arg("n_trees") = 100,
          py::arg("max_features") = 2, py::arg("seed") = 0,
          py::arg("bootstrap") = true);
    m.def("rf_predict", &rf_predict, py::arg("model"), py::arg("query"));
    m.def("rf_oob_error", [](const RandomForestModel& model, const LabeledDataset& train) {
        const OobResult r = rf_oob_error(model, train);
        return py::make_tuple(r.error, r.evaluated, r.skipped);
    });

    py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
        .def_readonly("counts", &ConfusionMatrix::counts)
        .def("overall_accuracy", &ConfusionMatrix::overall_accuracy)
        .def("row_percentages", &ConfusionMatrix::row_percentages)
        .def("per_class_accuracy", &ConfusionMatrix::per_class_accuracy);

    py::class_<SplitResult>(m, "SplitResult")
        .def_readonly("train", &SplitResult::train)
        .def_readonly("test", &SplitResult::test)
        .def_readonly("train_indices", &SplitResult::train_indices)
        .def_readonly("test_indices", &SplitResult::test_indices);
    m.def("split_dataset", &split_dataset, py::arg("rows"), py::arg("train_per_class"),
          py::arg("test_per_class"), py::arg("seed"));

    m.def("extract_dataset_features",
          [](const std::vector<SignalRecord>& records, int levels) {
              ExtractOutput out =
                  extract_dataset_features(records, levels, BoundaryMode::Periodic);
              return py::make_tuple(out.rows, out.skipped_ids);
          },
          py::arg("records"), py::arg("levels") = 3);

    py::class_<FeatureRow>(m, "FeatureRow")
        .def_readonly("id", &FeatureRow::id)
        .def_readonly("label", &FeatureRow::label)
        .def_readonly("features", &FeatureRow::features);

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                                 PyExc_ValueError);
}
