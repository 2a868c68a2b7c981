#include "pqwf/config.hpp"

#include <fstream>
#include <set>

#include "pqwf/errors.hpp"
#include "pqwf/json_io.hpp"

namespace pqwf {

using nlohmann::json;

void to_json(json& j, const SignalParams& p) {
    j = json{{"fundamental_hz", p.fundamental_hz},
             {"sampling_hz", p.sampling_hz},
             {"duration_s", p.duration_s},
             {"amplitude_pu", p.amplitude_pu},
             {"event_start_s", p.event_start_s},
             {"event_end_s", p.event_end_s},
             {"depth", p.depth},
             {"harmonic_amplitudes", p.harmonic_amplitudes},
             {"transient_freq_hz", p.transient_freq_hz},
             {"transient_decay_s", p.transient_decay_s},
             {"flicker_hz", p.flicker_hz},
             {"pulse_width_cycles", p.pulse_width_cycles},
             {"pulse_phase_cycles", p.pulse_phase_cycles},
             {"rng_seed", p.rng_seed}};
}

void from_json(const json& j, SignalParams& p) {
    j.at("fundamental_hz").get_to(p.fundamental_hz);
    j.at("sampling_hz").get_to(p.sampling_hz);
    j.at("duration_s").get_to(p.duration_s);
    j.at("amplitude_pu").get_to(p.amplitude_pu);
    j.at("event_start_s").get_to(p.event_start_s);
    j.at("event_end_s").get_to(p.event_end_s);
    j.at("depth").get_to(p.depth);
    j.at("harmonic_amplitudes").get_to(p.harmonic_amplitudes);
    j.at("transient_freq_hz").get_to(p.transient_freq_hz);
    j.at("transient_decay_s").get_to(p.transient_decay_s);
    j.at("flicker_hz").get_to(p.flicker_hz);
    j.at("pulse_width_cycles").get_to(p.pulse_width_cycles);
    j.at("pulse_phase_cycles").get_to(p.pulse_phase_cycles);
    j.at("rng_seed").get_to(p.rng_seed);
}

void to_json(json& j, const GenerationRanges& r) {
    j = json{{"amplitude_pu", r.amplitude_pu},
             {"event_cycles", r.event_cycles},
             {"sag_depth", r.sag_depth},
             {"swell_rise", r.swell_rise},
             {"interruption_depth", r.interruption_depth},
             {"flicker_amplitude", r.flicker_amplitude},
             {"flicker_hz", r.flicker_hz},
             {"harmonic_3rd", r.harmonic_3rd},
             {"harmonic_5th", r.harmonic_5th},
             {"harmonic_7th", r.harmonic_7th},
             {"transient_magnitude", r.transient_magnitude},
             {"transient_decay_s", r.transient_decay_s},
             {"transient_freq_hz", r.transient_freq_hz},
             {"pulse_magnitude", r.pulse_magnitude},
             {"pulse_width_cycles", r.pulse_width_cycles}};
}

void from_json(const json& j, GenerationRanges& r) {
    GenerationRanges defaults;
    r = defaults;
    if (j.contains("amplitude_pu")) j.at("amplitude_pu").get_to(r.amplitude_pu);
    if (j.contains("event_cycles")) j.at("event_cycles").get_to(r.event_cycles);
    if (j.contains("sag_depth")) j.at("sag_depth").get_to(r.sag_depth);
    if (j.contains("swell_rise")) j.at("swell_rise").get_to(r.swell_rise);
    if (j.contains("interruption_depth"))
        j.at("interruption_depth").get_to(r.interruption_depth);
    if (j.contains("flicker_amplitude"))
        j.at("flicker_amplitude").get_to(r.flicker_amplitude);
    if (j.contains("flicker_hz")) j.at("flicker_hz").get_to(r.flicker_hz);
    if (j.contains("harmonic_3rd")) j.at("harmonic_3rd").get_to(r.harmonic_3rd);
    if (j.contains("harmonic_5th")) j.at("harmonic_5th").get_to(r.harmonic_5th);
    if (j.contains("harmonic_7th")) j.at("harmonic_7th").get_to(r.harmonic_7th);
    if (j.contains("transient_magnitude"))
        j.at("transient_magnitude").get_to(r.transient_magnitude);
    if (j.contains("transient_decay_s"))
        j.at("transient_decay_s").get_to(r.transient_decay_s);
    if (j.contains("transient_freq_hz"))
        j.at("transient_freq_hz").get_to(r.transient_freq_hz);
    if (j.contains("pulse_magnitude")) j.at("pulse_magnitude").get_to(r.pulse_magnitude);
    if (j.contains("pulse_width_cycles"))
        j.at("pulse_width_cycles").get_to(r.pulse_width_cycles);
}

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& item : j.items())
        if (!known.contains(item.key()))
            throw ParseError("unknown config key '" + item.key() + "' in " + where);
}

json dataset_to_json(const DatasetSpec& d) {
    json j{{"signals_per_class", d.signals_per_class},
           {"master_seed", d.master_seed},
           {"fundamental_hz", d.fundamental_hz},
           {"sampling_hz", d.sampling_hz},
           {"duration_s", d.duration_s},
           {"ranges", d.ranges}};
    json classes = json::array();
    for (DisturbanceClass c : d.classes) classes.push_back(class_code(c));
    j["classes"] = classes;
    if (d.noise_snr_db) j["noise_snr_db"] = *d.noise_snr_db;
    else j["noise_snr_db"] = nullptr;
    return j;
}

DatasetSpec dataset_from_json(const json& j) {
    reject_unknown_keys(j,
                        {"signals_per_class", "master_seed", "fundamental_hz",
                         "sampling_hz", "duration_s", "ranges", "classes",
                         "noise_snr_db"},
                        "dataset");
    DatasetSpec d;
    if (j.contains("signals_per_class"))
        j.at("signals_per_class").get_to(d.signals_per_class);
    if (j.contains("master_seed")) j.at("master_seed").get_to(d.master_seed);
    if (j.contains("fundamental_hz")) j.at("fundamental_hz").get_to(d.fundamental_hz);
    if (j.contains("sampling_hz")) j.at("sampling_hz").get_to(d.sampling_hz);
    if (j.contains("duration_s")) j.at("duration_s").get_to(d.duration_s);
    if (j.contains("ranges")) j.at("ranges").get_to(d.ranges);
    if (j.contains("classes")) {
        d.classes.clear();
        for (const auto& code : j.at("classes"))
            d.classes.push_back(class_from_code(code.get<int>()));
    }
    if (j.contains("noise_snr_db") && !j.at("noise_snr_db").is_null())
        d.noise_snr_db = j.at("noise_snr_db").get<double>();
    return d;
}

} // namespace

ExperimentConfig default_config() { return ExperimentConfig{}; }

std::string config_to_json_text(const ExperimentConfig& c) {
    json j;
    j["dataset"] = dataset_to_json(c.dataset);
    j["dwt"] = {{"levels", c.dwt_levels},
                {"boundary_mode", std::string(boundary_mode_name(c.boundary_mode))}};
    j["classifiers"] = {
        {"enabled", c.classifiers},
        {"knn", {{"k", c.knn_k}}},
        {"svm",
         {{"c", c.svm_c},
          {"gamma", c.svm_gamma},
          {"kkt_tolerance", c.svm_kkt_tolerance},
          {"max_passes", c.svm_max_passes}}},
        {"forest",
         {{"trees", c.rf_trees}, {"max_features", c.rf_max_features}, {"seed", c.rf_seed}}}};
    j["split"] = {{"train_per_class", c.train_per_class},
                  {"test_per_class", c.test_per_class},
                  {"seed", c.split_seed}};
    j["output_dir"] = c.output_dir;
    return j.dump(2) + "\n";
}

namespace {

ExperimentConfig config_from_json(const json& j) {
    reject_unknown_keys(j, {"dataset", "dwt", "classifiers", "split", "output_dir"},
                        "config");
    ExperimentConfig c;
    if (j.contains("dataset")) c.dataset = dataset_from_json(j.at("dataset"));
    if (j.contains("dwt")) {
        const json& d = j.at("dwt");
        reject_unknown_keys(d, {"levels", "boundary_mode"}, "dwt");
        if (d.contains("levels")) d.at("levels").get_to(c.dwt_levels);
        if (d.contains("boundary_mode"))
            c.boundary_mode = boundary_mode_from_name(d.at("boundary_mode").get<std::string>());
    }
    if (j.contains("classifiers")) {
        const json& cl = j.at("classifiers");
        reject_unknown_keys(cl, {"enabled", "knn", "svm", "forest"}, "classifiers");
        if (cl.contains("enabled")) cl.at("enabled").get_to(c.classifiers);
        for (const std::string& name : c.classifiers)
            if (name != "knn" && name != "svm" && name != "forest")
                throw ParseError("unknown classifier '" + name + "'");
        if (cl.contains("knn")) {
            reject_unknown_keys(cl.at("knn"), {"k"}, "knn");
            if (cl.at("knn").contains("k")) cl.at("knn").at("k").get_to(c.knn_k);
        }
        if (cl.contains("svm")) {
            const json& s = cl.at("svm");
            reject_unknown_keys(s, {"c", "gamma", "kkt_tolerance", "max_passes"}, "svm");
            if (s.contains("c")) s.at("c").get_to(c.svm_c);
            if (s.contains("gamma")) s.at("gamma").get_to(c.svm_gamma);
            if (s.contains("kkt_tolerance")) s.at("kkt_tolerance").get_to(c.svm_kkt_tolerance);
            if (s.contains("max_passes")) s.at("max_passes").get_to(c.svm_max_passes);
        }
        if (cl.contains("forest")) {
            const json& f = cl.at("forest");
            reject_unknown_keys(f, {"trees", "max_features", "seed"}, "forest");
            if (f.contains("trees")) f.at("trees").get_to(c.rf_trees);
            if (f.contains("max_features")) f.at("max_features").get_to(c.rf_max_features);
            if (f.contains("seed")) f.at("seed").get_to(c.rf_seed);
        }
    }
    if (j.contains("split")) {
        const json& s = j.at("split");
        reject_unknown_keys(s, {"train_per_class", "test_per_class", "seed"}, "split");
        if (s.contains("train_per_class")) s.at("train_per_class").get_to(c.train_per_class);
        if (s.contains("test_per_class")) s.at("test_per_class").get_to(c.test_per_class);
        if (s.contains("seed")) s.at("seed").get_to(c.split_seed);
    }
    if (j.contains("output_dir")) j.at("output_dir").get_to(c.output_dir);
    return c;
}

} // namespace

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad config value: ") + e.what());
    }
}

void save_config(const std::string& path, const ExperimentConfig& config) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << config_to_json_text(config);
    if (!out) throw IoError("write failed: " + path);
}

} // namespace pqwf
