#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pqwf/classes.hpp"
#include "pqwf/rng.hpp"

namespace pqwf {

/// Parameters of one synthesized waveform. `depth` is the dimensionless
/// event magnitude of the class at hand: sag depth, swell rise,
/// interruption depth, flicker modulation amplitude, transient magnitude,
/// or spike/notch pulse magnitude. A depth of exactly 0 is the degenerate
/// pure-sine baseline and is accepted for every class.
struct SignalParams {
    double fundamental_hz = 50.0;
    double sampling_hz = 3200.0;
    double duration_s = 0.2;
    double amplitude_pu = 1.0;
    double event_start_s = 0.06;
    double event_end_s = 0.1;
    double depth = 0.0;
    std::array<double, 3> harmonic_amplitudes = {0.0, 0.0, 0.0}; // 3rd, 5th, 7th
    double transient_freq_hz = 0.0;
    double transient_decay_s = 0.0;
    double flicker_hz = 0.0;
    double pulse_width_cycles = 0.0;  // spike/notch pulse width, fraction of a cycle
    double pulse_phase_cycles = 0.0;  // pulse offset within each cycle, fraction
    std::uint64_t rng_seed = 0;

    bool operator==(const SignalParams&) const = default;
};

struct SignalRecord {
    std::vector<double> samples; // per-unit voltage on the grid t_n = n / sampling_hz
    DisturbanceClass label = DisturbanceClass::Swell;
    SignalParams params;
};

/// Uniform draw ranges for the per-class parametric models. Each class
/// reads only the entries that apply to it. Event duration is drawn as a
/// whole number of cycles and events start on cycle boundaries, so the
/// in-event segment is carrier-periodic regardless of where the event
/// sits. Some defaults are narrower than the legal ranges accepted by
/// validate_params (sag depth up to 0.9, harmonics 0.05..0.15 / 0.05..0.1
/// / 0.02..0.05): the sag draw keeps a margin to the interruption
/// category boundary and the harmonic overlay stays near its nominal
/// 10%/7.5%/3.5% mix.
struct GenerationRanges {
    std::array<double, 2> amplitude_pu = {0.97, 1.03};
    std::array<double, 2> event_cycles = {1.0, 6.0}; // whole cycles
    std::array<double, 2> sag_depth = {0.1, 0.8};
    std::array<double, 2> swell_rise = {0.1, 0.8};
    std::array<double, 2> interruption_depth = {0.9, 1.0};
    std::array<double, 2> flicker_amplitude = {0.1, 0.2};
    std::array<double, 2> flicker_hz = {5.0, 20.0};
    std::array<double, 2> harmonic_3rd = {0.09, 0.11};
    std::array<double, 2> harmonic_5th = {0.065, 0.085};
    std::array<double, 2> harmonic_7th = {0.025, 0.045};
    std::array<double, 2> transient_magnitude = {0.5, 0.9};
    std::array<double, 2> transient_decay_s = {0.008, 0.040};
    std::array<double, 2> transient_freq_hz = {300.0, 900.0};
    std::array<double, 2> pulse_magnitude = {0.1, 0.4};
    std::array<double, 2> pulse_width_cycles = {0.01, 0.05};

    bool operator==(const GenerationRanges&) const = default;
};

struct DatasetSpec {
    int signals_per_class = 700;
    std::vector<DisturbanceClass> classes = default_class_list();
    std::uint64_t master_seed = 1159;
    GenerationRanges ranges;
    double fundamental_hz = 50.0;
    double sampling_hz = 3200.0;
    double duration_s = 0.2;
    std::optional<double> noise_snr_db; // additive white noise; off by default
};

/// Validates invariants shared by all classes plus the class's legal
/// parameter ranges. Throws ParameterError on violation.
void validate_params(DisturbanceClass cls, const SignalParams& params);

/// Closed-form model value at time t (pure, deterministic).
/// Requires 0 <= t <= duration_s and params valid for the class.
double sample_waveform(DisturbanceClass cls, const SignalParams& params, double t);

/// Samples the model on t_n = n / sampling_hz, n = 0 .. round(duration*fs)-1.
SignalRecord generate_signal(DisturbanceClass cls, const SignalParams& params);

/// Draws class-legal parameters from the given stream. Draw order is fixed:
/// amplitude, event window, class magnitudes, then harmonic amplitudes.
SignalParams draw_params(DisturbanceClass cls, const DatasetSpec& spec, RngStream& rng);

/// signals_per_class records per class, in (class, index) order. The
/// per-signal stream is keyed by (master_seed, class_code, index), so the
/// dataset is a pure function of the spec.
std::vector<SignalRecord> generate_dataset(const DatasetSpec& spec);

} // namespace pqwf
