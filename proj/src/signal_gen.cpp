#include "pqwf/signal_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pqwf/errors.hpp"

namespace pqwf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_range(double v, double lo, double hi, const char* what) {
    if (!(v >= lo && v <= hi))
        throw ParameterError(std::string(what) + " = " + std::to_string(v) +
                             " outside legal range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
}

// 0 is the degenerate baseline and is legal for every magnitude.
void require_range_or_zero(double v, double lo, double hi, const char* what) {
    if (v == 0.0) return;
    require_range(v, lo, hi, what);
}

double signum(double v) {
    if (v > 0.0) return 1.0;
    if (v < 0.0) return -1.0;
    return 0.0;
}

double sample_unchecked(DisturbanceClass cls, const SignalParams& p, double t) {
    const double omega = kTwoPi * p.fundamental_hz;
    const double amp = p.amplitude_pu;
    const bool in_event = t >= p.event_start_s && t < p.event_end_s;

    double carrier = std::sin(omega * t);
    if (p.harmonic_amplitudes[0] != 0.0)
        carrier += p.harmonic_amplitudes[0] * std::sin(3.0 * omega * t);
    if (p.harmonic_amplitudes[1] != 0.0)
        carrier += p.harmonic_amplitudes[1] * std::sin(5.0 * omega * t);
    if (p.harmonic_amplitudes[2] != 0.0)
        carrier += p.harmonic_amplitudes[2] * std::sin(7.0 * omega * t);

    switch (cls) {
        case DisturbanceClass::Swell:
        case DisturbanceClass::SwellWithHarmonics:
            return amp * (1.0 + p.depth * (in_event ? 1.0 : 0.0)) * carrier;

        case DisturbanceClass::Sag:
        case DisturbanceClass::SagWithHarmonics:
        case DisturbanceClass::Interruption:
        case DisturbanceClass::InterruptionWithHarmonics:
            return amp * (1.0 - p.depth * (in_event ? 1.0 : 0.0)) * carrier;

        case DisturbanceClass::Flicker:
        case DisturbanceClass::FlickerWithHarmonics:
            return amp * (1.0 + p.depth * std::sin(kTwoPi * p.flicker_hz * t)) * carrier;

        case DisturbanceClass::OscillatoryTransient: {
            double v = amp * carrier;
            if (in_event && p.depth != 0.0) {
                const double dt = t - p.event_start_s;
                v += amp * p.depth * std::exp(-dt / p.transient_decay_s) *
                     std::sin(kTwoPi * p.transient_freq_hz * dt);
            }
            return v;
        }

        case DisturbanceClass::Spike:
        case DisturbanceClass::Notch: {
            double v = amp * carrier;
            if (in_event && p.depth != 0.0) {
                const double cycle_s = 1.0 / p.fundamental_hz;
                const double phase = std::fmod(t / cycle_s, 1.0);
                if (phase >= p.pulse_phase_cycles &&
                    phase < p.pulse_phase_cycles + p.pulse_width_cycles) {
                    const double sign = cls == DisturbanceClass::Spike ? 1.0 : -1.0;
                    v += sign * amp * p.depth * signum(std::sin(omega * t));
                }
            }
            return v;
        }
    }
    throw ParameterError("unknown disturbance class");
}

} // namespace

void validate_params(DisturbanceClass cls, const SignalParams& p) {
    if (!(p.fundamental_hz > 0.0)) throw ParameterError("fundamental_hz must be > 0");
    if (!(p.sampling_hz > 0.0)) throw ParameterError("sampling_hz must be > 0");
    if (!(p.duration_s > 0.0)) throw ParameterError("duration_s must be > 0");
    if (!(p.amplitude_pu > 0.0)) throw ParameterError("amplitude_pu must be > 0");

    const double per_cycle = p.sampling_hz / p.fundamental_hz;
    if (std::abs(per_cycle - std::round(per_cycle)) > 1e-9 || per_cycle < 2.0)
        throw ParameterError("sampling_hz / fundamental_hz must be a positive integer");

    if (!(p.event_start_s > 0.0 && p.event_start_s < p.event_end_s &&
          p.event_end_s <= p.duration_s))
        throw ParameterError("event window must satisfy 0 < start < end <= duration");

    switch (cls) {
        case DisturbanceClass::Swell:
        case DisturbanceClass::SwellWithHarmonics:
            require_range_or_zero(p.depth, 0.1, 0.8, "swell rise");
            break;
        case DisturbanceClass::Sag:
        case DisturbanceClass::SagWithHarmonics:
            require_range_or_zero(p.depth, 0.1, 0.9, "sag depth");
            break;
        case DisturbanceClass::Interruption:
        case DisturbanceClass::InterruptionWithHarmonics:
            require_range_or_zero(p.depth, 0.9, 1.0, "interruption depth");
            break;
        case DisturbanceClass::Flicker:
        case DisturbanceClass::FlickerWithHarmonics:
            require_range_or_zero(p.depth, 0.1, 0.2, "flicker amplitude");
            if (p.depth != 0.0) require_range(p.flicker_hz, 5.0, 20.0, "flicker_hz");
            break;
        case DisturbanceClass::OscillatoryTransient:
            require_range_or_zero(p.depth, 0.5, 0.9, "transient magnitude");
            if (p.depth != 0.0) {
                require_range(p.transient_decay_s, 0.008, 0.040, "transient_decay_s");
                require_range(p.transient_freq_hz, 300.0, 900.0, "transient_freq_hz");
            }
            break;
        case DisturbanceClass::Spike:
        case DisturbanceClass::Notch:
            require_range_or_zero(p.depth, 0.1, 0.4, "pulse magnitude");
            if (p.depth != 0.0) {
                require_range(p.pulse_width_cycles, 0.01, 0.05, "pulse_width_cycles");
                if (!(p.pulse_phase_cycles >= 0.0 && p.pulse_phase_cycles < 1.0))
                    throw ParameterError("pulse_phase_cycles must be in [0, 1)");
            }
            break;
    }

    const bool harmonic_cls = has_harmonics(cls);
    const char* names[3] = {"harmonic_3rd", "harmonic_5th", "harmonic_7th"};
    const double lo[3] = {0.05, 0.05, 0.02};
    const double hi[3] = {0.15, 0.1, 0.05};
    for (int i = 0; i < 3; ++i) {
        if (harmonic_cls) {
            require_range_or_zero(p.harmonic_amplitudes[static_cast<std::size_t>(i)],
                                  lo[i], hi[i], names[i]);
        } else if (p.harmonic_amplitudes[static_cast<std::size_t>(i)] != 0.0) {
            throw ParameterError(std::string(names[i]) +
                                 " must be 0 for a class without harmonics");
        }
    }
}

double sample_waveform(DisturbanceClass cls, const SignalParams& params, double t) {
    validate_params(cls, params);
    if (!(t >= 0.0 && t <= params.duration_s))
        throw ParameterError("t = " + std::to_string(t) + " outside [0, duration]");
    return sample_unchecked(cls, params, t);
}

SignalRecord generate_signal(DisturbanceClass cls, const SignalParams& params) {
    validate_params(cls, params);
    const auto n = static_cast<std::size_t>(
        std::llround(params.duration_s * params.sampling_hz));
    SignalRecord record;
    record.label = cls;
    record.params = params;
    record.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / params.sampling_hz;
        record.samples[i] = sample_unchecked(cls, params, t);
    }
    return record;
}

SignalParams draw_params(DisturbanceClass cls, const DatasetSpec& spec, RngStream& rng) {
    const GenerationRanges& r = spec.ranges;
    SignalParams p;
    p.fundamental_hz = spec.fundamental_hz;
    p.sampling_hz = spec.sampling_hz;
    p.duration_s = spec.duration_s;

    p.amplitude_pu = rng.uniform(r.amplitude_pu[0], r.amplitude_pu[1]);

    // Event window: a whole number of cycles starting on a cycle boundary,
    // placed with >= 1 cycle margin on each side so boundary effects stay
    // away from the record edges.
    const double cycle_s = 1.0 / spec.fundamental_hz;
    const auto total_cycles = static_cast<long>(std::floor(spec.duration_s / cycle_s + 1e-9));
    const auto lo_cycles = static_cast<long>(std::ceil(r.event_cycles[0] - 1e-9));
    const auto hi_cycles = std::min(static_cast<long>(std::floor(r.event_cycles[1] + 1e-9)),
                                    total_cycles - 2);
    if (hi_cycles < lo_cycles || lo_cycles < 1)
        throw ParameterError("duration too short for the event-cycle range");
    const long event_cycles =
        lo_cycles + static_cast<long>(rng.uniform_index(
                        static_cast<std::uint64_t>(hi_cycles - lo_cycles + 1)));
    const long start_slots = total_cycles - event_cycles - 1; // slots 1 .. total-len-1
    const long start_cycle =
        1 + static_cast<long>(rng.uniform_index(static_cast<std::uint64_t>(start_slots)));
    p.event_start_s = static_cast<double>(start_cycle) * cycle_s;
    p.event_end_s = static_cast<double>(start_cycle + event_cycles) * cycle_s;

    switch (cls) {
        case DisturbanceClass::Swell:
        case DisturbanceClass::SwellWithHarmonics:
            p.depth = rng.uniform(r.swell_rise[0], r.swell_rise[1]);
            break;
        case DisturbanceClass::Sag:
        case DisturbanceClass::SagWithHarmonics:
            p.depth = rng.uniform(r.sag_depth[0], r.sag_depth[1]);
            break;
        case DisturbanceClass::Interruption:
        case DisturbanceClass::InterruptionWithHarmonics:
            p.depth = rng.uniform(r.interruption_depth[0], r.interruption_depth[1]);
            break;
        case DisturbanceClass::Flicker:
        case DisturbanceClass::FlickerWithHarmonics:
            p.depth = rng.uniform(r.flicker_amplitude[0], r.flicker_amplitude[1]);
            p.flicker_hz = rng.uniform(r.flicker_hz[0], r.flicker_hz[1]);
            break;
        case DisturbanceClass::OscillatoryTransient:
            p.depth = rng.uniform(r.transient_magnitude[0], r.transient_magnitude[1]);
            p.transient_decay_s = rng.uniform(r.transient_decay_s[0], r.transient_decay_s[1]);
            p.transient_freq_hz = rng.uniform(r.transient_freq_hz[0], r.transient_freq_hz[1]);
            break;
        case DisturbanceClass::Spike:
        case DisturbanceClass::Notch:
            p.depth = rng.uniform(r.pulse_magnitude[0], r.pulse_magnitude[1]);
            p.pulse_width_cycles = rng.uniform(r.pulse_width_cycles[0], r.pulse_width_cycles[1]);
            // fixed phase offset: pulse centered on the positive peak, well
            // inside the half-cycle, so it stays sign-aligned with the
            // fundamental
            p.pulse_phase_cycles = 0.25 - p.pulse_width_cycles / 2.0;
            break;
    }

    if (has_harmonics(cls)) {
        p.harmonic_amplitudes[0] = rng.uniform(r.harmonic_3rd[0], r.harmonic_3rd[1]);
        p.harmonic_amplitudes[1] = rng.uniform(r.harmonic_5th[0], r.harmonic_5th[1]);
        p.harmonic_amplitudes[2] = rng.uniform(r.harmonic_7th[0], r.harmonic_7th[1]);
    }
    return p;
}

std::vector<SignalRecord> generate_dataset(const DatasetSpec& spec) {
    if (spec.classes.empty()) throw ParameterError("generate_dataset: empty class list");
    if (spec.signals_per_class <= 0)
        throw ParameterError("generate_dataset: signals_per_class must be > 0");

    std::vector<SignalRecord> records;
    records.reserve(spec.classes.size() * static_cast<std::size_t>(spec.signals_per_class));
    for (DisturbanceClass cls : spec.classes) {
        for (int i = 0; i < spec.signals_per_class; ++i) {
            RngStream rng = RngStream::derive(
                spec.master_seed, static_cast<std::uint64_t>(class_code(cls)),
                static_cast<std::uint64_t>(i));
            SignalParams params = draw_params(cls, spec, rng);
            params.rng_seed = spec.master_seed;
            SignalRecord record = generate_signal(cls, params);
            if (spec.noise_snr_db) {
                double power = 0.0;
                for (double v : record.samples) power += v * v;
                power /= static_cast<double>(record.samples.size());
                const double sigma =
                    std::sqrt(power / std::pow(10.0, *spec.noise_snr_db / 10.0));
                for (double& v : record.samples) v += sigma * rng.normal();
            }
            records.push_back(std::move(record));
        }
    }
    return records;
}

} // namespace pqwf
