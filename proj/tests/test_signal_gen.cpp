#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pqwf/errors.hpp"
#include "pqwf/signal_gen.hpp"

using namespace pqwf;

namespace {

SignalParams event_params(double depth, double start = 0.02, double end = 0.04) {
    SignalParams p;
    p.depth = depth;
    p.event_start_s = start;
    p.event_end_s = end;
    return p;
}

// direct Fourier sum at one harmonic bin of a window, |X_k|
double dft_mag(const std::vector<double>& x, std::size_t begin, std::size_t len, int bin) {
    std::complex<double> sum = 0.0;
    for (std::size_t n = 0; n < len; ++n) {
        const double angle = -2.0 * std::numbers::pi * bin * static_cast<double>(n) /
                             static_cast<double>(len);
        sum += x[begin + n] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return std::abs(sum);
}

} // namespace

TEST_CASE("pure-sine baseline evaluates to zero at t = 0") {
    for (DisturbanceClass cls : all_classes()) {
        const SignalParams p = event_params(0.0);
        CHECK(sample_waveform(cls, p, 0.0) == 0.0);
    }
}

TEST_CASE("sag at a fundamental peak inside the event") {
    // t = 0.025 s sits at sin(2*pi*50*t) = 1 inside the [0.02, 0.04) window
    const double v = sample_waveform(DisturbanceClass::Sag, event_params(0.5), 0.025);
    CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("full interruption suppresses the waveform") {
    const double v = sample_waveform(DisturbanceClass::Interruption, event_params(1.0), 0.03);
    CHECK(v == 0.0);
}

TEST_CASE("swell at a fundamental peak inside the event") {
    const double v = sample_waveform(DisturbanceClass::Swell, event_params(0.4), 0.025);
    CHECK(v == doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("sample_waveform rejects out-of-range t and bad params") {
    const SignalParams p = event_params(0.5);
    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Sag, p, -0.001), ParameterError);
    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Sag, p, 0.2001), ParameterError);

    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Sag, event_params(0.95), 0.01),
                    ParameterError);
    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Swell, event_params(0.9), 0.01),
                    ParameterError);
    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Interruption, event_params(0.5), 0.01),
                    ParameterError);

    SignalParams bad_window = event_params(0.5, 0.05, 0.03);
    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Sag, bad_window, 0.01),
                    ParameterError);

    SignalParams bad_rate = event_params(0.5);
    bad_rate.sampling_hz = 3190.0; // not an integer multiple of 50 Hz
    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Sag, bad_rate, 0.01),
                    ParameterError);

    SignalParams stray_harmonics = event_params(0.5);
    stray_harmonics.harmonic_amplitudes = {0.1, 0.0, 0.0};
    CHECK_THROWS_AS((void)sample_waveform(DisturbanceClass::Sag, stray_harmonics, 0.01),
                    ParameterError);
}

TEST_CASE("generate_signal yields 640 samples under defaults") {
    const SignalRecord rec = generate_signal(DisturbanceClass::Sag, event_params(0.3));
    CHECK(rec.samples.size() == 640);
    for (double v : rec.samples) CHECK(std::isfinite(v));
}

TEST_CASE("generate_signal is deterministic") {
    const SignalParams p = event_params(0.42);
    const auto a = generate_signal(DisturbanceClass::Swell, p);
    const auto b = generate_signal(DisturbanceClass::Swell, p);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i] == b.samples[i]);
}

TEST_CASE("oscillatory transient exceeds the nominal peak only inside the event") {
    SignalParams p = event_params(0.7, 0.04, 0.12);
    p.transient_decay_s = 0.02;
    p.transient_freq_hz = 500.0;
    const SignalRecord rec = generate_signal(DisturbanceClass::OscillatoryTransient, p);
    double max_inside = 0.0, max_outside = 0.0;
    for (std::size_t n = 0; n < rec.samples.size(); ++n) {
        const double t = static_cast<double>(n) / p.sampling_hz;
        const double mag = std::abs(rec.samples[n]);
        if (t >= p.event_start_s && t < p.event_end_s) max_inside = std::max(max_inside, mag);
        else max_outside = std::max(max_outside, mag);
    }
    CHECK(max_outside <= p.amplitude_pu + 1e-12);
    CHECK(max_inside > p.amplitude_pu);
}

TEST_CASE("generate_dataset honours counts and labels") {
    DatasetSpec spec;
    spec.signals_per_class = 5;
    spec.classes = {DisturbanceClass::Swell, DisturbanceClass::Notch};
    const auto records = generate_dataset(spec);
    REQUIRE(records.size() == 10);
    for (std::size_t i = 0; i < 5; ++i) CHECK(records[i].label == DisturbanceClass::Swell);
    for (std::size_t i = 5; i < 10; ++i) CHECK(records[i].label == DisturbanceClass::Notch);
}

TEST_CASE("generate_dataset with one class and one signal") {
    DatasetSpec spec;
    spec.signals_per_class = 1;
    spec.classes = {DisturbanceClass::Flicker};
    const auto records = generate_dataset(spec);
    REQUIRE(records.size() == 1);
    CHECK(records[0].label == DisturbanceClass::Flicker);
    CHECK(records[0].samples.size() == 640);
}

TEST_CASE("generate_dataset is a pure function of the spec") {
    DatasetSpec spec;
    spec.signals_per_class = 3;
    const auto a = generate_dataset(spec);
    const auto b = generate_dataset(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].params == b[i].params);
        for (std::size_t n = 0; n < a[i].samples.size(); ++n)
            CHECK(a[i].samples[n] == b[i].samples[n]);
    }
}

TEST_CASE("generate_dataset rejects bad specs") {
    DatasetSpec empty;
    empty.classes.clear();
    CHECK_THROWS_AS((void)generate_dataset(empty), ParameterError);
    DatasetSpec zero;
    zero.signals_per_class = 0;
    CHECK_THROWS_AS((void)generate_dataset(zero), ParameterError);
}

TEST_CASE("envelope bounds hold on drawn sag/interruption/swell records") {
    DatasetSpec spec;
    spec.signals_per_class = 40;
    spec.classes = {DisturbanceClass::Sag, DisturbanceClass::Interruption,
                    DisturbanceClass::SagWithHarmonics,
                    DisturbanceClass::InterruptionWithHarmonics, DisturbanceClass::Swell};
    for (const SignalRecord& rec : generate_dataset(spec)) {
        const SignalParams& p = rec.params;
        const double harm_sum = p.harmonic_amplitudes[0] + p.harmonic_amplitudes[1] +
                                p.harmonic_amplitudes[2];
        double max_inside = 0.0;
        for (std::size_t n = 0; n < rec.samples.size(); ++n) {
            const double t = static_cast<double>(n) / p.sampling_hz;
            if (t >= p.event_start_s && t < p.event_end_s)
                max_inside = std::max(max_inside, std::abs(rec.samples[n]));
        }
        if (rec.label == DisturbanceClass::Swell) {
            CHECK(max_inside >= 1.05 * p.amplitude_pu);
        } else {
            CHECK(max_inside <=
                  (1.0 - p.depth) * p.amplitude_pu + harm_sum * p.amplitude_pu + 1e-9);
        }
    }
}

TEST_CASE("samples outside the event equal the pure sine exactly") {
    DatasetSpec spec;
    spec.signals_per_class = 15;
    spec.classes = {DisturbanceClass::Swell, DisturbanceClass::Sag,
                    DisturbanceClass::Interruption};
    for (const SignalRecord& rec : generate_dataset(spec)) {
        SignalParams pure = rec.params;
        pure.depth = 0.0;
        const SignalRecord baseline = generate_signal(rec.label, pure);
        for (std::size_t n = 0; n < rec.samples.size(); ++n) {
            const double t = static_cast<double>(n) / rec.params.sampling_hz;
            if (t < rec.params.event_start_s || t > rec.params.event_end_s)
                CHECK(rec.samples[n] == baseline.samples[n]);
        }
    }
}

TEST_CASE("harmonic classes show 3rd/5th/7th spectral lines, plain classes do not") {
    // Events are whole cycles on the cycle grid, so any full-cycle window of
    // a non-flicker record is periodic and the DFT bins are exact.
    const std::vector<DisturbanceClass> harmonic = {
        DisturbanceClass::SwellWithHarmonics, DisturbanceClass::SagWithHarmonics,
        DisturbanceClass::InterruptionWithHarmonics, DisturbanceClass::FlickerWithHarmonics};
    const std::vector<DisturbanceClass> plain = {
        DisturbanceClass::Swell, DisturbanceClass::Sag, DisturbanceClass::Interruption,
        DisturbanceClass::Flicker};

    DatasetSpec spec;
    spec.signals_per_class = 10;
    spec.classes = harmonic;
    for (const SignalRecord& rec : generate_dataset(spec)) {
        // first full cycle: outside every event (events start at >= 1 cycle)
        const double fundamental = dft_mag(rec.samples, 0, 64, 1);
        for (int bin : {3, 5, 7})
            CHECK(dft_mag(rec.samples, 0, 64, bin) > 1e-3 * fundamental);
    }

    for (DisturbanceClass cls : plain) {
        SignalParams p = event_params(cls == DisturbanceClass::Flicker ? 0.15 : 0.5,
                                      0.04, 0.12);
        if (cls == DisturbanceClass::Flicker) p.flicker_hz = 10.0; // record-periodic
        if (cls == DisturbanceClass::Interruption) p.depth = 0.95;
        const SignalRecord rec = generate_signal(cls, p);
        if (cls == DisturbanceClass::Flicker) {
            // sidebands are record-aligned; use the whole 10-cycle record
            const double fundamental = dft_mag(rec.samples, 0, 640, 10);
            for (int bin : {30, 50, 70})
                CHECK(dft_mag(rec.samples, 0, 640, bin) <= 1e-6 * fundamental);
        } else {
            const double fundamental = dft_mag(rec.samples, 128, 64, 1); // in-event cycle
            for (int bin : {3, 5, 7}) {
                CHECK(dft_mag(rec.samples, 128, 64, bin) <= 1e-6 * std::max(fundamental, 1.0));
                CHECK(dft_mag(rec.samples, 0, 64, bin) <= 1e-6 * dft_mag(rec.samples, 0, 64, 1));
            }
        }
    }
}

TEST_CASE("the noise flag adds seeded noise at roughly the requested SNR") {
    DatasetSpec clean;
    clean.signals_per_class = 3;
    clean.classes = {DisturbanceClass::Swell};
    DatasetSpec noisy = clean;
    noisy.noise_snr_db = 30.0;

    const auto a = generate_dataset(clean);
    const auto b = generate_dataset(noisy);
    const auto c = generate_dataset(noisy);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double signal_power = 0.0, noise_power = 0.0;
        for (std::size_t n = 0; n < a[i].samples.size(); ++n) {
            signal_power += a[i].samples[n] * a[i].samples[n];
            const double d = b[i].samples[n] - a[i].samples[n];
            noise_power += d * d;
            CHECK(b[i].samples[n] == c[i].samples[n]); // still deterministic
        }
        CHECK(noise_power > 0.0);
        const double snr_db = 10.0 * std::log10(signal_power / noise_power);
        CHECK(snr_db == doctest::Approx(30.0).epsilon(0.05));
    }
}

TEST_CASE("drawn parameters satisfy the class invariants") {
    DatasetSpec spec;
    spec.signals_per_class = 30;
    for (const SignalRecord& rec : generate_dataset(spec)) {
        const SignalParams& p = rec.params;
        CHECK(p.event_start_s > 0.0);
        CHECK(p.event_start_s < p.event_end_s);
        CHECK(p.event_end_s <= p.duration_s);
        CHECK_NOTHROW(validate_params(rec.label, p));
        // events are whole cycles with >= 1 cycle margin on each side
        const double cycles_start = p.event_start_s * p.fundamental_hz;
        const double cycles_len = (p.event_end_s - p.event_start_s) * p.fundamental_hz;
        CHECK(std::abs(cycles_start - std::round(cycles_start)) < 1e-9);
        CHECK(std::abs(cycles_len - std::round(cycles_len)) < 1e-9);
        CHECK(cycles_start >= 1.0 - 1e-9);
        CHECK(p.event_end_s <= p.duration_s - 1.0 / p.fundamental_hz + 1e-9);
    }
}
