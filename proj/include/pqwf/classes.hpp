#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pqwf/errors.hpp"

namespace pqwf {

/// The 11 IEEE-1159-style disturbance classes. Codes 1-11 are stable and
/// used verbatim in CSV files and reports.
enum class DisturbanceClass : int {
    SwellWithHarmonics = 1,
    Swell = 2,
    Spike = 3,
    SagWithHarmonics = 4,
    Sag = 5,
    OscillatoryTransient = 6,
    Notch = 7,
    InterruptionWithHarmonics = 8,
    Interruption = 9,
    FlickerWithHarmonics = 10,
    Flicker = 11,
};

inline constexpr int kNumClasses = 11;

inline constexpr std::array<DisturbanceClass, kNumClasses> all_classes() {
    return {DisturbanceClass::SwellWithHarmonics,
            DisturbanceClass::Swell,
            DisturbanceClass::Spike,
            DisturbanceClass::SagWithHarmonics,
            DisturbanceClass::Sag,
            DisturbanceClass::OscillatoryTransient,
            DisturbanceClass::Notch,
            DisturbanceClass::InterruptionWithHarmonics,
            DisturbanceClass::Interruption,
            DisturbanceClass::FlickerWithHarmonics,
            DisturbanceClass::Flicker};
}

inline std::vector<DisturbanceClass> default_class_list() {
    const auto classes = all_classes();
    return {classes.begin(), classes.end()};
}

inline constexpr int class_code(DisturbanceClass c) {
    return static_cast<int>(c);
}

inline DisturbanceClass class_from_code(int code) {
    if (code < 1 || code > kNumClasses)
        throw ParameterError("class code out of range 1-11: " + std::to_string(code));
    return static_cast<DisturbanceClass>(code);
}

inline constexpr std::string_view class_name(DisturbanceClass c) {
    switch (c) {
        case DisturbanceClass::SwellWithHarmonics: return "SwellWithHarmonics";
        case DisturbanceClass::Swell: return "Swell";
        case DisturbanceClass::Spike: return "Spike";
        case DisturbanceClass::SagWithHarmonics: return "SagWithHarmonics";
        case DisturbanceClass::Sag: return "Sag";
        case DisturbanceClass::OscillatoryTransient: return "OscillatoryTransient";
        case DisturbanceClass::Notch: return "Notch";
        case DisturbanceClass::InterruptionWithHarmonics: return "InterruptionWithHarmonics";
        case DisturbanceClass::Interruption: return "Interruption";
        case DisturbanceClass::FlickerWithHarmonics: return "FlickerWithHarmonics";
        case DisturbanceClass::Flicker: return "Flicker";
    }
    return "unknown";
}

/// True for the multi-stage classes that carry a 3rd/5th/7th harmonic overlay.
inline constexpr bool has_harmonics(DisturbanceClass c) {
    switch (c) {
        case DisturbanceClass::SwellWithHarmonics:
        case DisturbanceClass::SagWithHarmonics:
        case DisturbanceClass::InterruptionWithHarmonics:
        case DisturbanceClass::FlickerWithHarmonics:
            return true;
        default:
            return false;
    }
}

} // namespace pqwf
