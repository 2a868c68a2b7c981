#pragma once

#include <json.hpp>

#include "pqwf/signal_gen.hpp"

namespace pqwf {

void to_json(nlohmann::json& j, const SignalParams& p);
void from_json(const nlohmann::json& j, SignalParams& p);

void to_json(nlohmann::json& j, const GenerationRanges& r);
void from_json(const nlohmann::json& j, GenerationRanges& r);

} // namespace pqwf
