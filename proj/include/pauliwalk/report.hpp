#pragma once

#include <string>

#include "json.hpp"
#include "pauliwalk/moment.hpp"

namespace pauliwalk {

inline constexpr const char* kVersion = "0.1.0";

/// Reports are self-describing: version, seed, tolerances and the bound
/// formulas used are embedded, and timing data is kept in a separate object
/// so deterministic fields can be compared byte for byte.
nlohmann::json gap_report_json(const GapReport& report, std::uint64_t seed);

/// Wraps a payload as {"version", "seed", "result", "timing"}.
nlohmann::json report_envelope(const nlohmann::json& result,
                               std::uint64_t seed, double seconds);

}  // namespace pauliwalk
