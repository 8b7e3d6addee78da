#pragma once

#include "euler/counting.hpp"
#include "euler/fstar.hpp"
#include "json.hpp"

namespace euler {

// Stable JSON schemas for reports. Counts are decimal strings. Keys keep the
// insertion order below. elapsed_ms is emitted only on request so repeated
// runs can produce identical output.

nlohmann::ordered_json to_json(const CountReport& r, bool with_timing = false);
nlohmann::ordered_json to_json(const FStarReport& r, bool with_timing = false);
nlohmann::ordered_json to_json(const ClaimReport& r);

}  // namespace euler
