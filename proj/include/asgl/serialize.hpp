#pragma once

#include "asgl/place.hpp"
#include "json.hpp"

namespace asgl {

// Structured encodings that round-trip exactly; "text" fields are for readers only.
nlohmann::json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Place& place);
Place place_from_json(const nlohmann::json& j);

}  // namespace asgl
