#pragma once

#include "khc/katz.hpp"
#include "khc/system.hpp"

#include <json.hpp>

namespace khc {

nlohmann::json to_json(const HodgeSystem& s);
nlohmann::json to_json(const MonodromySystem& s);
nlohmann::json to_json(const Value& v);
nlohmann::json to_json(const RankOneLine& line);
nlohmann::json to_json(const KatzTrace& trace);

HodgeSystem hodge_from_json(const nlohmann::json& j);
MonodromySystem monodromy_from_json(const nlohmann::json& j);
Value value_from_json(const nlohmann::json& j);

}  // namespace khc
