#pragma once

#include <string>

#include <json.hpp>

#include "lipsel/space.hpp"

namespace lipsel {

using Json = nlohmann::ordered_json;

// Numbers or the strings "inf" / "-inf".
double ext_from_json(const Json& j);
Json ext_to_json(double v);

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);
Instance load_instance(const std::string& path);

Json point_to_json(Point p);
Json rect_to_json(const Rect& r);
Json selection_to_json(const Instance& inst, const Selection& sel);
// Accepts {"values": {id: [x, y]}} or {"selection": {...}} wrappers.
Selection selection_from_json(const Instance& inst, const Json& j);

}  // namespace lipsel
