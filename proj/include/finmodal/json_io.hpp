#pragma once

#include <json.hpp>

#include "finmodal/glue.hpp"
#include "finmodal/kripke.hpp"
#include "finmodal/topo.hpp"

namespace finmodal {

/// {"points": N, "edges": [[i,j], ...]}; duplicate edges rejected.
nlohmann::json frame_to_json(const Frame& frame);
Frame frame_from_json(const nlohmann::json& j);

/// {"points": N, "opens": [[...], ...], "complete": true|false}.
nlohmann::json space_to_json(const TopSpace& space);
TopSpace space_from_json(const nlohmann::json& j);

/// {"clusters": [{"members": [...], "space": <space>, "cells":
/// {"w": [...]}}]}; entries are matched to clusters(frame) by member
/// set.
ClusterAssignment assignment_from_json(const nlohmann::json& j,
                                       const Frame& frame);

nlohmann::json valuation_to_json(const Valuation& val);
nlohmann::json point_set_to_json(PointSet s);
PointSet point_set_from_json(const nlohmann::json& j, int n);

}  // namespace finmodal
