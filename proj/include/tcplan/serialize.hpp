#pragma once

#include <json.hpp>

#include "tcplan/bounds.hpp"
#include "tcplan/path.hpp"
#include "tcplan/verify.hpp"

namespace tcplan {

/// Point encoding:
///   {"space": "sphere"|"euclidean", "coords": [...]}
///   {"space": "cylinder", "base": {...}, "height": h}
///   {"space": "join", "t": t, "left": {...}?, "right": {...}?}
///   {"space": "tuple", "points": [...]}  (configurations are tuples)
nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

/// Dispatched path: {"rule": id, "breakpoints": [...],
///                   "samples": [{"t": t, "point": {...}}, ...]}.
nlohmann::json path_to_json(int rule_id, const ParamPath& path, int samples);

/// CSV rows (query_id, robot_index, t, coord_0..coord_k[, height]) for
/// euclidean, sphere and cylinder paths; `header` controls the column line.
std::string path_to_csv(int query_id, int rule_id, const ParamPath& path, int samples,
                        bool header);

nlohmann::json report_to_json(const verify::Report& report);
std::string report_summary(const verify::Report& report);

nlohmann::json bound_report_to_json(const bounds::BoundReport& report);

}  // namespace tcplan
