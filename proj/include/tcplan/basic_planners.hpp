#pragma once

#include "tcplan/planner.hpp"

namespace tcplan {

/// Three-rule partition planner on S^m x S^m with marked point z:
///   rule 1: x.y > -1 + tol          -- constant-speed shortest geodesic
///   rule 2: antipodal-ish, x != z   -- great circle through the tangent
///                                      field direction V(x)
///   rule 3: the pair (z, -z)        -- fixed half great circle through a
///                                      deterministic w orthogonal to z
/// Near-boundary pairs go to the higher-index rule. Inputs the tie-break
/// sends to rules 2/3 that are not exactly antipodal get a short closing
/// geodesic appended so the section still ends at the queried endpoint.
Planner sphere_planner(int m, const Point& z);

/// One-rule planner on R x R whose path passes through the anchor (0 or 1)
/// at t = 1/2: first leg (1-2t)x toward the anchor, second leg out to y.
Planner line_sigma_planner(int anchor);

/// Path of the planner above, directly.
ParamPath line_sigma_path(int anchor, double x, double y);

/// One-rule planner for pairs of two-point configurations on the line,
/// moving both robots through anchor 0 when x1 < x2 and through anchor 1
/// when x1 > x2. Paths live in R^2: the two coordinates may collide, the
/// planner's ambient is the full plane (lift_planner restores clearance).
Planner c2_line_planner();

/// One-rule planner from Y1 to Y2 inside the join Y1 * Y2, sweeping the
/// join coordinate. Inputs are canonical join points (t = 0 sources,
/// t = 1 targets).
Planner join_planner(std::string y1_desc, std::string y2_desc);

}  // namespace tcplan
