#pragma once

#include <functional>
#include <vector>

#include "tcplan/planner.hpp"

namespace tcplan {

/// Homotopy on a space: (time in [0,1], point) -> point.
using Homotopy = std::function<Point(double, const Point&)>;
using PointMap = std::function<Point(const Point&)>;

/// Componentwise power of a partition planner on Y, graded by the sum of the
/// componentwise rule indices. Rule j (j = n..rn) covers exactly the tuple
/// pairs whose base indices sum to j; its section runs all base sections in
/// parallel. Requires base rules indexed 1..r; emits rn - n + 1 rules.
Planner graded_product_planner(const Planner& base, int n);

/// Keeps only grades n..2n+1 of a graded sphere-product planner: pairs of
/// genuine configurations never need a higher grade, since at most one
/// component can sit at the marked point z. Dispatching a tuple pair that
/// needs a dropped grade raises GradeOverflow (the input was not a
/// configuration pair). Emits n + 2 rules.
Planner restrict_to_configurations(const Planner& product, const Point& z);

/// Turns a planner for configuration pairs in Y (paths in Y^n) into a
/// collision-free planner with paths in C^n(Y x I): raise robot j to height
/// 1/j on [0,1/3], trace the base path at the fixed heights on [1/3,2/3],
/// descend on [2/3,1]. Rule count preserved.
Planner lift_planner(const Planner& base);

/// Forgets heights: sections become g-images of the lifted sections, where g
/// drops every robot to its base point. For planners built by lift_planner
/// the middle phase is inverted exactly, so project(lift(p)) reproduces p's
/// paths pointwise. Rule count preserved.
Planner project_planner(const Planner& lifted);

/// One-rule planner from nullhomotopies of the two inclusions: contract the
/// start along g, ride the fixed path sigma, expand to the end along h in
/// reverse (time splits 1/3 and 2/3). g and h must start at the identity and
/// end at the constant maps sigma(0) and sigma(1); checked on the samples.
Planner section_from_nullhomotopies(Homotopy g, Homotopy h, ParamPath sigma,
                                    const std::vector<Point>& y1_samples,
                                    const std::vector<Point>& y2_samples,
                                    std::string y1_desc, std::string y2_desc,
                                    std::string ambient_desc);

/// Carries a planner across maps f: X -> X' and alpha'_j: Y_j' -> Y_j.
/// Domains are preimages of the base domains; sections ride H1 into the
/// f-image of the base path and H2 back out. H_j must run from the inclusion
/// of Y_j' to f after alpha'_j; checked on the samples. Rule count preserved.
Planner transport_planner(const Planner& base, PointMap f, PointMap pull1, PointMap pull2,
                          Homotopy h1, Homotopy h2,
                          const std::vector<Point>& y1_samples,
                          const std::vector<Point>& y2_samples, std::string ambient_desc);

/// Planner on Y x Y from a configuration planner, via the embedding
/// y -> (y, f_1(y), ..., f_{n-1}(y)) and projection to the first robot's
/// base point. The maps must be fixed-point-free and pairwise disagreeing;
/// violations found on the samples raise NotFixedPointFree with a witness.
Planner extract_fixed_point_free(const Planner& config_planner, std::vector<PointMap> maps,
                                 const std::vector<Point>& y_samples);

/// Planner on Y x Y from a configuration planner over Y', via the embedding
/// y -> (y, z_2, ..., z_n) with fixed anchors in Y' - Y and the projection
/// r(first robot). r must restrict to the identity on Y (sampled); anchors
/// must be distinct and outside Y.
Planner extract_via_retract(const Planner& config_planner, PointMap retraction,
                            std::vector<Point> anchors,
                            std::function<bool(const Point&)> in_y,
                            const std::vector<Point>& y_samples);

}  // namespace tcplan
