#pragma once

#include <functional>
#include <vector>

#include "tcplan/point.hpp"

namespace tcplan {

/// Piecewise closed-form curve on [0,1].
///
/// Segment i is a closed-form evaluator on its own local parameter in [0,1];
/// global parameters map affinely onto segments between consecutive
/// breakpoints. Adjacent segments must agree at the seams within kTol.
/// eval(0) and eval(1) return the cached endpoints exactly as stored.
class ParamPath {
public:
    using SegmentFn = std::function<Point(double)>;

    /// breakpoints: 0 = t_0 < ... < t_r = 1; one segment per interval.
    /// Validates seam agreement and that the cached endpoints match the
    /// first/last segment values within kTol.
    ParamPath(std::vector<double> breakpoints, std::vector<SegmentFn> segments,
              Point start, Point end);

    static ParamPath constant(const Point& p);

    /// Single segment covering [0,1].
    static ParamPath from_function(SegmentFn f, Point start, Point end);

    /// Constant-speed sphere geodesic (shortest arc; undefined direction for
    /// antipodal endpoints is rejected).
    static ParamPath geodesic(const Point& a, const Point& b);

    /// Straight-line interpolation between euclidean points.
    static ParamPath linear(const Point& a, const Point& b);

    Point eval(double t) const;
    const Point& start() const { return start_; }
    const Point& end() const { return end_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    /// Path following this one on [0, w] of the new clock, then `next` on
    /// [w, 1]; endpoints must chain within kTol.
    friend ParamPath concat_paths(const ParamPath& first, const ParamPath& second,
                                  double split);

private:
    std::vector<double> breakpoints_;
    std::vector<SegmentFn> segments_;
    Point start_;
    Point end_;
};

ParamPath concat_paths(const ParamPath& first, const ParamPath& second,
                       double split = 0.5);

/// Affine time reparametrization: evaluates `path` on [t0, t1] as the new
/// clock runs over [0,1]. Endpoints are re-cached from the path values.
ParamPath reparametrize(const ParamPath& path, double t0, double t1);

/// Tuple-valued path evaluating all components at the common time; the
/// breakpoint set is the union of the components' breakpoints.
ParamPath product_path(std::vector<ParamPath> components);

}  // namespace tcplan
