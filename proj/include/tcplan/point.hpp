#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tcplan/errors.hpp"

namespace tcplan {

/// Tolerance used for point distinctness, unit-norm checks and endpoint
/// agreement throughout the library.
inline constexpr double kTol = 1e-9;

// small dense-vector helpers
double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& a);
std::vector<double> normalized(const std::vector<double>& a);

/// A point of one of the supported ambient spaces.
///
/// Kinds:
///   Euclidean  - vector in R^m
///   Sphere     - unit vector in R^{m+1}
///   Cylinder   - (base point of Y, height in [0,1]) with the sup product metric
///   Join       - [left, right, t] of Y1 * Y2, stored in canonical form:
///                at t = 0 the right slot is absent, at t = 1 the left slot is
///                absent, so quotient equality is decidable
///   Tuple      - ordered tuple of points of a common space (a point of Y^n);
///                configurations are validated tuples
class Point {
public:
    enum class Kind { Euclidean, Sphere, Cylinder, Join, Tuple };

    static Point euclidean(std::vector<double> coords);
    static Point euclidean1(double x) { return euclidean({x}); }
    static Point sphere(std::vector<double> coords);  // requires |coords| = 1 within kTol
    static Point cylinder(Point base, double height);
    static Point join(Point left, Point right, double t);  // canonicalizes the ends
    static Point join_left(Point left);                    // [left, -, 0]
    static Point join_right(Point right);                  // [-, right, 1]
    static Point tuple(std::vector<Point> components);

    Kind kind() const { return kind_; }
    bool is_tuple() const { return kind_ == Kind::Tuple; }

    const std::vector<double>& coords() const;           // Euclidean, Sphere
    double scalar() const;                               // 1-d Euclidean shorthand
    const Point& base() const;                           // Cylinder
    double height() const;                               // Cylinder
    double join_t() const;                               // Join
    bool has_left() const { return has_left_; }
    bool has_right() const { return has_right_; }
    const Point& left() const;                           // Join
    const Point& right() const;                          // Join
    const std::vector<Point>& components() const;        // Tuple

    bool operator==(const Point& other) const;
    bool operator!=(const Point& other) const { return !(*this == other); }

    std::string describe() const;

private:
    Point() = default;

    Kind kind_ = Kind::Euclidean;
    std::vector<double> coords_;
    double scalar_ = 0.0;          // cylinder height or join t
    std::vector<Point> children_;  // cylinder: {base}; join: present slots; tuple: components
    bool has_left_ = false;
    bool has_right_ = false;
};

/// True when a and b live in the same space (same kind and shape).
bool same_space(const Point& a, const Point& b);

/// Distance in the ambient metric. Spheres use the chordal metric, cylinders
/// the sup product metric max(base distance, height difference), tuples the
/// sup metric over components. A base-space point compares against a cylinder
/// point as if at height 0. Join distance is quotient-compatible:
/// |t1-t2| + min(1-t1,1-t2) d(left) + min(t1,t2) d(right).
double distance(const Point& a, const Point& b);

inline bool approx_equal(const Point& a, const Point& b, double tol = kTol) {
    return distance(a, b) <= tol;
}

/// Geodesic distance between sphere points, in [0, pi].
double sphere_distance(const Point& x, const Point& y);

/// Unit tangent vector V(x) on S^m - {z}, built by pushing the constant
/// direction u0 (a fixed unit vector orthogonal to z) through the derivative
/// of the inverse stereographic projection from z, then normalizing.
std::vector<double> tangent_field(const Point& z, const Point& x);

/// Deterministic unit vector orthogonal to z: Gram-Schmidt of the first
/// standard basis vector against z (second basis vector when degenerate).
std::vector<double> reference_orthogonal(const std::vector<double>& z);

/// Ordered n-tuple of pairwise-distinct points of a common space.
class Configuration {
public:
    /// Throws EmptyConfiguration, DimensionMismatch, or DuplicatePoint
    /// (pairwise distance must exceed kTol).
    static Configuration make(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    /// +infinity for a single point.
    double min_separation() const { return min_separation_; }

    Point to_point() const { return Point::tuple(points_); }
    static Configuration from_point(const Point& p);

private:
    Configuration(std::vector<Point> pts, double sep)
        : points_(std::move(pts)), min_separation_(sep) {}

    std::vector<Point> points_;
    double min_separation_ = std::numeric_limits<double>::infinity();
};

inline Configuration make_configuration(std::vector<Point> points) {
    return Configuration::make(std::move(points));
}

}  // namespace tcplan
