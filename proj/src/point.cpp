#include "tcplan/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcplan {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> normalized(const std::vector<double>& a) {
    const double n = norm(a);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / n;
    return out;
}

Point Point::euclidean(std::vector<double> coords) {
    for (double c : coords)
        if (!std::isfinite(c)) throw Error("euclidean point has non-finite coordinate");
    Point p;
    p.kind_ = Kind::Euclidean;
    p.coords_ = std::move(coords);
    return p;
}

Point Point::sphere(std::vector<double> coords) {
    const double n = norm(coords);
    if (std::abs(n - 1.0) > kTol) {
        std::ostringstream os;
        os << "sphere point norm " << n << " deviates from 1 by more than " << kTol;
        throw Error(os.str());
    }
    Point p;
    p.kind_ = Kind::Sphere;
    p.coords_ = std::move(coords);
    return p;
}

Point Point::cylinder(Point base, double height) {
    if (height < -kTol || height > 1.0 + kTol)
        throw Error("cylinder height outside [0,1]");
    Point p;
    p.kind_ = Kind::Cylinder;
    p.scalar_ = std::clamp(height, 0.0, 1.0);
    p.children_.push_back(std::move(base));
    return p;
}

Point Point::join(Point left, Point right, double t) {
    if (t < 0.0 || t > 1.0) throw Error("join parameter outside [0,1]");
    Point p;
    p.kind_ = Kind::Join;
    p.scalar_ = t;
    if (t < 1.0) {
        p.has_left_ = true;
        p.children_.push_back(std::move(left));
    }
    if (t > 0.0) {
        p.has_right_ = true;
        p.children_.push_back(std::move(right));
    }
    return p;
}

Point Point::join_left(Point left) {
    Point p;
    p.kind_ = Kind::Join;
    p.scalar_ = 0.0;
    p.has_left_ = true;
    p.children_.push_back(std::move(left));
    return p;
}

Point Point::join_right(Point right) {
    Point p;
    p.kind_ = Kind::Join;
    p.scalar_ = 1.0;
    p.has_right_ = true;
    p.children_.push_back(std::move(right));
    return p;
}

Point Point::tuple(std::vector<Point> components) {
    Point p;
    p.kind_ = Kind::Tuple;
    p.children_ = std::move(components);
    return p;
}

const std::vector<double>& Point::coords() const {
    if (kind_ != Kind::Euclidean && kind_ != Kind::Sphere)
        throw Error("coords() called on a structured point");
    return coords_;
}

double Point::scalar() const {
    const auto& c = coords();
    if (c.size() != 1) throw Error("scalar() requires a 1-d point");
    return c[0];
}

const Point& Point::base() const {
    if (kind_ != Kind::Cylinder) throw Error("base() requires a cylinder point");
    return children_[0];
}

double Point::height() const {
    if (kind_ != Kind::Cylinder) throw Error("height() requires a cylinder point");
    return scalar_;
}

double Point::join_t() const {
    if (kind_ != Kind::Join) throw Error("join_t() requires a join point");
    return scalar_;
}

const Point& Point::left() const {
    if (kind_ != Kind::Join || !has_left_) throw Error("left slot absent");
    return children_[0];
}

const Point& Point::right() const {
    if (kind_ != Kind::Join || !has_right_) throw Error("right slot absent");
    return children_[has_left_ ? 1 : 0];
}

const std::vector<Point>& Point::components() const {
    if (kind_ != Kind::Tuple) throw Error("components() requires a tuple point");
    return children_;
}

bool Point::operator==(const Point& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Euclidean:
        case Kind::Sphere:
            return coords_ == other.coords_;
        case Kind::Cylinder:
            return scalar_ == other.scalar_ && children_[0] == other.children_[0];
        case Kind::Join: {
            if (scalar_ != other.scalar_) return false;
            // canonical form drops the slot the quotient ignores
            if (has_left_ != other.has_left_ || has_right_ != other.has_right_) return false;
            if (has_left_ && !(left() == other.left())) return false;
            if (has_right_ && !(right() == other.right())) return false;
            return true;
        }
        case Kind::Tuple:
            return children_ == other.children_;
    }
    return false;
}

std::string Point::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Euclidean:
        case Kind::Sphere: {
            os << (kind_ == Kind::Sphere ? "S(" : "E(");
            for (std::size_t i = 0; i < coords_.size(); ++i)
                os << (i ? "," : "") << coords_[i];
            os << ")";
            break;
        }
        case Kind::Cylinder:
            os << "(" << children_[0].describe() << ", h=" << scalar_ << ")";
            break;
        case Kind::Join:
            os << "[" << (has_left_ ? left().describe() : std::string("-")) << ", "
               << (has_right_ ? right().describe() : std::string("-")) << ", " << scalar_ << "]";
            break;
        case Kind::Tuple: {
            os << "(";
            for (std::size_t i = 0; i < children_.size(); ++i)
                os << (i ? "; " : "") << children_[i].describe();
            os << ")";
            break;
        }
    }
    return os.str();
}

bool same_space(const Point& a, const Point& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Point::Kind::Euclidean:
        case Point::Kind::Sphere:
            return a.coords().size() == b.coords().size();
        case Point::Kind::Cylinder:
            return same_space(a.base(), b.base());
        case Point::Kind::Join:
            // slots may legitimately be absent; compare the ones present on both
            if (a.has_left() && b.has_left() && !same_space(a.left(), b.left())) return false;
            if (a.has_right() && b.has_right() && !same_space(a.right(), b.right())) return false;
            return true;
        case Point::Kind::Tuple: {
            const auto& ca = a.components();
            const auto& cb = b.components();
            if (ca.size() != cb.size()) return false;
            for (std::size_t i = 0; i < ca.size(); ++i)
                if (!same_space(ca[i], cb[i])) return false;
            return true;
        }
    }
    return false;
}

namespace {

double coord_distance(const Point& a, const Point& b) {
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    if (ca.size() != cb.size()) throw DimensionMismatch("point dimensions differ");
    double s = 0.0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const double d = ca[i] - cb[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool is_coord_kind(const Point& p) {
    return p.kind() == Point::Kind::Euclidean || p.kind() == Point::Kind::Sphere;
}

}  // namespace

double distance(const Point& a, const Point& b) {
    if (a.kind() == b.kind()) {
        switch (a.kind()) {
            case Point::Kind::Euclidean:
            case Point::Kind::Sphere:
                return coord_distance(a, b);
            case Point::Kind::Cylinder:
                return std::max(distance(a.base(), b.base()),
                                std::abs(a.height() - b.height()));
            case Point::Kind::Join: {
                const double t1 = a.join_t(), t2 = b.join_t();
                double d = std::abs(t1 - t2);
                const double wl = std::min(1.0 - t1, 1.0 - t2);
                const double wr = std::min(t1, t2);
                if (wl > 0.0) d += wl * distance(a.left(), b.left());
                if (wr > 0.0) d += wr * distance(a.right(), b.right());
                return d;
            }
            case Point::Kind::Tuple: {
                const auto& ca = a.components();
                const auto& cb = b.components();
                if (ca.size() != cb.size())
                    throw DimensionMismatch("tuple sizes differ");
                double d = 0.0;
                for (std::size_t i = 0; i < ca.size(); ++i)
                    d = std::max(d, distance(ca[i], cb[i]));
                return d;
            }
        }
    }
    // a base-space point is the height-0 cylinder point over itself
    if (a.kind() == Point::Kind::Cylinder && is_coord_kind(b))
        return std::max(distance(a.base(), b), a.height());
    if (b.kind() == Point::Kind::Cylinder && is_coord_kind(a))
        return std::max(distance(a, b.base()), b.height());
    throw DimensionMismatch("points of different spaces: " + a.describe() + " vs " +
                            b.describe());
}

double sphere_distance(const Point& x, const Point& y) {
    if (x.kind() != Point::Kind::Sphere || y.kind() != Point::Kind::Sphere)
        throw DimensionMismatch("sphere_distance requires sphere points");
    const auto& cx = x.coords();
    const auto& cy = y.coords();
    if (cx.size() != cy.size()) throw DimensionMismatch("sphere dimensions differ");
    return std::acos(std::clamp(dot(cx, cy), -1.0, 1.0));
}

std::vector<double> reference_orthogonal(const std::vector<double>& z) {
    for (std::size_t axis = 0; axis < z.size(); ++axis) {
        std::vector<double> w(z.size(), 0.0);
        w[axis] = 1.0;
        const double proj = dot(w, z);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= proj * z[i];
        if (norm(w) > 1e-6) return normalized(w);
    }
    throw Error("no direction orthogonal to z found");  // unreachable for unit z, dim >= 2
}

std::vector<double> tangent_field(const Point& z, const Point& x) {
    if (z.kind() != Point::Kind::Sphere || x.kind() != Point::Kind::Sphere)
        throw DimensionMismatch("tangent_field requires sphere points");
    const auto& cz = z.coords();
    const auto& cx = x.coords();
    if (cz.size() != cx.size()) throw DimensionMismatch("sphere dimensions differ");
    if (coord_distance(x, z) <= kTol)
        throw PoleExcluded("tangent_field undefined at the marked point z");

    const std::vector<double> u0 = reference_orthogonal(cz);

    // stereographic image of x in the hyperplane z-perp:
    //   p = (x - (x.z) z) / (1 - x.z)
    const double xz = dot(cx, cz);
    const double denom = 1.0 - xz;
    std::vector<double> p(cx.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = (cx[i] - xz * cz[i]) / denom;

    // derivative of the inverse projection at p applied to u0:
    //   W = 4 (p.u0) z - 4 (p.u0) p + 2 (|p|^2 + 1) u0   (up to a positive factor)
    const double pu = dot(p, u0);
    const double s = dot(p, p);
    std::vector<double> w(p.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = 4.0 * pu * cz[i] - 4.0 * pu * p[i] + 2.0 * (s + 1.0) * u0[i];
    return normalized(w);
}

Configuration Configuration::make(std::vector<Point> points) {
    if (points.empty()) throw EmptyConfiguration("configuration needs at least one point");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!same_space(points[0], points[i]))
            throw DimensionMismatch("configuration points live in different spaces");
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = distance(points[i], points[j]);
            if (d <= kTol) {
                std::ostringstream os;
                os << "points " << i << " and " << j << " coincide (distance " << d << ")";
                throw DuplicatePoint(os.str());
            }
            sep = std::min(sep, d);
        }
    return Configuration(std::move(points), sep);
}

Configuration Configuration::from_point(const Point& p) {
    if (!p.is_tuple()) return Configuration::make({p});
    return Configuration::make(p.components());
}

}  // namespace tcplan
