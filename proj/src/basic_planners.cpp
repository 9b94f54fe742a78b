#include "tcplan/basic_planners.hpp"

#include <cmath>

namespace tcplan {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_sphere_of_dim(const Point& p, std::size_t dim) {
    return p.kind() == Point::Kind::Sphere && p.coords().size() == dim;
}

std::vector<double> negated(const std::vector<double>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

/// Great-circle sweep c(s) = x cos(pi s) + v sin(pi s), from x to -x.
ParamPath::SegmentFn half_circle(std::vector<double> x, std::vector<double> v) {
    return [x = std::move(x), v = std::move(v)](double s) {
        std::vector<double> out(x.size());
        const double c = std::cos(kPi * s), sn = std::sin(kPi * s);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * x[i] + sn * v[i];
        return Point::sphere(std::move(out));
    };
}

/// Path following `main` (which ends at `main_end`), closed up to the true
/// target y by a short geodesic when the tie-break dispatched a pair that is
/// only antipodal up to the predicate tolerance. Exact inputs keep the bare
/// formula and its time scale.
ParamPath close_to_target(ParamPath::SegmentFn main, const Point& start,
                          const Point& main_end, const Point& y) {
    if (distance(main_end, y) <= kTol)
        return ParamPath({0.0, 1.0}, {std::move(main)}, start, y);
    ParamPath closing = ParamPath::geodesic(main_end, y);
    auto close_fn = [closing](double s) { return closing.eval(s); };
    const double knot = 1.0 - 1.0 / 64.0;
    return ParamPath({0.0, knot, 1.0}, {std::move(main), std::move(close_fn)}, start, y);
}

}  // namespace

Planner sphere_planner(int m, const Point& z) {
    if (m < 1) throw Error("sphere planner needs m >= 1");
    const std::size_t dim = static_cast<std::size_t>(m) + 1;
    if (!is_sphere_of_dim(z, dim)) throw DimensionMismatch("marked point z must lie on S^m");

    const std::vector<double> zc = z.coords();
    const std::vector<double> w = reference_orthogonal(zc);
    const auto shaped = [dim](const Point& a, const Point& b) {
        return is_sphere_of_dim(a, dim) && is_sphere_of_dim(b, dim);
    };

    const auto nonantipodal = [](const Point& a, const Point& b) {
        return dot(a.coords(), b.coords()) > -1.0 + kTol;
    };
    const auto away_from_z = [zc](const Point& a) {
        std::vector<double> d(zc.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coords()[i] - zc[i];
        return norm(d) > kTol;
    };

    Rule r1;
    r1.id = 1;
    r1.domain = [=](const Point& a, const Point& b) {
        return shaped(a, b) && nonantipodal(a, b);
    };
    r1.section = [](const Point& a, const Point& b) { return ParamPath::geodesic(a, b); };
    r1.boundary_margin = [](const Point& a, const Point& b) {
        return dot(a.coords(), b.coords()) - (-1.0 + kTol);
    };

    Rule r2;
    r2.id = 2;
    r2.domain = [=](const Point& a, const Point& b) {
        return shaped(a, b) && !nonantipodal(a, b) && away_from_z(a);
    };
    r2.section = [z](const Point& a, const Point& b) {
        const std::vector<double> v = tangent_field(z, a);
        Point formula_end = Point::sphere(negated(a.coords()));
        return close_to_target(half_circle(a.coords(), v), a, formula_end, b);
    };
    r2.boundary_margin = [=](const Point& a, const Point& b) {
        const double anti = (-1.0 + kTol) - dot(a.coords(), b.coords());
        return std::min(anti, distance(a, z) - kTol);
    };

    Rule r3;
    r3.id = 3;
    r3.domain = [=](const Point& a, const Point& b) {
        return shaped(a, b) && !nonantipodal(a, b) && !away_from_z(a);
    };
    r3.section = [zc, w](const Point& a, const Point& b) {
        Point formula_end = Point::sphere(negated(zc));
        return close_to_target(half_circle(zc, w), a, formula_end, b);
    };
    r3.boundary_margin = [=](const Point& a, const Point& b) {
        const double anti = (-1.0 + kTol) - dot(a.coords(), b.coords());
        return std::min(anti, kTol - distance(a, z));
    };

    const std::string desc = "S^" + std::to_string(m);
    return Planner({r1, r2, r3}, CoverageMode::Partition, desc, desc, desc);
}

ParamPath line_sigma_path(int anchor, double x, double y) {
    if (anchor != 0 && anchor != 1) throw Error("anchor must be 0 or 1");
    const double c = static_cast<double>(anchor);
    auto inbound = [x, c](double s) { return Point::euclidean1((1.0 - s) * x + s * c); };
    auto outbound = [y, c](double s) { return Point::euclidean1(s * y + (1.0 - s) * c); };
    return ParamPath({0.0, 0.5, 1.0}, {std::move(inbound), std::move(outbound)},
                     Point::euclidean1(x), Point::euclidean1(y));
}

Planner line_sigma_planner(int anchor) {
    if (anchor != 0 && anchor != 1) throw Error("anchor must be 0 or 1");
    Rule r;
    r.id = 1;
    r.domain = [](const Point& a, const Point& b) {
        return a.kind() == Point::Kind::Euclidean && a.coords().size() == 1 &&
               b.kind() == Point::Kind::Euclidean && b.coords().size() == 1;
    };
    r.section = [anchor](const Point& a, const Point& b) {
        return line_sigma_path(anchor, a.scalar(), b.scalar());
    };
    return Planner({r}, CoverageMode::Partition, "R", "R", "R");
}

namespace {

bool is_line_pair(const Point& p) {
    if (!p.is_tuple() || p.components().size() != 2) return false;
    for (const auto& c : p.components())
        if (c.kind() != Point::Kind::Euclidean || c.coords().size() != 1) return false;
    return true;
}

}  // namespace

Planner c2_line_planner() {
    Rule r;
    r.id = 1;
    r.domain = [](const Point& a, const Point& b) { return is_line_pair(a) && is_line_pair(b); };
    r.section = [](const Point& a, const Point& b) {
        const double x1 = a.components()[0].scalar(), x2 = a.components()[1].scalar();
        const double y1 = b.components()[0].scalar(), y2 = b.components()[1].scalar();
        if (std::abs(x1 - x2) <= kTol)
            throw InvalidConfiguration("start is not a two-point configuration");
        if (std::abs(y1 - y2) <= kTol)
            throw InvalidConfiguration("end is not a two-point configuration");
        const int anchor = x1 < x2 ? 0 : 1;
        std::vector<ParamPath> comps;
        comps.push_back(line_sigma_path(anchor, x1, y1));
        comps.push_back(line_sigma_path(anchor, x2, y2));
        return product_path(std::move(comps));
    };
    return Planner({r}, CoverageMode::Partition, "C^2(R)", "C^2(R)", "R^2");
}

Planner join_planner(std::string y1_desc, std::string y2_desc) {
    Rule r;
    r.id = 1;
    r.domain = [](const Point& a, const Point& b) {
        return a.kind() == Point::Kind::Join && a.join_t() == 0.0 &&
               b.kind() == Point::Kind::Join && b.join_t() == 1.0;
    };
    r.section = [](const Point& a, const Point& b) {
        const Point l = a.left();
        const Point rgt = b.right();
        auto sweep = [l, rgt](double s) { return Point::join(l, rgt, s); };
        return ParamPath::from_function(std::move(sweep), Point::join_left(l),
                                        Point::join_right(rgt));
    };
    const std::string amb = y1_desc + " * " + y2_desc;
    return Planner({r}, CoverageMode::Partition, std::move(y1_desc), std::move(y2_desc), amb);
}

}  // namespace tcplan
