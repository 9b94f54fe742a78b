#include "tcplan/path.hpp"

#include <algorithm>
#include <memory>
#include <cmath>
#include <sstream>

namespace tcplan {

ParamPath::ParamPath(std::vector<double> breakpoints, std::vector<SegmentFn> segments,
                     Point start, Point end)
    : breakpoints_(std::move(breakpoints)),
      segments_(std::move(segments)),
      start_(std::move(start)),
      end_(std::move(end)) {
    if (breakpoints_.size() < 2 || segments_.size() != breakpoints_.size() - 1)
        throw Error("path needs r+1 breakpoints for r segments");
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
        throw Error("path breakpoints must span [0,1]");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] > breakpoints_[i - 1]))
            throw Error("path breakpoints must be strictly increasing");
    for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
        const double gap = distance(segments_[i](1.0), segments_[i + 1](0.0));
        if (gap > kTol) {
            std::ostringstream os;
            os << "segments " << i << " and " << i + 1 << " disagree at breakpoint by " << gap;
            throw EndpointMismatch(os.str());
        }
    }
    if (distance(segments_.front()(0.0), start_) > kTol)
        throw EndpointMismatch("cached start disagrees with first segment");
    if (distance(segments_.back()(1.0), end_) > kTol)
        throw EndpointMismatch("cached end disagrees with last segment");
}

ParamPath ParamPath::constant(const Point& p) {
    return from_function([p](double) { return p; }, p, p);
}

ParamPath ParamPath::from_function(SegmentFn f, Point start, Point end) {
    return ParamPath({0.0, 1.0}, {std::move(f)}, std::move(start), std::move(end));
}

ParamPath ParamPath::geodesic(const Point& a, const Point& b) {
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    if (a.kind() != Point::Kind::Sphere || b.kind() != Point::Kind::Sphere)
        throw DimensionMismatch("geodesic requires sphere points");
    if (ca.size() != cb.size()) throw DimensionMismatch("sphere dimensions differ");
    const double c = std::clamp(dot(ca, cb), -1.0, 1.0);
    if (c <= -1.0 + kTol)
        throw Error("geodesic undefined for antipodal endpoints");
    const double theta = std::acos(c);
    if (theta < 1e-8) {
        // nearly coincident: normalized linear interpolation is exact enough
        auto f = [ca, cb](double t) {
            std::vector<double> v(ca.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = (1.0 - t) * ca[i] + t * cb[i];
            return Point::sphere(normalized(v));
        };
        return from_function(std::move(f), a, b);
    }
    // u = unit vector completing {a, u} to an orthonormal frame of the arc
    std::vector<double> u(ca.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = cb[i] - c * ca[i];
    u = normalized(u);
    auto f = [ca, u, theta](double t) {
        std::vector<double> v(ca.size());
        const double ct = std::cos(t * theta), st = std::sin(t * theta);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = ct * ca[i] + st * u[i];
        return Point::sphere(std::move(v));
    };
    return from_function(std::move(f), a, b);
}

ParamPath ParamPath::linear(const Point& a, const Point& b) {
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    if (ca.size() != cb.size()) throw DimensionMismatch("point dimensions differ");
    auto f = [ca, cb](double t) {
        std::vector<double> v(ca.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (1.0 - t) * ca[i] + t * cb[i];
        return Point::euclidean(std::move(v));
    };
    return from_function(std::move(f), a, b);
}

Point ParamPath::eval(double t) const {
    if (t <= 0.0) return start_;
    if (t >= 1.0) return end_;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) idx = 1;
    if (idx >= breakpoints_.size()) idx = breakpoints_.size() - 1;
    const double lo = breakpoints_[idx - 1], hi = breakpoints_[idx];
    return segments_[idx - 1]((t - lo) / (hi - lo));
}

ParamPath concat_paths(const ParamPath& first, const ParamPath& second, double split) {
    if (!(split > 0.0 && split < 1.0)) throw Error("split must lie in (0,1)");
    const double gap = distance(first.end(), second.start());
    if (gap > kTol) {
        std::ostringstream os;
        os << "paths do not chain: endpoint gap " << gap;
        throw EndpointMismatch(os.str());
    }
    std::vector<double> bks;
    std::vector<ParamPath::SegmentFn> segs;
    bks.push_back(0.0);
    for (std::size_t i = 1; i < first.breakpoints_.size(); ++i)
        bks.push_back(first.breakpoints_[i] * split);
    for (std::size_t i = 1; i < second.breakpoints_.size(); ++i)
        bks.push_back(split + second.breakpoints_[i] * (1.0 - split));
    bks.back() = 1.0;
    for (const auto& s : first.segments_) segs.push_back(s);
    for (const auto& s : second.segments_) segs.push_back(s);
    return ParamPath(std::move(bks), std::move(segs), first.start(), second.end());
}

ParamPath reparametrize(const ParamPath& path, double t0, double t1) {
    if (!(t0 < t1) || t0 < 0.0 || t1 > 1.0)
        throw Error("reparametrize window must be a subinterval of [0,1]");
    auto f = [path, t0, t1](double s) { return path.eval(t0 + s * (t1 - t0)); };
    Point start = path.eval(t0);
    Point end = path.eval(t1);
    return ParamPath::from_function(std::move(f), std::move(start), std::move(end));
}

ParamPath product_path(std::vector<ParamPath> components) {
    if (components.empty()) throw Error("product path needs at least one component");
    std::vector<double> bks;
    for (const auto& c : components)
        bks.insert(bks.end(), c.breakpoints().begin(), c.breakpoints().end());
    std::sort(bks.begin(), bks.end());
    bks.erase(std::unique(bks.begin(), bks.end()), bks.end());

    auto comps = std::make_shared<const std::vector<ParamPath>>(std::move(components));
    auto at = [comps](double t) {
        std::vector<Point> pts;
        pts.reserve(comps->size());
        for (const auto& c : *comps) pts.push_back(c.eval(t));
        return Point::tuple(std::move(pts));
    };

    std::vector<ParamPath::SegmentFn> segs;
    for (std::size_t i = 0; i + 1 < bks.size(); ++i) {
        const double lo = bks[i], hi = bks[i + 1];
        segs.push_back([at, lo, hi](double s) { return at(lo + s * (hi - lo)); });
    }
    std::vector<Point> starts, ends;
    for (const auto& c : *comps) {
        starts.push_back(c.start());
        ends.push_back(c.end());
    }
    return ParamPath(std::move(bks), std::move(segs), Point::tuple(std::move(starts)),
                     Point::tuple(std::move(ends)));
}

}  // namespace tcplan
