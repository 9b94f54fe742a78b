#include "tcplan/combinators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

namespace tcplan {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;

/// Base rule index of every component pair, when all components dispatch.
std::optional<std::vector<int>> component_indices(const Planner& base, int n,
                                                  const Point& a, const Point& b) {
    if (!a.is_tuple() || !b.is_tuple()) return std::nullopt;
    if (static_cast<int>(a.components().size()) != n ||
        static_cast<int>(b.components().size()) != n)
        return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        try {
            idx[static_cast<std::size_t>(i)] =
                base.rule_index(a.components()[static_cast<std::size_t>(i)],
                                b.components()[static_cast<std::size_t>(i)]);
        } catch (const Uncovered&) {
            return std::nullopt;
        }
    }
    return idx;
}

Point drop_heights(const Point& p) {
    if (p.kind() == Point::Kind::Cylinder) return p.base();
    if (!p.is_tuple()) return p;
    std::vector<Point> comps;
    comps.reserve(p.components().size());
    for (const auto& c : p.components())
        comps.push_back(c.kind() == Point::Kind::Cylinder ? c.base() : c);
    return Point::tuple(std::move(comps));
}

/// Evaluator for a dispatched path, restricted to the plateau phase when the
/// planner was built by lift_planner (so the base path is recovered exactly).
ParamPath::SegmentFn plateau_eval(ParamPath path, bool three_phase) {
    if (!three_phase)
        return [p = std::move(path)](double t) { return p.eval(t); };
    return [p = std::move(path)](double t) { return p.eval((t + 1.0) / 3.0); };
}

}  // namespace

Planner graded_product_planner(const Planner& base, int n) {
    if (base.mode() != CoverageMode::Partition)
        throw NotPartition("graded product requires a partition-mode base planner");
    if (n < 1) throw Error("graded product needs n >= 1");
    const int r = static_cast<int>(base.rule_count());
    for (int i = 1; i <= r; ++i) base.rule_by_id(i);  // rules must be indexed 1..r

    auto base_sp = std::make_shared<const Planner>(base);
    std::vector<Rule> rules;
    for (int grade = n; grade <= r * n; ++grade) {
        Rule rule;
        rule.id = grade;
        rule.domain = [base_sp, n, grade](const Point& a, const Point& b) {
            const auto idx = component_indices(*base_sp, n, a, b);
            if (!idx) return false;
            int sum = 0;
            for (int i : *idx) sum += i;
            return sum == grade;
        };
        rule.section = [base_sp, n](const Point& a, const Point& b) {
            std::vector<ParamPath> comps;
            comps.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                comps.push_back(base_sp
                                    ->dispatch(a.components()[static_cast<std::size_t>(i)],
                                               b.components()[static_cast<std::size_t>(i)])
                                    .path);
            return product_path(std::move(comps));
        };
        rule.boundary_margin = [base_sp, n](const Point& a, const Point& b) {
            double m = std::numeric_limits<double>::infinity();
            for (int i = 0; i < n; ++i) {
                const Point& ai = a.components()[static_cast<std::size_t>(i)];
                const Point& bi = b.components()[static_cast<std::size_t>(i)];
                const Rule& br = base_sp->rule_by_id(base_sp->rule_index(ai, bi));
                if (br.boundary_margin) m = std::min(m, br.boundary_margin(ai, bi));
            }
            return m;
        };
        rules.push_back(std::move(rule));
    }
    const std::string desc = base.source_desc() + "^" + std::to_string(n);
    return Planner(std::move(rules), CoverageMode::Partition, desc, desc, desc);
}

Planner restrict_to_configurations(const Planner& product, const Point& z) {
    if (z.kind() != Point::Kind::Sphere)
        throw DimensionMismatch("marked point z must be a sphere point");
    int lo = product.rules().front().id;
    int hi = lo;
    for (const auto& r : product.rules()) {
        lo = std::min(lo, r.id);
        hi = std::max(hi, r.id);
    }
    const int n = lo;
    if (hi != 3 * n)
        throw Error("expected a graded power of a three-rule planner (grades n..3n)");
    const int top = 2 * n + 1;

    std::vector<Rule> kept;
    for (const auto& r : product.rules())
        if (r.id <= top) kept.push_back(r);

    auto all_rules = std::make_shared<const std::vector<Rule>>(product.rules());
    const std::string desc = "C^" + std::to_string(n) + "(" + product.source_desc() + ")";
    Planner out(std::move(kept), CoverageMode::Partition, desc, desc,
                product.ambient_desc());
    out.set_uncovered_diagnoser([all_rules, top](const Point& a, const Point& b) {
        for (const auto& r : *all_rules) {
            if (r.id <= top) continue;
            if (r.domain(a, b)) {
                std::ostringstream os;
                os << "pair needs grade " << r.id << " > " << top
                   << "; the input is not a configuration pair";
                throw GradeOverflow(os.str());
            }
        }
    });
    return out;
}

Planner lift_planner(const Planner& base) {
    std::vector<Rule> rules;
    for (const auto& br : base.rules()) {
        Rule rule;
        rule.id = br.id;
        rule.domain = br.domain;
        rule.boundary_margin = br.boundary_margin;
        rule.section = [section = br.section](const Point& a, const Point& b) {
            ParamPath base_path = section(a, b);
            const std::vector<Point> av = a.components();
            const std::vector<Point> bv = b.components();
            const std::size_t n = av.size();

            auto at_heights = [n](const std::vector<Point>& pts, double scale) {
                std::vector<Point> out;
                out.reserve(n);
                for (std::size_t j = 0; j < pts.size(); ++j)
                    out.push_back(Point::cylinder(pts[j], scale / static_cast<double>(j + 1)));
                return Point::tuple(std::move(out));
            };

            auto ascend = [av, at_heights](double s) { return at_heights(av, s); };
            auto plateau = [bp = std::move(base_path), at_heights](double s) {
                return at_heights(bp.eval(s).components(), 1.0);
            };
            auto descend = [bv, at_heights](double s) { return at_heights(bv, 1.0 - s); };

            Point start = at_heights(av, 0.0);
            Point end = at_heights(bv, 0.0);
            return ParamPath({0.0, kThird, kTwoThirds, 1.0},
                             {std::move(ascend), std::move(plateau), std::move(descend)},
                             std::move(start), std::move(end));
        };
        rules.push_back(std::move(rule));
    }
    const std::string amb = "C^n(" + base.ambient_desc() + " x I)";
    Planner out(std::move(rules), base.mode(), base.source_desc(), base.target_desc(), amb);
    out.mark_three_phase_lift();
    return out;
}

Planner project_planner(const Planner& lifted) {
    const bool three_phase = lifted.three_phase_lift();
    std::vector<Rule> rules;
    for (const auto& lr : lifted.rules()) {
        Rule rule;
        rule.id = lr.id;
        rule.domain = lr.domain;
        rule.boundary_margin = lr.boundary_margin;
        rule.section = [section = lr.section, three_phase](const Point& a, const Point& b) {
            auto at = plateau_eval(section(a, b), three_phase);
            Point start = drop_heights(at(0.0));
            Point end = drop_heights(at(1.0));
            auto f = [at](double t) { return drop_heights(at(t)); };
            return ParamPath::from_function(std::move(f), std::move(start), std::move(end));
        };
        rules.push_back(std::move(rule));
    }
    return Planner(std::move(rules), lifted.mode(), lifted.source_desc(),
                   lifted.target_desc(), lifted.source_desc());
}

Planner section_from_nullhomotopies(Homotopy g, Homotopy h, ParamPath sigma,
                                    const std::vector<Point>& y1_samples,
                                    const std::vector<Point>& y2_samples,
                                    std::string y1_desc, std::string y2_desc,
                                    std::string ambient_desc) {
    const Point x1 = sigma.start();
    const Point x2 = sigma.end();
    for (const auto& y : y1_samples) {
        if (distance(g(0.0, y), y) > kTol)
            throw HomotopyEndpointMismatch("g does not start at the inclusion at " +
                                           y.describe());
        if (distance(g(1.0, y), x1) > kTol)
            throw HomotopyEndpointMismatch("g does not end at the constant sigma(0) at " +
                                           y.describe());
    }
    for (const auto& y : y2_samples) {
        if (distance(h(0.0, y), y) > kTol)
            throw HomotopyEndpointMismatch("h does not start at the inclusion at " +
                                           y.describe());
        if (distance(h(1.0, y), x2) > kTol)
            throw HomotopyEndpointMismatch("h does not end at the constant sigma(1) at " +
                                           y.describe());
    }

    auto sigma_sp = std::make_shared<const ParamPath>(std::move(sigma));
    Rule rule;
    rule.id = 1;
    rule.domain = [](const Point&, const Point&) { return true; };
    rule.section = [g, h, sigma_sp](const Point& a, const Point& b) {
        auto contract = [g, a](double s) { return g(s, a); };
        auto ride = [sigma_sp](double s) { return sigma_sp->eval(s); };
        auto expand = [h, b](double s) { return h(1.0 - s, b); };
        return ParamPath({0.0, kThird, kTwoThirds, 1.0},
                         {std::move(contract), std::move(ride), std::move(expand)}, a, b);
    };
    return Planner({std::move(rule)}, CoverageMode::Partition, std::move(y1_desc),
                   std::move(y2_desc), std::move(ambient_desc));
}

Planner transport_planner(const Planner& base, PointMap f, PointMap pull1, PointMap pull2,
                          Homotopy h1, Homotopy h2,
                          const std::vector<Point>& y1_samples,
                          const std::vector<Point>& y2_samples, std::string ambient_desc) {
    auto check = [&](const Homotopy& hh, const PointMap& pull, const Point& y,
                     const char* name) {
        if (distance(hh(0.0, y), y) > kTol)
            throw HomotopyEndpointMismatch(std::string(name) +
                                           " does not start at the inclusion at " +
                                           y.describe());
        if (distance(hh(1.0, y), f(pull(y))) > kTol)
            throw HomotopyEndpointMismatch(std::string(name) +
                                           " does not end at f(pullback(y)) at " +
                                           y.describe());
    };
    for (const auto& y : y1_samples) check(h1, pull1, y, "H1");
    for (const auto& y : y2_samples) check(h2, pull2, y, "H2");

    std::vector<Rule> rules;
    for (const auto& br : base.rules()) {
        Rule rule;
        rule.id = br.id;
        rule.domain = [domain = br.domain, pull1, pull2](const Point& a, const Point& b) {
            return domain(pull1(a), pull2(b));
        };
        if (br.boundary_margin)
            rule.boundary_margin = [margin = br.boundary_margin, pull1, pull2](
                                       const Point& a, const Point& b) {
                return margin(pull1(a), pull2(b));
            };
        rule.section = [section = br.section, f, pull1, pull2, h1, h2](const Point& a,
                                                                       const Point& b) {
            ParamPath base_path = section(pull1(a), pull2(b));
            auto inbound = [h1, a](double s) { return h1(s, a); };
            auto trace = [f, bp = std::move(base_path)](double s) { return f(bp.eval(s)); };
            auto outbound = [h2, b](double s) { return h2(1.0 - s, b); };
            return ParamPath({0.0, kThird, kTwoThirds, 1.0},
                             {std::move(inbound), std::move(trace), std::move(outbound)}, a,
                             b);
        };
        rules.push_back(std::move(rule));
    }
    return Planner(std::move(rules), base.mode(), base.source_desc() + "'",
                   base.target_desc() + "'", std::move(ambient_desc));
}

namespace {

Planner extract_through(const Planner& config_planner, PointMap embed, PointMap value,
                        std::string space_desc) {
    const bool three_phase = config_planner.three_phase_lift();
    std::vector<Rule> rules;
    for (const auto& br : config_planner.rules()) {
        Rule rule;
        rule.id = br.id;
        rule.domain = [domain = br.domain, embed](const Point& a, const Point& b) {
            return domain(embed(a), embed(b));
        };
        if (br.boundary_margin)
            rule.boundary_margin = [margin = br.boundary_margin, embed](const Point& a,
                                                                        const Point& b) {
                return margin(embed(a), embed(b));
            };
        rule.section = [section = br.section, embed, value, three_phase](const Point& a,
                                                                         const Point& b) {
            auto at = plateau_eval(section(embed(a), embed(b)), three_phase);
            auto fn = [at, value](double t) { return value(at(t)); };
            Point start = fn(0.0);
            Point end = fn(1.0);
            return ParamPath::from_function(std::move(fn), std::move(start), std::move(end));
        };
        rules.push_back(std::move(rule));
    }
    return Planner(std::move(rules), config_planner.mode(), space_desc, space_desc,
                   space_desc);
}

}  // namespace

Planner extract_fixed_point_free(const Planner& config_planner, std::vector<PointMap> maps,
                                 const std::vector<Point>& y_samples) {
    if (maps.empty()) throw Error("extract_fixed_point_free needs at least one map");
    for (const auto& y : y_samples) {
        for (std::size_t i = 0; i < maps.size(); ++i) {
            if (distance(maps[i](y), y) <= kTol) {
                std::ostringstream os;
                os << "f_" << i + 1 << " fixes " << y.describe();
                throw NotFixedPointFree(os.str());
            }
            for (std::size_t j = i + 1; j < maps.size(); ++j)
                if (distance(maps[i](y), maps[j](y)) <= kTol) {
                    std::ostringstream os;
                    os << "f_" << i + 1 << " and f_" << j + 1 << " agree at " << y.describe();
                    throw NotFixedPointFree(os.str());
                }
        }
    }
    auto maps_sp = std::make_shared<const std::vector<PointMap>>(std::move(maps));
    PointMap embed = [maps_sp](const Point& y) {
        std::vector<Point> comps;
        comps.reserve(maps_sp->size() + 1);
        comps.push_back(y);
        for (const auto& f : *maps_sp) comps.push_back(f(y));
        return Point::tuple(std::move(comps));
    };
    PointMap value = [](const Point& slice) {
        const Point& first = slice.is_tuple() ? slice.components()[0] : slice;
        return first.kind() == Point::Kind::Cylinder ? first.base() : first;
    };
    return extract_through(config_planner, std::move(embed), std::move(value), "Y");
}

Planner extract_via_retract(const Planner& config_planner, PointMap retraction,
                            std::vector<Point> anchors,
                            std::function<bool(const Point&)> in_y,
                            const std::vector<Point>& y_samples) {
    if (anchors.empty()) throw Error("extract_via_retract needs at least one anchor");
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (in_y(anchors[i]))
            throw AnchorInY("anchor " + anchors[i].describe() + " lies inside Y");
        for (std::size_t j = i + 1; j < anchors.size(); ++j)
            if (distance(anchors[i], anchors[j]) <= kTol)
                throw Error("anchors must be pairwise distinct");
    }
    for (const auto& y : y_samples)
        if (distance(retraction(y), y) > kTol)
            throw NotRetraction("retraction moves " + y.describe() + " to " +
                                retraction(y).describe());

    auto anchors_sp = std::make_shared<const std::vector<Point>>(std::move(anchors));
    PointMap embed = [anchors_sp](const Point& y) {
        std::vector<Point> comps;
        comps.reserve(anchors_sp->size() + 1);
        comps.push_back(y);
        for (const auto& z : *anchors_sp) comps.push_back(z);
        return Point::tuple(std::move(comps));
    };
    PointMap value = [retraction](const Point& slice) {
        const Point& first = slice.is_tuple() ? slice.components()[0] : slice;
        return retraction(first.kind() == Point::Kind::Cylinder ? first.base() : first);
    };
    return extract_through(config_planner, std::move(embed), std::move(value), "Y");
}

}  // namespace tcplan
