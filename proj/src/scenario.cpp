#include "tcplan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "tcplan/basic_planners.hpp"
#include "tcplan/combinators.hpp"
#include "tcplan/serialize.hpp"

namespace tcplan {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

Point north_pole(int m) {
    std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
    c.back() = 1.0;
    return Point::sphere(std::move(c));
}

Point parse_z(const json& spec, int m) {
    if (!spec.contains("z")) return north_pole(m);
    return Point::sphere(spec["z"].get<std::vector<double>>());
}

int require_int(const json& spec, const char* key, int lo) {
    if (!spec.contains(key) || !spec[key].is_number_integer())
        throw ParseError(std::string("planner spec needs integer \"") + key + "\"");
    const int v = spec[key].get<int>();
    if (v < lo)
        throw ParseError(std::string("planner parameter \"") + key + "\" must be >= " +
                         std::to_string(lo));
    return v;
}

std::vector<Point> line_samples() {
    std::vector<Point> out;
    for (int i = -10; i <= 10; ++i) out.push_back(Point::euclidean1(0.5 * i));
    return out;
}

std::vector<Point> interval_samples() {
    std::vector<Point> out;
    for (int i = 1; i <= 19; ++i) out.push_back(Point::euclidean1(0.05 * i));
    return out;
}

std::vector<Point> interval_config_samples() {
    std::vector<Point> out;
    for (int i = 1; i <= 6; ++i)
        out.push_back(Point::tuple({Point::euclidean1(0.15 + 0.05 * i),
                                    Point::euclidean1(0.85 - 0.04 * i)}));
    return out;
}

PointMap componentwise(std::function<double(double)> f) {
    return [f = std::move(f)](const Point& p) -> Point {
        if (p.is_tuple()) {
            std::vector<Point> comps;
            comps.reserve(p.components().size());
            for (const auto& c : p.components())
                comps.push_back(Point::euclidean1(f(c.scalar())));
            return Point::tuple(std::move(comps));
        }
        return Point::euclidean1(f(p.scalar()));
    };
}

/// Lift variant with every robot at the same height: a deliberately broken
/// planner whose plateau slices collide whenever the base paths cross.
Planner corrupted_lift(const Planner& base) {
    std::vector<Rule> rules;
    for (const auto& br : base.rules()) {
        Rule rule;
        rule.id = br.id;
        rule.domain = br.domain;
        rule.boundary_margin = br.boundary_margin;
        rule.section = [section = br.section](const Point& a, const Point& b) {
            ParamPath base_path = section(a, b);
            auto at_height = [](const std::vector<Point>& pts, double h) {
                std::vector<Point> out;
                out.reserve(pts.size());
                for (const auto& p : pts) out.push_back(Point::cylinder(p, h));
                return Point::tuple(std::move(out));
            };
            auto ascend = [av = a.components(), at_height](double s) {
                return at_height(av, s);
            };
            auto plateau = [bp = std::move(base_path), at_height](double s) {
                return at_height(bp.eval(s).components(), 1.0);
            };
            auto descend = [bv = b.components(), at_height](double s) {
                return at_height(bv, 1.0 - s);
            };
            Point start = at_height(a.components(), 0.0);
            Point end = at_height(b.components(), 0.0);
            return ParamPath({0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0},
                             {std::move(ascend), std::move(plateau), std::move(descend)},
                             std::move(start), std::move(end));
        };
        rules.push_back(std::move(rule));
    }
    return Planner(std::move(rules), base.mode(), base.source_desc(), base.target_desc(),
                   base.ambient_desc() + " (equal heights)");
}

/// Sphere planner whose first rule aims at a slightly rotated target: the
/// endpoint check must flag it while cover and continuity stay green.
Planner corrupted_endpoint_sphere(int m, const Point& z) {
    Planner good = sphere_planner(m, z);
    std::vector<Rule> rules = good.rules();
    rules[0].section = [](const Point& a, const Point& b) {
        std::vector<double> c = b.coords();
        const std::vector<double> w = reference_orthogonal(c);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += 0.01 * w[i];
        return ParamPath::geodesic(a, Point::sphere(normalized(c)));
    };
    return Planner(std::move(rules), good.mode(), good.source_desc(), good.target_desc(),
                   good.ambient_desc() + " (skewed rule 1)");
}

}  // namespace

ResolvedPlanner make_planner(const json& spec) {
    if (!spec.is_object() || !spec.contains("family"))
        throw ParseError("planner spec needs a \"family\"");
    const std::string family = spec["family"].get<std::string>();

    auto tag = [&family](std::initializer_list<std::pair<const char*, int>> params) {
        std::string id = family;
        for (const auto& [k, v] : params) id += " " + std::string(k) + "=" + std::to_string(v);
        return id;
    };

    ResolvedPlanner out{Planner({Rule{1, [](const Point&, const Point&) { return true; },
                                      [](const Point& a, const Point&) {
                                          return ParamPath::constant(a);
                                      },
                                      nullptr}},
                                CoverageMode::Partition, "-", "-", "-"),
                        PairSampler{}, family, std::nullopt, false, false};

    if (family == "sphere") {
        const int m = require_int(spec, "m", 1);
        out.planner = sphere_planner(m, parse_z(spec, m));
        out.sampler = sphere_pair_sampler(m);
        out.expected_rules = 3;
        out.id = tag({{"m", m}});
    } else if (family == "line-sigma") {
        const int anchor = require_int(spec, "anchor", 0);
        out.planner = line_sigma_planner(anchor);
        out.sampler = line_pair_sampler();
        out.expected_rules = 1;
        out.id = tag({{"anchor", anchor}});
    } else if (family == "c2-line") {
        out.planner = c2_line_planner();
        out.sampler = c2_line_sampler();
        out.expected_rules = 1;
    } else if (family == "sphere-product") {
        const int m = require_int(spec, "m", 1);
        const int n = require_int(spec, "n", 1);
        out.planner = graded_product_planner(sphere_planner(m, parse_z(spec, m)), n);
        out.sampler = sphere_tuple_sampler(m, n);
        out.expected_rules = static_cast<std::size_t>(2 * n + 1);
        out.id = tag({{"m", m}, {"n", n}});
    } else if (family == "config-sphere-restricted") {
        const int m = require_int(spec, "m", 1);
        const int n = require_int(spec, "n", 1);
        const Point z = parse_z(spec, m);
        out.planner =
            restrict_to_configurations(graded_product_planner(sphere_planner(m, z), n), z);
        out.sampler = sphere_config_sampler(m, n);
        out.expected_rules = static_cast<std::size_t>(n + 2);
        out.id = tag({{"m", m}, {"n", n}});
    } else if (family == "config-sphere-lifted") {
        const int m = require_int(spec, "m", 1);
        const int n = require_int(spec, "n", 1);
        const Point z = parse_z(spec, m);
        out.planner = lift_planner(
            restrict_to_configurations(graded_product_planner(sphere_planner(m, z), n), z));
        out.sampler = sphere_config_sampler(m, n);
        out.expected_rules = static_cast<std::size_t>(n + 2);
        out.collision_check = true;
        out.id = tag({{"m", m}, {"n", n}});
    } else if (family == "c2-line-lifted") {
        out.planner = lift_planner(c2_line_planner());
        out.sampler = c2_line_sampler();
        out.expected_rules = 1;
        out.collision_check = true;
    } else if (family == "join-spheres") {
        const int m1 = require_int(spec, "m1", 1);
        const int m2 = require_int(spec, "m2", 1);
        out.planner = join_planner("S^" + std::to_string(m1), "S^" + std::to_string(m2));
        out.sampler = join_pair_sampler(m1, m2);
        out.expected_rules = 1;
        out.id = tag({{"m1", m1}, {"m2", m2}});
    } else if (family == "line-fpf") {
        std::vector<PointMap> maps{componentwise([](double y) { return y + 1.0; })};
        out.planner = extract_fixed_point_free(lift_planner(c2_line_planner()),
                                               std::move(maps), line_samples());
        out.sampler = line_pair_sampler();
        out.expected_rules = 1;
    } else if (family == "interval-retract") {
        PointMap r = componentwise(
            [](double y) { return std::clamp(y, 1e-9, 1.0 - 1e-9); });
        auto in_y = [](const Point& p) {
            const double x = p.scalar();
            return x > 0.0 && x < 1.0;
        };
        out.planner = extract_via_retract(lift_planner(c2_line_planner()), std::move(r),
                                          {Point::euclidean1(2.0)}, in_y,
                                          interval_samples());
        out.sampler = interval_pair_sampler();
        out.expected_rules = 1;
    } else if (family == "c2-interval-transported") {
        PointMap to_interval =
            componentwise([](double x) { return std::atan(x) / kPi + 0.5; });
        PointMap to_line =
            componentwise([](double u) { return std::tan(kPi * (u - 0.5)); });
        Homotopy constant_in_t = [](double, const Point& p) { return p; };
        const auto samples = interval_config_samples();
        out.planner = transport_planner(c2_line_planner(), to_interval, to_line, to_line,
                                        constant_in_t, constant_in_t, samples, samples,
                                        "(0,1)^2");
        out.sampler = c2_interval_sampler();
        out.expected_rules = 1;
    } else if (family == "fixture-corrupted-endpoint") {
        const int m = require_int(spec, "m", 1);
        out.planner = corrupted_endpoint_sphere(m, parse_z(spec, m));
        out.sampler = sphere_pair_sampler(m);
        out.expected_rules = 3;
        out.fixture = true;
        out.id = tag({{"m", m}});
    } else if (family == "fixture-corrupted-lift") {
        const int m = require_int(spec, "m", 1);
        const int n = require_int(spec, "n", 2);
        const Point z = parse_z(spec, m);
        out.planner = corrupted_lift(
            restrict_to_configurations(graded_product_planner(sphere_planner(m, z), n), z));
        out.sampler = sphere_config_sampler(m, n);
        out.expected_rules = static_cast<std::size_t>(n + 2);
        out.collision_check = true;
        out.fixture = true;
        out.id = tag({{"m", m}, {"n", n}});
    } else {
        throw ParseError("unknown planner family '" + family + "'");
    }
    return out;
}

Scenario load_scenario(const json& j) {
    if (!j.is_object() || !j.contains("planner"))
        throw ParseError("scenario needs a \"planner\" spec");
    Scenario sc{make_planner(j["planner"]), {}, 101, "json"};
    for (const auto& q : j.value("queries", json::array())) {
        if (!q.is_object() || !q.contains("start") || !q.contains("end"))
            throw ParseError("queries need start and end points");
        sc.queries.push_back({point_from_json(q["start"]), point_from_json(q["end"])});
    }
    if (j.contains("output")) {
        const auto& o = j["output"];
        sc.samples = o.value("samples", 101);
        sc.format = o.value("format", "json");
        if (sc.samples < 2) throw ParseError("output.samples must be >= 2");
        if (sc.format != "json" && sc.format != "csv")
            throw ParseError("output.format must be json or csv");
    }
    return sc;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return load_scenario(j);
}

}  // namespace tcplan
