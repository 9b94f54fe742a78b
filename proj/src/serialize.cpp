#include "tcplan/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace tcplan {

using nlohmann::json;

json point_to_json(const Point& p) {
    json j;
    switch (p.kind()) {
        case Point::Kind::Euclidean:
            j["space"] = "euclidean";
            j["coords"] = p.coords();
            break;
        case Point::Kind::Sphere:
            j["space"] = "sphere";
            j["coords"] = p.coords();
            break;
        case Point::Kind::Cylinder:
            j["space"] = "cylinder";
            j["base"] = point_to_json(p.base());
            j["height"] = p.height();
            break;
        case Point::Kind::Join:
            j["space"] = "join";
            j["t"] = p.join_t();
            if (p.has_left()) j["left"] = point_to_json(p.left());
            if (p.has_right()) j["right"] = point_to_json(p.right());
            break;
        case Point::Kind::Tuple: {
            j["space"] = "tuple";
            json pts = json::array();
            for (const auto& c : p.components()) pts.push_back(point_to_json(c));
            j["points"] = std::move(pts);
            break;
        }
    }
    return j;
}

Point point_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space"))
        throw ParseError("point needs a \"space\" tag");
    const std::string space = j["space"].get<std::string>();
    if (space == "euclidean" || space == "sphere") {
        if (!j.contains("coords") || !j["coords"].is_array())
            throw ParseError("coordinate point needs a coords array");
        std::vector<double> c = j["coords"].get<std::vector<double>>();
        return space == "sphere" ? Point::sphere(std::move(c))
                                 : Point::euclidean(std::move(c));
    }
    if (space == "cylinder") {
        if (!j.contains("base") || !j.contains("height"))
            throw ParseError("cylinder point needs base and height");
        return Point::cylinder(point_from_json(j["base"]), j["height"].get<double>());
    }
    if (space == "join") {
        const double t = j.value("t", 0.0);
        if (t == 0.0) {
            if (!j.contains("left")) throw ParseError("join point at t=0 needs a left slot");
            return Point::join_left(point_from_json(j["left"]));
        }
        if (t == 1.0) {
            if (!j.contains("right")) throw ParseError("join point at t=1 needs a right slot");
            return Point::join_right(point_from_json(j["right"]));
        }
        if (!j.contains("left") || !j.contains("right"))
            throw ParseError("interior join point needs both slots");
        return Point::join(point_from_json(j["left"]), point_from_json(j["right"]), t);
    }
    if (space == "tuple" || space == "configuration") {
        if (!j.contains("points") || !j["points"].is_array())
            throw ParseError("tuple point needs a points array");
        std::vector<Point> pts;
        for (const auto& q : j["points"]) pts.push_back(point_from_json(q));
        return Point::tuple(std::move(pts));
    }
    throw ParseError("unknown space tag '" + space + "'");
}

json path_to_json(int rule_id, const ParamPath& path, int samples) {
    json j;
    j["rule"] = rule_id;
    j["breakpoints"] = path.breakpoints();
    json arr = json::array();
    for (int i = 0; i < samples; ++i) {
        const double t = samples > 1 ? static_cast<double>(i) / (samples - 1) : 0.0;
        arr.push_back({{"t", t}, {"point", point_to_json(path.eval(t))}});
    }
    j["samples"] = std::move(arr);
    return j;
}

namespace {

struct CsvShape {
    std::size_t coord_count = 0;
    bool has_height = false;
};

CsvShape csv_shape(const Point& p) {
    switch (p.kind()) {
        case Point::Kind::Euclidean:
        case Point::Kind::Sphere:
            return {p.coords().size(), false};
        case Point::Kind::Cylinder: {
            CsvShape s = csv_shape(p.base());
            s.has_height = true;
            return s;
        }
        case Point::Kind::Tuple:
            return csv_shape(p.components()[0]);
        case Point::Kind::Join:
            throw Error("join paths have no CSV encoding; use the JSON format");
    }
    return {};
}

void csv_row(std::ostringstream& os, int query_id, int robot, double t, const Point& p) {
    os << query_id << "," << robot << "," << t;
    const Point& flat = p.kind() == Point::Kind::Cylinder ? p.base() : p;
    for (double c : flat.coords()) os << "," << c;
    if (p.kind() == Point::Kind::Cylinder) os << "," << p.height();
    os << "\n";
}

}  // namespace

std::string path_to_csv(int query_id, int rule_id, const ParamPath& path, int samples,
                        bool header) {
    std::ostringstream os;
    os << std::setprecision(17);
    const CsvShape shape = csv_shape(path.start());
    if (header) {
        os << "query_id,robot_index,t";
        for (std::size_t i = 0; i < shape.coord_count; ++i) os << ",coord_" << i;
        if (shape.has_height) os << ",height";
        os << "\n";
    }
    os << "# query " << query_id << " dispatched to rule " << rule_id << "\n";
    for (int i = 0; i < samples; ++i) {
        const double t = samples > 1 ? static_cast<double>(i) / (samples - 1) : 0.0;
        const Point slice = path.eval(t);
        if (slice.is_tuple()) {
            int robot = 0;
            for (const auto& c : slice.components()) csv_row(os, query_id, robot++, t, c);
        } else {
            csv_row(os, query_id, 0, t, slice);
        }
    }
    return os.str();
}

json report_to_json(const verify::Report& report) {
    json j;
    j["planner"] = report.planner_id;
    j["seed"] = report.seed;
    j["samples"] = report.requested_samples;
    j["rules"] = report.rules;
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"value", c.value},
                          {"samples", c.samples},
                          {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["all_passed"] = report.all_passed();
    return j;
}

std::string report_summary(const verify::Report& report) {
    std::ostringstream os;
    os << "planner " << report.planner_id << " (" << report.rules << " rules), seed "
       << report.seed << ", " << report.requested_samples << " samples\n";
    for (const auto& c : report.checks)
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << std::setw(11) << std::left
           << c.name << " " << c.detail << "\n";
    os << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

json bound_report_to_json(const bounds::BoundReport& report) {
    json j;
    j["quantity"] = report.quantity;
    j["lower"] = {{"value", report.lower.value}, {"by", report.lower.by}};
    if (report.upper)
        j["upper"] = {{"value", report.upper->value}, {"by", report.upper->by}};
    j["notes"] = report.notes;
    return j;
}

}  // namespace tcplan
