#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "tcplan/algebra_io.hpp"
#include "tcplan/bounds.hpp"
#include "tcplan/scenario.hpp"
#include "tcplan/serialize.hpp"
#include "tcplan/verify.hpp"
#include "tcplan/zcl.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDispatch = 3;
constexpr int kExitInconsistent = 4;

void write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_file);
    if (!out) throw tcplan::ParseError("cannot write " + out_file);
    out << text;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tcplan::ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw tcplan::ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

int run_plan(const std::string& scenario_file, std::optional<int> samples,
             std::optional<std::string> format, const std::string& out_file) {
    tcplan::Scenario sc = tcplan::load_scenario_file(scenario_file);
    if (samples) sc.samples = *samples;
    if (format) sc.format = *format;
    if (sc.samples < 2) throw tcplan::ParseError("--samples must be >= 2");
    if (sc.format != "json" && sc.format != "csv")
        throw tcplan::ParseError("--format must be json or csv");
    if (sc.queries.empty()) throw tcplan::ParseError("scenario has no queries");

    if (sc.format == "json") {
        json out;
        out["planner"] = {{"id", sc.planner.id},
                          {"rules", sc.planner.planner.rule_count()},
                          {"source", sc.planner.planner.source_desc()},
                          {"ambient", sc.planner.planner.ambient_desc()}};
        json queries = json::array();
        for (std::size_t q = 0; q < sc.queries.size(); ++q) {
            const auto& query = sc.queries[q];
            try {
                const auto res = sc.planner.planner.dispatch(query.start, query.end);
                json entry = tcplan::path_to_json(res.rule_id, res.path, sc.samples);
                entry["query"] = q;
                queries.push_back(std::move(entry));
            } catch (const tcplan::Uncovered& e) {
                std::cerr << "query " << q << " "
                          << tcplan::point_to_json(query.start).dump() << " -> "
                          << tcplan::point_to_json(query.end).dump()
                          << " uncovered: " << e.what() << "\n";
                return kExitDispatch;
            } catch (const tcplan::GradeOverflow& e) {
                std::cerr << "query " << q << " rejected: " << e.what() << "\n";
                return kExitDispatch;
            }
        }
        out["queries"] = std::move(queries);
        write_output(out.dump(2), out_file);
        return kExitOk;
    }

    std::string csv;
    for (std::size_t q = 0; q < sc.queries.size(); ++q) {
        const auto& query = sc.queries[q];
        try {
            const auto res = sc.planner.planner.dispatch(query.start, query.end);
            csv += tcplan::path_to_csv(static_cast<int>(q), res.rule_id, res.path,
                                       sc.samples, q == 0);
        } catch (const tcplan::Uncovered& e) {
            std::cerr << "query " << q << " uncovered: " << e.what() << "\n";
            return kExitDispatch;
        } catch (const tcplan::GradeOverflow& e) {
            std::cerr << "query " << q << " rejected: " << e.what() << "\n";
            return kExitDispatch;
        }
    }
    write_output(csv, out_file);
    return kExitOk;
}

int run_verify(const std::string& scenario_file, std::uint64_t seed, std::uint64_t samples,
               const std::string& out_file) {
    const tcplan::Scenario sc = tcplan::load_scenario_file(scenario_file);
    tcplan::verify::SuiteConfig config;
    config.seed = seed;
    config.samples = samples;
    config.expected_rules = sc.planner.expected_rules;
    config.collision_check = sc.planner.collision_check;
    const auto report = tcplan::verify::run_suite(sc.planner.planner, sc.planner.sampler,
                                                  sc.planner.id, config);
    std::cout << tcplan::report_summary(report);
    if (!out_file.empty()) write_output(tcplan::report_to_json(report).dump(2), out_file);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_zcl(const std::string& algebra_file, const std::string& map1_file,
            const std::string& map2_file, const std::string& out_file) {
    const auto algebra = tcplan::coh::load_algebra_file(algebra_file);
    const bool relative = !map1_file.empty() || !map2_file.empty();
    const std::string quantity = relative ? "TC_X(Y1 x Y2)" : "TC";
    const tcplan::coh::ZclResult result = [&] {
        if (!relative) return tcplan::coh::zcl_lower_bound(algebra);
        const std::string m1 = map1_file.empty() ? map2_file : map1_file;
        const std::string m2 = map2_file.empty() ? map1_file : map2_file;
        const auto i1 = tcplan::coh::load_map_file(m1, algebra);
        const auto i2 = tcplan::coh::load_map_file(m2, algebra);
        return tcplan::coh::relative_zcl_lower_bound(algebra, i1, i2);
    }();

    std::ostringstream text;
    text << quantity << " >= " << result.length + 1 << " (zero-divisor cup-length "
         << result.length << ")\n";
    if (!result.witness.empty()) {
        text << "witness classes:";
        for (const auto& w : result.witness) text << " " << w;
        text << "\nwitness product: " << result.product.to_string() << "\n";
        if (result.mapped)
            text << "restricted image: " << result.mapped->to_string() << "\n";
    }
    std::cout << text.str();

    if (!out_file.empty()) {
        json j;
        j["relative"] = relative;
        j["length"] = result.length;
        j["tc_lower_bound"] = result.length + 1;
        j["witness"] = result.witness;
        j["product"] = result.product.to_string();
        if (result.mapped) j["image"] = result.mapped->to_string();
        write_output(j.dump(2), out_file);
    }
    return kExitOk;
}

tcplan::bounds::BoundPiece lower_piece(int value, std::string by) {
    return {tcplan::bounds::BoundPiece::Side::Lower, value, std::move(by)};
}
tcplan::bounds::BoundPiece upper_piece(int value, std::string by) {
    return {tcplan::bounds::BoundPiece::Side::Upper, value, std::move(by)};
}

int run_bounds(const std::string& spec_file, const std::string& out_file) {
    const json spec = read_json_file(spec_file);
    const std::filesystem::path base_dir = std::filesystem::path(spec_file).parent_path();
    if (!spec.is_object() || !spec.contains("pieces"))
        throw tcplan::ParseError("bounds spec needs a pieces array");

    std::vector<tcplan::bounds::BoundPiece> pieces;
    std::vector<std::string> notes;
    for (const auto& n : spec.value("notes", json::array()))
        notes.push_back(n.get<std::string>());

    for (const auto& p : spec["pieces"]) {
        const std::string type = p.value("type", "");
        if (type == "dim-conn") {
            const int v = tcplan::bounds::dim_conn_upper(p.at("d1").get<int>(),
                                                         p.at("d2").get<int>(),
                                                         p.at("s").get<int>());
            pieces.push_back(upper_piece(v, "dimension-connectivity bound"));
        } else if (type == "farber-product") {
            const int v = tcplan::bounds::farber_product_upper(p.at("tc").get<int>(),
                                                               p.at("n").get<int>());
            pieces.push_back(upper_piece(v, "product power bound"));
        } else if (type == "reference-tc") {
            tcplan::bounds::ReferenceParams rp;
            rp.n = p.value("n", 0);
            rp.m = p.value("m", 0);
            const int v = tcplan::bounds::reference_tc(
                tcplan::bounds::family_from_name(p.at("family").get<std::string>()), rp);
            const std::string by = "reference value (" + p.at("family").get<std::string>() + ")";
            const std::string side = p.value("side", "both");
            if (side == "lower" || side == "both") pieces.push_back(lower_piece(v, by));
            if (side == "upper" || side == "both") pieces.push_back(upper_piece(v, by));
        } else if (type == "zcl-file") {
            const json z = read_json_file((base_dir / p.at("path").get<std::string>()).string());
            pieces.push_back(lower_piece(z.at("tc_lower_bound").get<int>(),
                                         "zero-divisor cup-length"));
        } else if (type == "rule-count-file") {
            const json r = read_json_file((base_dir / p.at("path").get<std::string>()).string());
            pieces.push_back(upper_piece(static_cast<int>(r.at("rules").get<std::size_t>()),
                                         "planner rule count"));
        } else if (type == "graph-yn-check") {
            const int n = p.at("n").get<int>();
            const auto algebra = tcplan::coh::load_algebra_file(
                base_dir / p.at("algebra").get<std::string>());
            if (tcplan::coh::graph_yn_product_check(n, algebra))
                pieces.push_back(lower_piece(2 * n + 1,
                                             "nonzero product of 2n zero-divisors"));
            else
                notes.push_back("graph product check came back zero; no lower piece added");
        } else if (type == "literal") {
            const std::string side = p.at("side").get<std::string>();
            const int v = p.at("value").get<int>();
            const std::string by = p.value("by", "literal");
            if (side == "lower")
                pieces.push_back(lower_piece(v, by));
            else if (side == "upper")
                pieces.push_back(upper_piece(v, by));
            else
                throw tcplan::ParseError("literal side must be lower or upper");
        } else {
            throw tcplan::ParseError("unknown bounds piece type '" + type + "'");
        }
    }

    const auto report = tcplan::bounds::combine_bounds(
        spec.value("quantity", std::string("TC")), pieces, std::move(notes));
    const json j = tcplan::bound_report_to_json(report);
    write_output(j.dump(2), out_file);
    if (out_file.empty()) return kExitOk;
    std::cout << report.quantity << " in [" << report.lower.value << ", "
              << (report.upper ? std::to_string(report.upper->value) : "inf") << "]\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motion-planning rule complexity toolkit: explicit planners, "
                 "cup-length bounds and verification"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    app.add_option("--seed", seed, "RNG seed (all sampling is seed-deterministic)");

    std::string out_file;
    app.add_option("--out", out_file, "write the primary output to a file");

    auto* plan = app.add_subcommand("plan", "dispatch scenario queries and emit paths");
    std::string plan_scenario;
    plan->add_option("scenario", plan_scenario, "scenario JSON file")->required();
    std::optional<int> plan_samples;
    plan->add_option("--samples", plan_samples, "time samples per path");
    std::optional<std::string> plan_format;
    plan->add_option("--format", plan_format, "json or csv");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string verify_scenario;
    verify->add_option("scenario", verify_scenario, "scenario JSON file")->required();
    std::uint64_t verify_samples = 10000;
    verify->add_option("--samples", verify_samples, "sampled pairs per check");

    auto* zcl = app.add_subcommand("zcl", "certified zero-divisor cup-length bounds");
    std::string algebra_file, map1_file, map2_file;
    zcl->add_option("algebra", algebra_file, "algebra presentation JSON")->required();
    zcl->add_option("--map1", map1_file, "restriction map for the first factor");
    zcl->add_option("--map2", map2_file, "restriction map for the second factor");

    auto* bounds_cmd = app.add_subcommand("bounds", "combine bound pieces into a report");
    std::string bounds_spec;
    bounds_cmd->add_option("spec", bounds_spec, "bounds spec JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan->parsed()) return run_plan(plan_scenario, plan_samples, plan_format, out_file);
        if (verify->parsed()) return run_verify(verify_scenario, seed, verify_samples, out_file);
        if (zcl->parsed()) return run_zcl(algebra_file, map1_file, map2_file, out_file);
        if (bounds_cmd->parsed()) return run_bounds(bounds_spec, out_file);
    } catch (const tcplan::InconsistentBounds& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const tcplan::Uncovered& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDispatch;
    } catch (const tcplan::GradeOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDispatch;
    } catch (const tcplan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
