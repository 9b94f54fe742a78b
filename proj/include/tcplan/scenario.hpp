#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "tcplan/planner.hpp"
#include "tcplan/sampling.hpp"

namespace tcplan {

/// A planner family resolved from a scenario spec, bundled with the sampler
/// matching its input space and the rule count the construction promises.
struct ResolvedPlanner {
    Planner planner;
    PairSampler sampler;
    std::string id;
    std::optional<std::size_t> expected_rules;
    bool collision_check = false;  // paths are configurations to keep collision-free
    bool fixture = false;          // deliberately broken; failures are its contract
};

/// Families:
///   sphere {m, z?}                    three-rule sphere planner
///   line-sigma {anchor}               one-rule line planner through 0 or 1
///   c2-line {}                        two robots on the line
///   sphere-product {m, n, z?}         graded power, 2n+1 rules
///   config-sphere-restricted {m,n,z?} configuration grades only, n+2 rules
///   config-sphere-lifted {m,n,z?}     lifted into C^n(S^m x I)
///   c2-line-lifted {}                 lifted two-robot line planner
///   join-spheres {m1, m2}             sweep of S^m1 * S^m2
///   line-fpf {}                       extraction via y -> (y, y+1)
///   interval-retract {}               extraction via anchors and a retraction
///   c2-interval-transported {}        c2-line carried to (0,1) coordinates
///   fixture-corrupted-endpoint {m,z?} rule 1 aims at a rotated target
///   fixture-corrupted-lift {m,n,z?}   lift with all robots at equal heights
ResolvedPlanner make_planner(const nlohmann::json& spec);

struct Query {
    Point start;
    Point end;
};

struct Scenario {
    ResolvedPlanner planner;
    std::vector<Query> queries;
    int samples = 101;
    std::string format = "json";
};

Scenario load_scenario(const nlohmann::json& j);
Scenario load_scenario_file(const std::filesystem::path& path);

}  // namespace tcplan
