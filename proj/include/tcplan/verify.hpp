#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcplan/planner.hpp"
#include "tcplan/sampling.hpp"

namespace tcplan::verify {

/// Pairs whose boundary margin falls below this multiple of the predicate
/// tolerance are excluded from continuity sampling: partition boundaries are
/// discontinuity loci of the dispatcher, not of any single section.
inline constexpr double kBoundaryExclusion = 10.0 * kTol;

struct CoverEvidence {
    std::uint64_t samples = 0;
    std::uint64_t uncovered = 0;
    std::uint64_t multi_covered = 0;  // partition mode only
    std::string witness;              // first failing pair, if any
};

/// Counts pairs no rule accepts and, in partition mode, pairs more than one
/// rule accepts. Failures are evidence, not errors.
CoverEvidence verify_cover(const Planner& planner, const PairSampler& sampler,
                           std::uint64_t n, Rng& rng);

struct EndpointEvidence {
    std::uint64_t samples = 0;
    double max_residual = 0.0;
};

/// Max over samples of the distance between the path ends and the queried
/// pair.
EndpointEvidence verify_endpoints(const Planner& planner, const PairSampler& sampler,
                                  std::uint64_t n, Rng& rng);

struct ContinuityEvidence {
    std::uint64_t samples = 0;   // perturbed pairs actually measured
    std::uint64_t excluded = 0;  // straddled a rule boundary or drifted past delta
    std::map<int, double> modulus_by_rule;
    double worst = 0.0;
};

/// Empirical local modulus: perturb each sampled pair by at most delta, keep
/// perturbations dispatched to the same rule and clear of rule boundaries,
/// and record the sup over the time grid of the path distance. A numeric
/// proxy only; it never certifies continuity.
ContinuityEvidence verify_continuity(const Planner& planner, const PairSampler& sampler,
                                     std::uint64_t n, Rng& rng, double delta = 1e-3,
                                     int t_samples = 101);

struct CollisionEvidence {
    std::uint64_t samples = 0;
    double min_clearance = std::numeric_limits<double>::infinity();
};

/// Minimum over samples and the time grid of the pairwise distance between
/// robots in each path slice (vacuous for single-robot paths).
CollisionEvidence verify_collision_free(const Planner& planner, const PairSampler& sampler,
                                        std::uint64_t n, Rng& rng, int t_samples = 201);

bool verify_rule_counts(const Planner& planner, std::size_t expected);

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;  // residual / clearance / modulus / count as applicable
    std::uint64_t samples = 0;
    std::string detail;
};

struct Report {
    std::string planner_id;
    std::uint64_t seed = 0;
    std::uint64_t requested_samples = 0;
    std::size_t rules = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::uint64_t samples = 10000;
    std::optional<std::size_t> expected_rules;
    bool collision_check = false;  // for planners whose paths are configurations
    double endpoint_tol = kTol;
    double continuity_delta = 1e-3;
    double continuity_alarm = 0.1;
    int continuity_t_samples = 101;
    double clearance_min = 1e-8;
    int collision_t_samples = 201;
};

/// Runs rule-count, cover, endpoint, continuity and (optionally) collision
/// checks with a seed-deterministic sample stream.
Report run_suite(const Planner& planner, const PairSampler& sampler,
                 std::string planner_id, const SuiteConfig& config);

}  // namespace tcplan::verify
