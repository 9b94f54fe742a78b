#include "tcplan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcplan::verify {

CoverEvidence verify_cover(const Planner& planner, const PairSampler& sampler,
                           std::uint64_t n, Rng& rng) {
    CoverEvidence ev;
    ev.samples = n;
    for (std::uint64_t k = 0; k < n; ++k) {
        const auto [a, b] = sampler.sample(rng);
        std::size_t hits = 0;
        for (const auto& rule : planner.rules())
            if (rule.domain(a, b)) ++hits;
        const bool bad = hits == 0 || (planner.mode() == CoverageMode::Partition && hits > 1);
        if (hits == 0) ++ev.uncovered;
        if (planner.mode() == CoverageMode::Partition && hits > 1) ++ev.multi_covered;
        if (bad && ev.witness.empty()) {
            std::ostringstream os;
            os << (hits == 0 ? "uncovered" : "multi-covered") << " pair (" << a.describe()
               << ", " << b.describe() << ")";
            ev.witness = os.str();
        }
    }
    return ev;
}

EndpointEvidence verify_endpoints(const Planner& planner, const PairSampler& sampler,
                                  std::uint64_t n, Rng& rng) {
    EndpointEvidence ev;
    ev.samples = n;
    for (std::uint64_t k = 0; k < n; ++k) {
        const auto [a, b] = sampler.sample(rng);
        const auto res = planner.dispatch(a, b);
        ev.max_residual = std::max(ev.max_residual, distance(res.path.eval(0.0), a));
        ev.max_residual = std::max(ev.max_residual, distance(res.path.eval(1.0), b));
    }
    return ev;
}

namespace {

double rule_margin(const Planner& planner, int rule_id, const Point& a, const Point& b) {
    const auto& rule = planner.rule_by_id(rule_id);
    if (!rule.boundary_margin) return std::numeric_limits<double>::infinity();
    return rule.boundary_margin(a, b);
}

}  // namespace

ContinuityEvidence verify_continuity(const Planner& planner, const PairSampler& sampler,
                                     std::uint64_t n, Rng& rng, double delta,
                                     int t_samples) {
    ContinuityEvidence ev;
    for (std::uint64_t k = 0; k < n; ++k) {
        const auto [a, b] = sampler.sample(rng);
        const Point a2 = sampler.perturb(rng, a, delta);
        const Point b2 = sampler.perturb(rng, b, delta);

        int id1, id2;
        try {
            id1 = planner.rule_index(a, b);
            id2 = planner.rule_index(a2, b2);
        } catch (const Error&) {
            ++ev.excluded;
            continue;
        }
        if (id1 != id2 || std::max(distance(a, a2), distance(b, b2)) > delta ||
            rule_margin(planner, id1, a, b) < kBoundaryExclusion ||
            rule_margin(planner, id1, a2, b2) < kBoundaryExclusion) {
            ++ev.excluded;
            continue;
        }

        const ParamPath p1 = planner.rule_by_id(id1).section(a, b);
        const ParamPath p2 = planner.rule_by_id(id1).section(a2, b2);
        double sup = 0.0;
        for (int i = 0; i < t_samples; ++i) {
            const double t = static_cast<double>(i) / (t_samples - 1);
            sup = std::max(sup, distance(p1.eval(t), p2.eval(t)));
        }
        ++ev.samples;
        auto [it, inserted] = ev.modulus_by_rule.emplace(id1, sup);
        if (!inserted) it->second = std::max(it->second, sup);
        ev.worst = std::max(ev.worst, sup);
    }
    return ev;
}

CollisionEvidence verify_collision_free(const Planner& planner, const PairSampler& sampler,
                                        std::uint64_t n, Rng& rng, int t_samples) {
    CollisionEvidence ev;
    ev.samples = n;
    for (std::uint64_t k = 0; k < n; ++k) {
        const auto [a, b] = sampler.sample(rng);
        const auto res = planner.dispatch(a, b);
        for (int i = 0; i < t_samples; ++i) {
            const double t = static_cast<double>(i) / (t_samples - 1);
            const Point slice = res.path.eval(t);
            if (!slice.is_tuple()) continue;
            const auto& pts = slice.components();
            for (std::size_t p = 0; p < pts.size(); ++p)
                for (std::size_t q = p + 1; q < pts.size(); ++q)
                    ev.min_clearance = std::min(ev.min_clearance, distance(pts[p], pts[q]));
        }
    }
    return ev;
}

bool verify_rule_counts(const Planner& planner, std::size_t expected) {
    return planner.rule_count() == expected;
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

Report run_suite(const Planner& planner, const PairSampler& sampler,
                 std::string planner_id, const SuiteConfig& config) {
    Report report;
    report.planner_id = std::move(planner_id);
    report.seed = config.seed;
    report.requested_samples = config.samples;
    report.rules = planner.rule_count();

    if (config.expected_rules) {
        CheckResult c;
        c.name = "rule-count";
        c.passed = verify_rule_counts(planner, *config.expected_rules);
        c.value = static_cast<double>(planner.rule_count());
        c.detail = "expected " + std::to_string(*config.expected_rules);
        report.checks.push_back(std::move(c));
    }
    {
        Rng rng(config.seed);
        const auto ev = verify_cover(planner, sampler, config.samples, rng);
        CheckResult c;
        c.name = "cover";
        c.passed = ev.uncovered == 0 && ev.multi_covered == 0;
        c.value = static_cast<double>(ev.uncovered + ev.multi_covered);
        c.samples = ev.samples;
        c.detail = c.passed ? "0 uncovered, 0 multi-covered" : ev.witness;
        report.checks.push_back(std::move(c));
    }
    {
        Rng rng(config.seed + 1);
        const auto ev = verify_endpoints(planner, sampler, config.samples, rng);
        CheckResult c;
        c.name = "endpoints";
        c.passed = ev.max_residual <= config.endpoint_tol;
        c.value = ev.max_residual;
        c.samples = ev.samples;
        std::ostringstream os;
        os << "max residual " << ev.max_residual << " (tol " << config.endpoint_tol << ")";
        c.detail = os.str();
        report.checks.push_back(std::move(c));
    }
    {
        Rng rng(config.seed + 2);
        const auto ev = verify_continuity(planner, sampler, config.samples, rng,
                                          config.continuity_delta,
                                          config.continuity_t_samples);
        CheckResult c;
        c.name = "continuity";
        c.passed = ev.worst <= config.continuity_alarm;
        c.value = ev.worst;
        c.samples = ev.samples;
        std::ostringstream os;
        os << "empirical modulus " << ev.worst << " over " << ev.samples << " pairs ("
           << ev.excluded << " excluded near boundaries)";
        c.detail = os.str();
        report.checks.push_back(std::move(c));
    }
    if (config.collision_check) {
        Rng rng(config.seed + 3);
        const auto ev = verify_collision_free(planner, sampler, config.samples, rng,
                                              config.collision_t_samples);
        CheckResult c;
        c.name = "collision";
        c.passed = ev.min_clearance > config.clearance_min;
        c.value = ev.min_clearance;
        c.samples = ev.samples;
        std::ostringstream os;
        os << "min clearance " << ev.min_clearance << " (must exceed "
           << config.clearance_min << ")";
        c.detail = os.str();
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace tcplan::verify
