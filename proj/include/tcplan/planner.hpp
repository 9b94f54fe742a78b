#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcplan/path.hpp"

namespace tcplan {

/// One motion-planning rule: a membership predicate on ordered input pairs
/// plus a section producing a path from a to b.
///
/// boundary_margin, when present, estimates how far inside the rule's domain
/// a pair sits (in predicate units); the verification harness excludes pairs
/// whose margin falls below its exclusion threshold. Rules without a margin
/// are treated as interior everywhere.
struct Rule {
    int id = 0;
    std::function<bool(const Point&, const Point&)> domain;
    std::function<ParamPath(const Point&, const Point&)> section;
    std::function<double(const Point&, const Point&)> boundary_margin;
};

enum class CoverageMode { Partition, OpenCover };

struct DispatchResult {
    int rule_id;
    ParamPath path;
};

/// Ordered rule list realizing a motion planning algorithm. Immutable after
/// construction; dispatch and path evaluation are pure.
class Planner {
public:
    Planner(std::vector<Rule> rules, CoverageMode mode, std::string source_desc,
            std::string target_desc, std::string ambient_desc);

    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t rule_count() const { return rules_.size(); }
    CoverageMode mode() const { return mode_; }
    const std::string& source_desc() const { return source_desc_; }
    const std::string& target_desc() const { return target_desc_; }
    const std::string& ambient_desc() const { return ambient_desc_; }

    /// Partition mode returns the unique accepting rule (predicates are
    /// built disjoint); open-cover mode the lowest-id accepting rule.
    /// Throws Uncovered when nothing accepts (or the installed diagnoser's
    /// error, e.g. GradeOverflow).
    DispatchResult dispatch(const Point& a, const Point& b) const;

    /// Rule id of the accepting rule, without building the path.
    int rule_index(const Point& a, const Point& b) const;

    const Rule& rule_by_id(int id) const;

    /// Sections built by lift_planner are three-phase (ascend / base-path
    /// trace at fixed heights / descend) with time splits at 1/3 and 2/3;
    /// project and the extraction combinators invert the middle phase
    /// exactly when this flag is set.
    bool three_phase_lift() const { return three_phase_lift_; }
    Planner& mark_three_phase_lift() {
        three_phase_lift_ = true;
        return *this;
    }

    /// Called when no rule accepts, before the generic Uncovered error;
    /// lets builders raise a sharper diagnosis (e.g. GradeOverflow).
    Planner& set_uncovered_diagnoser(std::function<void(const Point&, const Point&)> fn) {
        uncovered_diagnoser_ = std::move(fn);
        return *this;
    }

private:
    std::vector<Rule> rules_;
    CoverageMode mode_;
    std::string source_desc_, target_desc_, ambient_desc_;
    bool three_phase_lift_ = false;
    std::function<void(const Point&, const Point&)> uncovered_diagnoser_;
};

}  // namespace tcplan
