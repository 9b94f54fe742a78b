#include "tcplan/planner.hpp"

#include <sstream>

namespace tcplan {

Planner::Planner(std::vector<Rule> rules, CoverageMode mode, std::string source_desc,
                 std::string target_desc, std::string ambient_desc)
    : rules_(std::move(rules)),
      mode_(mode),
      source_desc_(std::move(source_desc)),
      target_desc_(std::move(target_desc)),
      ambient_desc_(std::move(ambient_desc)) {
    if (rules_.empty()) throw Error("planner needs at least one rule");
}

int Planner::rule_index(const Point& a, const Point& b) const {
    for (const auto& r : rules_)
        if (r.domain(a, b)) return r.id;
    if (uncovered_diagnoser_) uncovered_diagnoser_(a, b);
    std::ostringstream os;
    os << "no rule covers the pair (" << a.describe() << ", " << b.describe() << ")";
    throw Uncovered(os.str());
}

DispatchResult Planner::dispatch(const Point& a, const Point& b) const {
    const int id = rule_index(a, b);
    return DispatchResult{id, rule_by_id(id).section(a, b)};
}

const Rule& Planner::rule_by_id(int id) const {
    for (const auto& r : rules_)
        if (r.id == id) return r;
    throw Error("unknown rule id");
}

}  // namespace tcplan
