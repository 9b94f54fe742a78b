#include "tcplan/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace tcplan::bounds {

int dim_conn_upper(int d1, int d2, int s) {
    if (d1 < 0 || d2 < 0 || s < 0) throw ParamOutOfRange("dimensions and connectivity must be >= 0");
    const int num = d1 + d2 + 1;
    const int den = s + 1;
    return num % den == 0 ? num / den : num / den + 1;
}

int farber_product_upper(int tc_y, int n) {
    if (tc_y < 1 || n < 1) throw ParamOutOfRange("farber_product_upper needs tc_y, n >= 1");
    return n * tc_y - n + 1;
}

Family family_from_name(const std::string& name) {
    if (name == "sphere") return Family::Sphere;
    if (name == "config-euclidean") return Family::ConfigEuclidean;
    if (name == "config-tree") return Family::ConfigTree;
    throw UnsupportedFamily("unknown reference family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Sphere: return "sphere";
        case Family::ConfigEuclidean: return "config-euclidean";
        case Family::ConfigTree: return "config-tree";
    }
    return "?";
}

int reference_tc(Family family, const ReferenceParams& p) {
    switch (family) {
        case Family::Sphere:
            if (p.n < 1) throw ParamOutOfRange("sphere reference needs n >= 1");
            return p.n % 2 == 1 ? 2 : 3;
        case Family::ConfigEuclidean: {
            if (p.n < 2) throw ParamOutOfRange("euclidean configuration reference needs n >= 2");
            if (p.m >= 3 && p.m % 2 == 1) return 2 * p.n - 1;
            if (p.m >= 2 && p.m % 2 == 0) return 2 * p.n - 2;
            throw ParamOutOfRange("euclidean configuration reference needs m >= 2");
        }
        case Family::ConfigTree:
            if (p.m < 1 || p.n < 1)
                throw ParamOutOfRange("tree reference needs m >= 1 branch vertices and n >= 1");
            return 2 * std::min(p.m, p.n / 2) + 1;
    }
    throw UnsupportedFamily("unhandled family");
}

BoundReport combine_bounds(std::string quantity, const std::vector<BoundPiece>& pieces,
                           std::vector<std::string> notes) {
    BoundReport report;
    report.quantity = std::move(quantity);
    report.lower = {BoundPiece::Side::Lower, 1, "trivial (unreduced convention)"};
    report.notes = std::move(notes);
    for (const auto& piece : pieces) {
        if (piece.side == BoundPiece::Side::Lower) {
            if (piece.value > report.lower.value) report.lower = piece;
        } else if (!report.upper || piece.value < report.upper->value) {
            report.upper = piece;
        }
    }
    if (report.upper && report.lower.value > report.upper->value) {
        std::ostringstream os;
        os << "bounds cross for " << report.quantity << ": lower " << report.lower.value
           << " (" << report.lower.by << ") exceeds upper " << report.upper->value << " ("
           << report.upper->by << ")";
        throw InconsistentBounds(os.str());
    }
    return report;
}

}  // namespace tcplan::bounds
