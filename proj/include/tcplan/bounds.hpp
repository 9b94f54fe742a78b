#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcplan/errors.hpp"

namespace tcplan::bounds {

/// Largest integer strictly below (d1+d2+1)/(s+1) + 1, computed in exact
/// integer arithmetic: q for integer q = (d1+d2+1)/(s+1), otherwise ceil(q).
int dim_conn_upper(int d1, int d2, int s);

/// n * tc_y - n + 1.
int farber_product_upper(int tc_y, int n);

enum class Family { Sphere, ConfigEuclidean, ConfigTree };

/// Throws UnsupportedFamily for anything but sphere | config-euclidean |
/// config-tree.
Family family_from_name(const std::string& name);
std::string family_name(Family f);

struct ReferenceParams {
    int n = 0;  // sphere dimension / number of points
    int m = 0;  // ambient dimension / branch vertices (family dependent)
};

/// Known reference values:
///   sphere n:            2 for odd n, 3 for even n
///   config-euclidean n,m: 2n - 1 for odd m >= 3, 2n - 2 for even m >= 2 (n >= 2)
///   config-tree n,m:      2 min(m, floor(n/2)) + 1
int reference_tc(Family family, const ReferenceParams& p);

struct BoundPiece {
    enum class Side { Lower, Upper };
    Side side = Side::Lower;
    int value = 0;
    std::string by;  // provenance: which result produced the bound
};

struct BoundReport {
    std::string quantity;
    BoundPiece lower;                  // defaults to the trivial bound 1
    std::optional<BoundPiece> upper;   // absent when no upper piece was given
    std::vector<std::string> notes;
};

/// Max of the lower pieces, min of the upper pieces. Throws
/// InconsistentBounds when they cross. Order-independent.
BoundReport combine_bounds(std::string quantity, const std::vector<BoundPiece>& pieces,
                           std::vector<std::string> notes = {});

}  // namespace tcplan::bounds
