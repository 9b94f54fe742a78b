#pragma once

#include <functional>
#include <utility>

#include "tcplan/point.hpp"
#include "tcplan/rng.hpp"

namespace tcplan {

/// Seeded generator of valid input pairs for a planner, plus a perturbation
/// used by the continuity check (moves a point by at most ~delta while
/// staying in the sampler's space).
struct PairSampler {
    std::function<std::pair<Point, Point>(Rng&)> sample;
    std::function<Point(Rng&, const Point&, double)> perturb;
};

/// Uniform on S^m via normalized gaussian vectors.
Point random_sphere_point(Rng& rng, int m);

/// Generic small perturbation: gaussian tangent nudge + renormalize on
/// spheres, uniform cube on euclidean points, componentwise on structured
/// points (heights and join parameters stay clamped to [0,1]).
Point perturb_point(Rng& rng, const Point& p, double delta);

PairSampler sphere_pair_sampler(int m);

/// Ordered n-tuples in (S^m)^n (components independent, collisions allowed).
PairSampler sphere_tuple_sampler(int m, int n);

/// Configurations in C^n(S^m) by rejection with the given separation. With
/// probability swap_prob the goal is a permutation of the start, which is
/// the adversarial case for collision checks.
PairSampler sphere_config_sampler(int m, int n, double min_sep = 1e-3,
                                  double swap_prob = 0.25);

PairSampler line_pair_sampler(double lo = -10.0, double hi = 10.0);

/// Pairs of two-point line configurations.
PairSampler c2_line_sampler(double lo = -10.0, double hi = 10.0, double min_sep = 1e-3,
                            double swap_prob = 0.25);

/// Pairs in (0,1) x (0,1); perturbation clamps back into the open interval.
PairSampler interval_pair_sampler();

/// Pairs of two-point configurations inside (lo, hi) within the unit
/// interval; perturbation clamps componentwise into [clamp_lo, clamp_hi].
PairSampler c2_interval_sampler(double lo = 0.15, double hi = 0.85,
                                double clamp_lo = 0.1, double clamp_hi = 0.9,
                                double min_sep = 1e-3);

/// Canonical join inputs: left factor S^m1 at t = 0, right factor S^m2 at t = 1.
PairSampler join_pair_sampler(int m1, int m2);

}  // namespace tcplan
