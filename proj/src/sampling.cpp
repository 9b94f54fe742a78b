#include "tcplan/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace tcplan {

Point random_sphere_point(Rng& rng, int m) {
    std::vector<double> v;
    do {
        v = rng.gaussian_vector(static_cast<std::size_t>(m) + 1);
    } while (norm(v) < 1e-6);
    return Point::sphere(normalized(v));
}

Point perturb_point(Rng& rng, const Point& p, double delta) {
    switch (p.kind()) {
        case Point::Kind::Sphere: {
            std::vector<double> c = p.coords();
            const std::vector<double> g = rng.gaussian_vector(c.size());
            const double gn = norm(g);
            if (gn > 0) {
                const double step = 0.5 * delta * rng.uniform() / gn;
                for (std::size_t i = 0; i < c.size(); ++i) c[i] += step * g[i];
            }
            return Point::sphere(normalized(c));
        }
        case Point::Kind::Euclidean: {
            std::vector<double> c = p.coords();
            for (auto& x : c) x += rng.uniform(-0.5 * delta, 0.5 * delta);
            return Point::euclidean(std::move(c));
        }
        case Point::Kind::Cylinder: {
            const double h =
                std::clamp(p.height() + rng.uniform(-0.5 * delta, 0.5 * delta), 0.0, 1.0);
            return Point::cylinder(perturb_point(rng, p.base(), delta), h);
        }
        case Point::Kind::Join: {
            const double t = p.join_t();
            if (t == 0.0) return Point::join_left(perturb_point(rng, p.left(), delta));
            if (t == 1.0) return Point::join_right(perturb_point(rng, p.right(), delta));
            return Point::join(perturb_point(rng, p.left(), delta),
                               perturb_point(rng, p.right(), delta), t);
        }
        case Point::Kind::Tuple: {
            std::vector<Point> comps;
            comps.reserve(p.components().size());
            for (const auto& c : p.components()) comps.push_back(perturb_point(rng, c, delta));
            return Point::tuple(std::move(comps));
        }
    }
    return p;
}

namespace {

std::function<Point(Rng&, const Point&, double)> generic_perturb() {
    return [](Rng& rng, const Point& p, double delta) { return perturb_point(rng, p, delta); };
}

Point random_sphere_tuple(Rng& rng, int m, int n) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(random_sphere_point(rng, m));
    return Point::tuple(std::move(pts));
}

Point random_sphere_config(Rng& rng, int m, int n, double min_sep) {
    for (;;) {
        std::vector<Point> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pts.push_back(random_sphere_point(rng, m));
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (distance(pts[i], pts[j]) < min_sep) {
                    ok = false;
                    break;
                }
        if (ok) return Point::tuple(std::move(pts));
    }
}

Point shuffled_tuple(Rng& rng, const Point& t) {
    std::vector<Point> pts = t.components();
    for (std::size_t i = pts.size(); i > 1; --i)
        std::swap(pts[i - 1], pts[rng.index(i)]);
    return Point::tuple(std::move(pts));
}

}  // namespace

PairSampler sphere_pair_sampler(int m) {
    PairSampler s;
    s.sample = [m](Rng& rng) {
        return std::make_pair(random_sphere_point(rng, m), random_sphere_point(rng, m));
    };
    s.perturb = generic_perturb();
    return s;
}

PairSampler sphere_tuple_sampler(int m, int n) {
    PairSampler s;
    s.sample = [m, n](Rng& rng) {
        return std::make_pair(random_sphere_tuple(rng, m, n),
                              random_sphere_tuple(rng, m, n));
    };
    s.perturb = generic_perturb();
    return s;
}

PairSampler sphere_config_sampler(int m, int n, double min_sep, double swap_prob) {
    PairSampler s;
    s.sample = [m, n, min_sep, swap_prob](Rng& rng) {
        Point a = random_sphere_config(rng, m, n, min_sep);
        Point b = rng.uniform() < swap_prob ? shuffled_tuple(rng, a)
                                            : random_sphere_config(rng, m, n, min_sep);
        return std::make_pair(std::move(a), std::move(b));
    };
    s.perturb = generic_perturb();
    return s;
}

PairSampler line_pair_sampler(double lo, double hi) {
    PairSampler s;
    s.sample = [lo, hi](Rng& rng) {
        return std::make_pair(Point::euclidean1(rng.uniform(lo, hi)),
                              Point::euclidean1(rng.uniform(lo, hi)));
    };
    s.perturb = generic_perturb();
    return s;
}

PairSampler c2_line_sampler(double lo, double hi, double min_sep, double swap_prob) {
    auto config = [lo, hi, min_sep](Rng& rng) {
        for (;;) {
            const double x1 = rng.uniform(lo, hi);
            const double x2 = rng.uniform(lo, hi);
            if (std::abs(x1 - x2) >= min_sep)
                return Point::tuple({Point::euclidean1(x1), Point::euclidean1(x2)});
        }
    };
    PairSampler s;
    s.sample = [config, swap_prob](Rng& rng) {
        Point a = config(rng);
        Point b = rng.uniform() < swap_prob ? shuffled_tuple(rng, a) : config(rng);
        return std::make_pair(std::move(a), std::move(b));
    };
    s.perturb = generic_perturb();
    return s;
}

PairSampler interval_pair_sampler() {
    PairSampler s;
    s.sample = [](Rng& rng) {
        return std::make_pair(Point::euclidean1(rng.uniform(1e-4, 1.0 - 1e-4)),
                              Point::euclidean1(rng.uniform(1e-4, 1.0 - 1e-4)));
    };
    s.perturb = [](Rng& rng, const Point& p, double delta) {
        const double x = p.scalar() + rng.uniform(-0.5 * delta, 0.5 * delta);
        return Point::euclidean1(std::clamp(x, 1e-6, 1.0 - 1e-6));
    };
    return s;
}

PairSampler c2_interval_sampler(double lo, double hi, double clamp_lo, double clamp_hi,
                                double min_sep) {
    auto config = [lo, hi, min_sep](Rng& rng) {
        for (;;) {
            const double x1 = rng.uniform(lo, hi);
            const double x2 = rng.uniform(lo, hi);
            if (std::abs(x1 - x2) >= min_sep)
                return Point::tuple({Point::euclidean1(x1), Point::euclidean1(x2)});
        }
    };
    PairSampler s;
    s.sample = [config](Rng& rng) { return std::make_pair(config(rng), config(rng)); };
    s.perturb = [clamp_lo, clamp_hi](Rng& rng, const Point& p, double delta) {
        std::vector<Point> comps;
        for (const auto& c : p.components()) {
            const double x = c.scalar() + rng.uniform(-0.5 * delta, 0.5 * delta);
            comps.push_back(Point::euclidean1(std::clamp(x, clamp_lo, clamp_hi)));
        }
        return Point::tuple(std::move(comps));
    };
    return s;
}

PairSampler join_pair_sampler(int m1, int m2) {
    PairSampler s;
    s.sample = [m1, m2](Rng& rng) {
        return std::make_pair(Point::join_left(random_sphere_point(rng, m1)),
                              Point::join_right(random_sphere_point(rng, m2)));
    };
    s.perturb = generic_perturb();
    return s;
}

}  // namespace tcplan
