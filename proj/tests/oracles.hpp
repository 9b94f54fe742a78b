#pragma once

// Independent oracles for the expected values frozen into the tests. These
// deliberately use different formulas / representations than the library so
// that agreement is evidence, not tautology.

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "tcplan/point.hpp"

namespace oracles {

/// Constant-speed great-circle interpolation via the sine-ratio formula
/// (the library route composes a cosine sweep with an orthonormal frame).
inline std::vector<double> slerp(const std::vector<double>& x, const std::vector<double>& y,
                                 double t) {
    double c = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) c += x[i] * y[i];
    c = std::clamp(c, -1.0, 1.0);
    const double theta = std::acos(c);
    std::vector<double> out(x.size());
    if (theta < 1e-12) {
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = (1.0 - t) * x[i] + t * y[i];
        return out;
    }
    const double s = std::sin(theta);
    const double wx = std::sin((1.0 - t) * theta) / s;
    const double wy = std::sin(t * theta) / s;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = wx * x[i] + wy * y[i];
    return out;
}

/// Inverse stereographic projection from the pole z, written out directly.
inline std::vector<double> inverse_stereographic(const std::vector<double>& z,
                                                 const std::vector<double>& p) {
    double s = 0.0;
    for (double v : p) s += v * v;
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        out[i] = ((s - 1.0) * z[i] + 2.0 * p[i]) / (s + 1.0);
    return out;
}

/// Finite-difference pushforward of the reference direction through the
/// inverse projection, normalized: the oracle for tangent_field.
inline std::vector<double> fd_tangent(const tcplan::Point& z, const tcplan::Point& x,
                                      double h = 1e-6) {
    const auto& zc = z.coords();
    const auto& xc = x.coords();
    const std::vector<double> u0 = tcplan::reference_orthogonal(zc);
    double xz = 0.0;
    for (std::size_t i = 0; i < xc.size(); ++i) xz += xc[i] * zc[i];
    std::vector<double> p(xc.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = (xc[i] - xz * zc[i]) / (1.0 - xz);

    std::vector<double> plus(p), minus(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        plus[i] += h * u0[i];
        minus[i] -= h * u0[i];
    }
    const auto a = inverse_stereographic(zc, plus);
    const auto b = inverse_stereographic(zc, minus);
    std::vector<double> d(p.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (a[i] - b[i]) / (2.0 * h);
    return tcplan::normalized(d);
}

/// Brute-force model of a graded tensor square over a small algebra: an
/// element is a map from basis index pairs to rational coefficients, and
/// multiplication expands all four factors with the explicit Koszul sign.
struct BruteAlgebra {
    std::vector<int> degree;                                 // per basis index
    std::map<std::pair<int, int>, std::map<int, long long>> mult;  // (i,j) -> expansion
    bool gf2 = false;
};

using BruteTensor = std::map<std::pair<int, int>, long long>;

inline void brute_add(BruteTensor& acc, std::pair<int, int> key, long long v, bool gf2) {
    long long& slot = acc[key];
    slot += v;
    if (gf2) slot = ((slot % 2) + 2) % 2;
    if (slot == 0) acc.erase(key);
}

inline BruteTensor brute_mul(const BruteAlgebra& alg, const BruteTensor& u,
                             const BruteTensor& v) {
    BruteTensor out;
    for (const auto& [ab, cu] : u)
        for (const auto& [cd, cv] : v) {
            const auto [a, b] = ab;
            const auto [c, d] = cd;
            const long long sign =
                (alg.degree[b] % 2 != 0 && alg.degree[c] % 2 != 0) ? -1 : 1;
            const auto ac = alg.mult.find({a, c});
            const auto bd = alg.mult.find({b, d});
            if (ac == alg.mult.end() || bd == alg.mult.end()) continue;
            for (const auto& [e, ce] : ac->second)
                for (const auto& [f, cf] : bd->second)
                    brute_add(out, {e, f}, sign * cu * cv * ce * cf, alg.gf2);
        }
    return out;
}

}  // namespace oracles
