#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace tcplan {

/// Seedable random source. Uniform doubles are derived from raw 64-bit
/// draws rather than std::uniform_real_distribution so that a given seed
/// reproduces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (deterministic per seed).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::vector<double> gaussian_vector(std::size_t n) {
        std::vector<double> v(n);
        for (auto& x : v) x = gaussian();
        return v;
    }

    /// Integer in [0, n).
    std::uint64_t index(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace tcplan
