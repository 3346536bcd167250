#ifndef NLGAUGE_RNG_HPP
#define NLGAUGE_RNG_HPP

#include <cstdint>
#include <random>

namespace nlg {

/// Deterministic uniform generator. Doubles are produced from the raw
/// 64-bit stream, so identical seeds give identical draws on every
/// platform (std::uniform_real_distribution makes no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in [-m, m).
    double symmetric(double m) { return uniform(-m, m); }

    /// Uniform magnitude in [lo, hi) with a random sign.
    double signed_magnitude(double lo, double hi) {
        double v = uniform(lo, hi);
        return (engine_() & 1u) ? v : -v;
    }

    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace nlg

#endif
