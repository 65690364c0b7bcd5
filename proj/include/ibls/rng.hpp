#pragma once

#include <cmath>
#include <cstdint>

namespace ibls {

/// Counter-based deterministic generator. Every draw is a pure function of
/// (seed, stream, counter), so results are identical across platforms and
/// independent of evaluation order.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : base_(mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

    /// Uniform on [-1, 1].
    double uniform_sym(std::uint64_t counter) const {
        return unit(counter) * 2.0 - 1.0;
    }

    /// Uniform on [0, 1).
    double unit(std::uint64_t counter) const {
        return static_cast<double>(mix(base_ + counter) >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller on two sub-draws of one counter.
    double gaussian(std::uint64_t counter) const {
        const double u1 = static_cast<double>(mix(base_ + 2 * counter) >> 11) * 0x1.0p-53;
        const double u2 = static_cast<double>(mix(base_ + 2 * counter + 1) >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log1p(u1 - 1.0 + 0x1.0p-53));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t base_;
};

}  // namespace ibls
