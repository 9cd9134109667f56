#ifndef QSA_RNG_HPP
#define QSA_RNG_HPP

#include <cstdint>
#include <random>

namespace qsa {

/// SplitMix64 finalizer; the stable mixing function behind seed
/// derivation. Fixed algorithm, identical on every platform.
std::uint64_t splitmix64(std::uint64_t x);

/// Stable two-argument seed derivation: independent streams for
/// (level, repeat) pairs under one master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b);

/// Seeded random stream for measurement sampling. mt19937_64 is fully
/// specified by the standard; doubles are produced by the 53-bit
/// shift-and-scale construction rather than std::uniform_real_distribution,
/// whose output is implementation-defined.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound) {
        auto v = static_cast<std::uint64_t>(uniform01() *
                                            static_cast<double>(bound));
        return v < bound ? v : bound - 1;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qsa

#endif
