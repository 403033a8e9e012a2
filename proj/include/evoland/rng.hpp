#pragma once

#include <cstdint>
#include <random>

namespace evoland {

/// Reproducible random stream: std::mt19937_64 (bit-exact by the standard)
/// with library-owned reductions, so draws do not depend on the platform's
/// distribution implementations.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). Rejection sampling on the top bits.
    std::uint64_t below(std::uint64_t bound);

    bool coin() { return (engine_() >> 63) != 0; }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // UniformRandomBitGenerator, for use with <algorithm>.
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a child seed. Each component folds in as
/// h = splitmix64(splitmix64(h) ^ component), starting from h = parent.
constexpr std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t component) {
    return splitmix64(splitmix64(parent) ^ component);
}

template <typename... Rest>
constexpr std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t first, Rest... rest) {
    return mix_seed(mix_seed(parent, first), static_cast<std::uint64_t>(rest)...);
}

}  // namespace evoland
