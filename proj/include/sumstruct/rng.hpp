#pragma once

#include <cstdint>

namespace sumstruct {

// Deterministic splittable generator "ss-splitmix64-v1".
//
// Every Monte Carlo draw in the library is a pure function of
// (seed, stream, index), so results are bit-reproducible across runs and
// platforms. Based on the splitmix64 finalizer.

inline constexpr const char* kRngName = "ss-splitmix64-v1";

constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stream value for (seed, stream, index) as a uint64.
constexpr std::uint64_t rng_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(seed) ^ (stream + 0x1234567ULL)) ^
                      (index + 0x9E3779B9ULL));
}

/// Uniform double in [0, 1) from the same stream.
constexpr double rng_u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return static_cast<double>(rng_u64(seed, stream, index) >> 11) * 0x1.0p-53;
}

/// Sequential generator over one stream, for sampled scans.
class SplitMix {
public:
    SplitMix(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next() { return rng_u64(seed_, stream_, index_++); }

    /// Uniform integer in [0, bound) by rejection-free multiply-shift.
    std::uint32_t next_below(std::uint32_t bound) {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t index_ = 0;
};

} // namespace sumstruct
