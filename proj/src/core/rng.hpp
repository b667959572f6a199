#ifndef Z4SD_CORE_RNG_HPP
#define Z4SD_CORE_RNG_HPP

#include <cstdint>

namespace z4sd {

// Counter-based generator: output i of a stream with seed s is
// mix64(s + (i+1) * GAMMA). Platform-independent; the constants are part of
// the reproducibility contract and documented in the README.
namespace rng_detail {
constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr uint64_t kStreamGamma = 0xD1342543DE82EF95ull;
}

constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += rng_detail::kGamma;
        return mix64(state_);
    }

    // uniform over [0, bound), bound > 0; rejection-free multiply-shift
    uint64_t below(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    bool coin() { return next() >> 63; }

private:
    uint64_t state_;
};

// Independent per-index substream seed (trial parallelism).
constexpr uint64_t substream_seed(uint64_t seed, uint64_t index) {
    return mix64(seed + (index + 1) * rng_detail::kStreamGamma);
}

} // namespace z4sd

#endif
