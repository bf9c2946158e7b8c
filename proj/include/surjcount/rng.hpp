#pragma once

#include <cstdint>

#include "surjcount/bigint.hpp"

namespace surjcount {

inline std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based stream generator. Stream-split rule: the stream for sample
/// `index` of sub-experiment `experiment` under `seed` starts from state
/// mix64(seed ^ mix64(experiment + 1)) + index * PHI, and draws advance a
/// splitmix64 sequence from there. Identical (seed, experiment, index) always
/// produce identical draws, independent of thread layout.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t experiment, std::uint64_t index) {
        state_ = mix64(seed ^ mix64(experiment + 1)) + index * 0x9e3779b97f4a7c15ULL;
    }

    /// Precomputed per-experiment base for tight sampling loops; identical
    /// streams to the three-argument constructor.
    static std::uint64_t stream_base(std::uint64_t seed, std::uint64_t experiment) {
        return mix64(seed ^ mix64(experiment + 1));
    }
    struct FromBase {};
    SampleRng(FromBase, std::uint64_t base, std::uint64_t index)
        : state_(base + index * 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Exactly uniform over [0, bound). Lemire multiply-shift with rejection.
    std::uint32_t next_below(std::uint32_t bound) {
        std::uint64_t x = next() >> 32;  // 32 random bits
        std::uint64_t m = x * bound;
        std::uint32_t low = static_cast<std::uint32_t>(m);
        if (low < bound) {
            std::uint32_t threshold = (-bound) % bound;
            while (low < threshold) {
                x = next() >> 32;
                m = x * bound;
                low = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    /// Exactly uniform over [0, bound) for arbitrary-precision bounds, by
    /// top-bit rejection.
    Bigint next_below_big(const Bigint& bound) {
        if (bound <= 0) return 0;
        std::size_t bits = boost::multiprecision::msb(bound) + 1;
        std::size_t words = (bits + 63) / 64;
        while (true) {
            Bigint x = 0;
            for (std::size_t w = 0; w < words; ++w) {
                x <<= 64;
                x += next();
            }
            x >>= words * 64 - bits;
            if (x < bound) return x;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace surjcount
