#pragma once

#include <cstdint>

namespace cperm {

// Counter-based pseudorandom generator. The i-th output is a pure function
// of (seed, stream, i), so independent streams keyed by the same seed can
// run in parallel and every draw is reproducible. The mixer is the
// SplitMix64 finalizer (Steele, Lea & Flood), which passes standard
// statistical batteries.
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(mix(seed) ^ mix(stream * 0xda942042e4dd58b5ull + 0x2545f4914f6cdd1dull)) {}

    // Independent stream keyed by the same seed material.
    SplitRng split(std::uint64_t stream) const {
        SplitRng r(0);
        r.base_ = mix(base_ ^ (stream * 0xda942042e4dd58b5ull + 0x9e3779b97f4a7c15ull));
        r.counter_ = 0;
        return r;
    }

    std::uint64_t next() { return mix(base_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

    // Unbiased integer in [0, m) by rejection.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t reject = (-m) % m;  // 2^64 mod m
        for (;;) {
            const std::uint64_t v = next();
            if (v >= reject) return v % m;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace cperm
