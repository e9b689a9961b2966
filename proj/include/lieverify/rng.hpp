#pragma once

#include <cstdint>
#include <string>

#include "lieverify/rational.hpp"

namespace lieverify {

// Deterministic pseudo-random stream (splitmix64). Self-contained so that a
// fixed seed yields identical values on every platform and standard library,
// which the reporting layer requires for byte-identical output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n >= 1. Rejection keeps the distribution exact.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Rational with numerator in [-max_num, max_num] and denominator in [1, max_den].
    Rational rational(long max_num, long max_den) {
        return rat(range(-max_num, max_num), range(1, max_den));
    }

private:
    std::uint64_t state_;
};

// Derives a per-task seed from a base seed and a task name (FNV-1a mix), so
// independent checks consume independent streams while staying reproducible.
inline std::uint64_t seed_for(std::uint64_t base_seed, const std::string& stream) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : stream) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h ^ base_seed;
}

}  // namespace lieverify
