#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace satgame {

// Base class for all domain errors raised by this library.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation would break an object's invariants
// (apply on a finished game, score of an unfinished game, ...).
struct StateError : DomainError {
    using DomainError::DomainError;
};

// Deterministic 64-bit RNG. The standard distributions are
// implementation-defined, so batch reproducibility uses this instead.
struct SplitMix64 {
    std::uint64_t s;

    explicit SplitMix64(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

// Stable seed derivation for game cells: mixes the master seed with cell labels.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c, std::uint64_t d) {
    SplitMix64 rng(master ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL) ^
                   (c * 0x165667b19e3779f9ULL) ^ (d * 0x27d4eb2f165667c5ULL));
    rng.next();
    return rng.next();
}

}  // namespace satgame
