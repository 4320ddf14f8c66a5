#pragma once

#include "bowlab/rational.hpp"

#include <cstdint>

namespace bowlab {

// Deterministic PRNG (SplitMix64). Standard-library distributions are not
// bit-reproducible across implementations, and seeded reproducibility is part
// of the CLI contract, so sampling uses this fixed algorithm with plain
// modular reduction.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
    // here; only determinism matters.
    long int_in(long lo, long hi) {
        if (hi < lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    // Small bounded rational: numerator in [-num_bound, num_bound],
    // denominator in [1, den_bound].
    Rational rational(long num_bound = 4, long den_bound = 3) {
        return rat(int_in(-num_bound, num_bound), int_in(1, den_bound));
    }

    Rational nonzero_rational(long num_bound = 4, long den_bound = 3) {
        Rational r = rational(num_bound, den_bound);
        while (r == 0) {
            r = rational(num_bound, den_bound);
        }
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace bowlab
