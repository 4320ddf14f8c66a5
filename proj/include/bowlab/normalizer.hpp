#pragma once

#include "bowlab/matrix.hpp"
#include "bowlab/rng.hpp"
#include "bowlab/shapes.hpp"

#include <cstdint>

namespace bowlab {

struct NormalizationResult {
    RatMat u; // block-unipotent witness: u * k * u^{-1} = s
    RatMat s; // the slice member reached
    int steps = 0;
    // The trailing corner block untouched by each descending step stayed
    // literally identical at every step (re-checked, not assumed).
    bool corner_preserved = true;
};

// Single descending step (v2 > v1 >= 0) on a v2 x v2 matrix satisfying the
// step level pattern. Returns the unique unipotent u (identity on the
// trailing v1 coordinates modulo the computed mixing block) conjugating k
// into the step slice pattern. The result is re-verified before returning;
// failure raises VerificationError instead of returning bad data.
NormalizationResult step_normalize(int v2, int v1, const RatMat& k);

// Full normalization along chain_from_mu(mu), innermost corner first.
// ValidationError when k fails the level pattern; the final result is
// re-verified against the composed slice pattern.
NormalizationResult normalize_level(const Mu& mu, const RatMat& k);

struct LevelSample {
    RatMat k; // w * s * w^{-1}
    RatMat w; // group element used
    RatMat s; // slice member used
};

// Seeded random level-set member with its witness factorization.
LevelSample sample_level_witnessed(const Mu& mu, std::uint64_t seed);
RatMat sample_level(const Mu& mu, std::uint64_t seed);

// A group element differing from u by one random elementary factor; stays in
// the block-unipotent group and never equals u.
RatMat perturb_group_element(const RatMat& u, const Mu& mu, Rng& rng);

} // namespace bowlab
