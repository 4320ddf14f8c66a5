#pragma once

#include "bowlab/matrix.hpp"
#include "bowlab/rng.hpp"

#include <string>
#include <vector>

namespace bowlab {

// A composition (mu_1, ..., mu_n) of positive parts, laid out as diagonal
// blocks from top-left to bottom-right of an N x N matrix, N = sum(mu_i).
class Mu {
public:
    Mu() = default;
    explicit Mu(std::vector<int> parts);

    int n() const { return static_cast<int>(parts_.size()); }
    int total() const { return total_; }
    int part(int i0) const { return parts_[static_cast<std::size_t>(i0)]; }
    const std::vector<int>& parts() const { return parts_; }

    // 0-based global index -> 0-based block index.
    int block_of(int g0) const;
    // 0-based global start of a 0-based block.
    int offset(int b0) const { return offsets_[static_cast<std::size_t>(b0)]; }
    // True when global column c0 is the last column of its block.
    bool is_block_end(int c0) const;

    std::string str() const;

private:
    std::vector<int> parts_;
    std::vector<int> offsets_;
    int total_ = 0;
};

// The dimension chain (u_n, ..., u_1, 0): N followed by N minus the
// successive prefix sums of mu. Strictly decreasing, length n+1.
std::vector<int> chain_from_mu(const Mu& mu);

enum class ShapeKind {
    GroupU, // block upper-triangular group: unipotent diagonal blocks,
            // upper blocks free except their last row, lower blocks zero
    SliceS, // companion diagonal blocks, lower blocks supported on their
            // last column, upper blocks supported on their first row
    LevelP, // moment-map level set: see shape_membership
    FMatrix // equality with build_f(mu)
};

struct Violation {
    int row = 0; // 1-based, as in written block displays
    int col = 0;
    std::string expected;
    std::string found;
};

struct MembershipReport {
    bool ok = true;
    int violation_count = 0; // total, even beyond the cap
    std::vector<Violation> violations; // capped at kMaxViolations
    static constexpr int kMaxViolations = 10;
};

// The projected subdiagonal pattern: 1 at (i+1, i) for every non-block-end
// column i, zero elsewhere.
RatMat build_f(const Mu& mu);

// Entry classification for the patterned shapes.
enum class EntryRule { Free, Zero, One };
EntryRule pattern_entry(ShapeKind kind, const Mu& mu, int r0, int c0);

MembershipReport shape_membership(ShapeKind kind, const Mu& mu, const RatMat& m);

// Independent characterization of the level set: for each corner
// (u_{i+1} x u_{i+1}) submatrix, check the single-step pattern directly on
// the extracted corner. Agrees with shape_membership(LevelP, ...) — the two
// are separate code paths on purpose.
MembershipReport level_membership_via_corners(const Mu& mu, const RatMat& m);

// One descending step (v2 > v1 >= 0, acting on a v2 x v2 matrix,
// v = v2 - v1): columns 0..v-2 must equal the subdiagonal unit pattern below
// the diagonal: K[c+1][c] = 1 and K[r][c] = 0 for r >= c+2.
MembershipReport step_level_membership(int v2, int v1, const RatMat& k);

// Slice pattern of a single descending step: columns 0..v-2 equal to the
// subdiagonal unit columns e_{c+1} entirely, and rows 1..v-1 vanish on
// columns >= v. (The trailing v1 x v1 block stays free; the full slice
// pattern for a composition is the intersection of these over all corners.)
MembershipReport step_slice_membership(int v2, int v1, const RatMat& k);

// Uniform random member of a patterned shape: free entries are sampled as
// bounded rationals, constrained entries take their required values.
RatMat sample_shape(ShapeKind kind, const Mu& mu, Rng& rng);

} // namespace bowlab
