#pragma once

#include "bowlab/matrix.hpp"
#include "bowlab/rng.hpp"
#include "bowlab/shapes.hpp"

#include <string>
#include <vector>

namespace bowlab {

// Index range for the k-sum in the quadratic correction of the coefficient
// recursion, in the upper-triangular case i < j. The lower case always sums
// over k > i. kTailFromJ (sum over k >= j) is the production choice; the
// other two are kept selectable so the unit tests can demonstrate against
// the factorization oracle which range reproduces the slice form.
enum class BVariant {
    kStrictlyAfterRow,  // k > i
    kStrictlyAfterCol,  // k > j
    kTailFromJ,         // k >= j  (production)
};

// Coefficient order along the first row of an upper off-diagonal block.
// kHighFirst (production) lists the top coefficient first; the unit tests
// pin this choice against the similarity-type oracle.
enum class UpperOrientation {
    kLowFirst,
    kHighFirst,
};

constexpr BVariant kProductionVariant = BVariant::kTailFromJ;
constexpr UpperOrientation kProductionOrientation = UpperOrientation::kHighFirst;

// Coefficient table b(i,j,l) with 1-based block indices; the superscript l
// runs over [0, mu_{max(i,j)} - 1].
class BTable {
public:
    BTable() = default;
    BTable(const Mu& mu_in);

    const Mu& mu() const { return mu_; }
    int length(int i1, int j1) const; // number of superscripts at (i,j)
    const Rational& value(int i1, int j1, int l) const;
    Rational& value(int i1, int j1, int l);

private:
    Mu mu_;
    std::vector<std::vector<std::vector<Rational>>> val_;
};

// Coefficient table of the polynomial matrix: a(i,j,l) is minus the x^l
// coefficient of entry (i,j), for any l >= 0.
Rational a_coefficient(const PolyMat& a, int i1, int j1, int l);

// The quadratic correction sum at (i,j,l) evaluated on a finished table.
Rational correction(const BTable& table, int i1, int j1, int l,
                    BVariant variant = kProductionVariant);

// Solve the recursion b = a + correction(b) for the whole table.
BTable b_table_from_matrix(const PolyMat& a, const Mu& mu,
                           BVariant variant = kProductionVariant);

// High-coefficient value forced by the table: the x^l coefficient of entry
// (i,j) for l >= mu_{max(i,j)} equals delta terms plus a tail correction.
Rational c_value(const BTable& table, int i1, int j1, int l);

// Assemble the big matrix from a table: companion-shaped diagonal blocks
// whose last column lists b(i,i,*) from l=0 downward-compatible order,
// lower blocks supported on their last column, upper blocks on their first
// row, and a checkerboard block sign (block (i,j) scaled by (-1)^{i+j}).
RatMat assemble_from_table(const BTable& table,
                           UpperOrientation orient = kProductionOrientation);

// Read a table back from a big matrix, validating the block support pattern
// exactly; throws ValidationError with positions on any violation.
BTable table_from_matrix(const RatMat& b, const Mu& mu,
                         UpperOrientation orient = kProductionOrientation);

struct ForwardResult {
    RatMat b;
    BTable table;
    // Every coefficient at or above the block threshold agreed with the
    // value forced by the table.
    bool high_coefficients_consistent = true;
};

// Polynomial matrix -> big matrix.
ForwardResult mvy_forward(const PolyMat& a, const Mu& mu,
                          BVariant variant = kProductionVariant,
                          UpperOrientation orient = kProductionOrientation);

// Big matrix -> polynomial matrix (exact two-sided inverse of mvy_forward).
PolyMat mvy_inverse(const RatMat& b, const Mu& mu,
                    BVariant variant = kProductionVariant,
                    UpperOrientation orient = kProductionOrientation);

struct CheckReport {
    bool ok = true;
    std::string reason;
};

// Membership in the target family of polynomial matrices, by the minor
// characterization: trailing principal minors are monic of the chain
// degrees, and for i != j the bordered tail minor on rows {i, K+1..n} and
// columns {j, K+1..n} (K = max(i,j)) has degree strictly below the K-th
// tail degree.
CheckReport w_membership(const PolyMat& a, const Mu& mu);

// The nontrivial diagonal factors of a match those of xI - b.
bool verify_jordan_type(const PolyMat& a, const RatMat& b);

// Module-theoretic certificate: the structured generators built from the
// table are syzygies of a, i.e. adj(a) * w is divisible by det(a) entrywise.
CheckReport quotient_basis_check(const PolyMat& a, const BTable& table);

// Random big matrix in slice form: free coefficients drawn from the rng.
RatMat sample_slice_matrix(const Mu& mu, Rng& rng,
                           UpperOrientation orient = kProductionOrientation);

} // namespace bowlab
