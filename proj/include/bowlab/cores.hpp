#pragma once

#include "bowlab/matrix.hpp"
#include "bowlab/polynomial.hpp"

#include <string>
#include <vector>

namespace bowlab {

// A two-row fixed-point signature: a row budget k together with column
// increments c_i in {0,1,2}. The dimension chain is u_i = c_1 + ... + c_i.
struct TwoRowSignature {
    int k = 0;
    std::vector<int> c;

    int n() const { return static_cast<int>(c.size()); }
    std::vector<int> u() const;
    int total() const; // u_n
    std::string str() const;
};

// Both rows must fit: the larger of (k, total-k) needs a nonzero increment
// per box column, and the smaller must cover every double increment.
bool signature_valid(const TwoRowSignature& sig);

// All valid signatures with exactly n increments, k ascending then c
// lexicographic.
std::vector<TwoRowSignature> enumerate_signatures(int n);

// Index bookkeeping behind the rank recursion. Indices are 1-based.
struct CoreData {
    std::vector<int> a; // positions of double increments, descending
    std::vector<int> b; // positions of zero increments past a's minimum, descending
    std::vector<int> r; // r[i] = how many a's lie below b[i]
    long long rank = 0; // sum of r
};
CoreData core_data(const TwoRowSignature& sig);

// One surgery step each. Both act at the lowest zero past the last double
// increment (b_q) and at the last double increment itself (j = a_p):
//   u_step: delete the zero at b_q, split the 2 at j into two 1s;
//           rank drops by exactly r_q + q - 1 (re-derived and checked).
//   v_step: delete the zero at b_q, insert a zero just before j;
//           rank drops by exactly 1 (re-derived and checked).
// Both throw ValidationError at rank 0 and VerificationError if the
// recomputed rank of the result disagrees with the predicted drop.
TwoRowSignature u_step(const TwoRowSignature& sig);
TwoRowSignature v_step(const TwoRowSignature& sig);

// The nilpotent direction singled out by the signature: a total x total
// matrix with a 1 at (total-u_i+2, total-u_i+1), 1-based, for every double
// increment i.
RatMat nil_matrix(const TwoRowSignature& sig);

// Free/zero classification of the gl block of the chart at this fixed
// point, 1-based entries. For every double increment with pivot
// p = total-u_i+1: column p vanishes from row p down, and row p+1 vanishes
// from column p+2 on.
bool m_entry_free(const TwoRowSignature& sig, int row1, int col1);

// Diagonal torus weights: 1 everywhere except each double-increment pivot p,
// which carries (v_p, v_{p+1}) = (2, 0). 1-based, length total().
std::vector<int> torus_weights(const TwoRowSignature& sig);

// Torus weights of the chart coordinates. For each zero increment i, in
// ascending i, the pair of tail blocks over x = total-u_i+1 .. total: first
// the weights v_x, then the weights 2-v_x. The gl block contributes
// v_row + 2 - v_col at each free entry, row-major.
struct ChartDescription {
    std::vector<int> tail_weights; // per zero increment: first block then second
    std::vector<int> m_weights;    // free gl entries, row-major
    std::vector<int> all() const;  // tail_weights followed by m_weights
};
ChartDescription chart_description(const TwoRowSignature& sig);

// Rank-0 leaves are Grassmannians: with p double increments, the quotient
// dimension pair (k-p, total-2p). Throws unless rank is 0.
struct BaseCase {
    int sub = 0; // subspace dimension
    int amb = 0; // ambient dimension
};
BaseCase base_case_descriptor(const TwoRowSignature& sig);

// Gaussian binomial coefficient as a polynomial in one variable, via the
// addition rule [m k] = [m-1 k-1] + x^k [m-1 k].
Polynomial gaussian_binomial(int m, int k);

// Full binary recursion trace: every node branches through u_step and
// v_step until rank 0. Node count is capped (default 10000, override with
// the BOWLAB_NODE_BUDGET environment variable); exceeding the budget throws.
struct TreeStats {
    long long nodes = 0;
    long long leaves = 0;
    int max_depth = 0;
    std::vector<BaseCase> leaf_cases; // in traversal order (u branch first)
};
TreeStats recursion_tree(const TwoRowSignature& sig);

} // namespace bowlab
