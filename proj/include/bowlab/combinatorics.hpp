#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bowlab {

struct FeasibilityReport {
    bool feasible = true;
    std::string reason; // empty when feasible
};

// Whether a 0/1 matrix exists with the given row sums (in the given row
// order) and column sums: equal totals, entries within [0, #cols] / [0,
// #rows], and the dominance inequalities on the sorted row sums against
// clipped column sums.
FeasibilityReport pointful_check(const std::vector<int>& row_sums,
                                 const std::vector<int>& col_sums);

// All 0/1 matrices with the given margins, each returned as rows of 0/1
// ints. Candidate rows are generated in lexicographic order of the 0/1
// tuple read left to right, so the output is sorted by concatenated rows.
// Search is pruned with the same dominance bound used by pointful_check.
// Grids with rows*cols > 42 are rejected unless allow_large is set.
std::vector<std::vector<std::vector<int>>> enumerate_fixed_points(
    const std::vector<int>& row_sums, const std::vector<int>& col_sums,
    bool allow_large = false);

// The weakly decreasing dimension chain attached to a margin pair: starting
// from the total, subtract the column sums from the last to the first, so
// the k-th entry is the total minus the trailing (k-1) column sums. Ends at
// zero. ValidationError when the margins are infeasible.
std::vector<int> signature_from_rc(const std::vector<int>& row_sums,
                                   const std::vector<int>& col_sums);

// Strictly decreasing version of a weakly decreasing chain: the i-th entry
// from the bottom (1-based) gains i-1. The marker list is returned with the
// new top value appended.
struct StrictChain {
    std::vector<int> chain;  // strictly decreasing top to bottom
    std::vector<int> levels; // input markers plus the new top value
};
StrictChain strictify_chain(const std::vector<int>& chain,
                            const std::vector<int>& levels);

} // namespace bowlab
