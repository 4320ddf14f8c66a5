#include "bowlab/combinatorics.hpp"

#include "bowlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace bowlab {

namespace {

// Dominance bound: with row sums sorted weakly decreasing, for every prefix
// the demand must not exceed the clipped column supply.
bool dominance_ok(std::vector<int> rows_desc, const std::vector<int>& cols,
                  std::string* why) {
    std::sort(rows_desc.begin(), rows_desc.end(), std::greater<int>());
    long long demand = 0;
    for (std::size_t k = 0; k < rows_desc.size(); ++k) {
        demand += rows_desc[k];
        long long supply = 0;
        for (int c : cols) supply += std::min<long long>(c, static_cast<long long>(k) + 1);
        if (demand > supply) {
            if (why) {
                std::ostringstream os;
                os << "first " << (k + 1) << " row sums need " << demand
                   << " but clipped column sums provide " << supply;
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

} // namespace

FeasibilityReport pointful_check(const std::vector<int>& row_sums,
                                 const std::vector<int>& col_sums) {
    FeasibilityReport rep;
    int m = static_cast<int>(row_sums.size());
    int n = static_cast<int>(col_sums.size());
    for (int r : row_sums) {
        if (r < 0 || r > n) {
            rep.feasible = false;
            std::ostringstream os;
            os << "row sum " << r << " outside [0, " << n << "]";
            rep.reason = os.str();
            return rep;
        }
    }
    for (int c : col_sums) {
        if (c < 0 || c > m) {
            rep.feasible = false;
            std::ostringstream os;
            os << "column sum " << c << " outside [0, " << m << "]";
            rep.reason = os.str();
            return rep;
        }
    }
    long long rt = std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
    long long ct = std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
    if (rt != ct) {
        rep.feasible = false;
        std::ostringstream os;
        os << "row total " << rt << " differs from column total " << ct;
        rep.reason = os.str();
        return rep;
    }
    std::string why;
    if (!dominance_ok(row_sums, col_sums, &why)) {
        rep.feasible = false;
        rep.reason = why;
    }
    return rep;
}

std::vector<std::vector<std::vector<int>>> enumerate_fixed_points(
    const std::vector<int>& row_sums, const std::vector<int>& col_sums,
    bool allow_large) {
    int m = static_cast<int>(row_sums.size());
    int n = static_cast<int>(col_sums.size());
    if (!allow_large && static_cast<long long>(m) * n > 42) {
        throw ValidationError(
            "grid larger than 42 cells; pass allow_large to search anyway");
    }
    std::vector<std::vector<std::vector<int>>> out;
    if (!pointful_check(row_sums, col_sums).feasible) return out;

    std::vector<int> remaining = col_sums;
    std::vector<std::vector<int>> grid(
        static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), 0));

    // Fill row r with every 0/1 vector of the required sum, lexicographically
    // smallest first (zeros tried before ones at each column), recursing only
    // when the leftover margins stay feasible.
    std::function<void(int)> place_row = [&](int r) {
        if (r == m) {
            out.push_back(grid);
            return;
        }
        std::vector<int> tail(row_sums.begin() + r + 1, row_sums.end());
        std::function<void(int, int)> fill = [&](int j, int need) {
            if (need > n - j) return;
            if (j == n) {
                if (dominance_ok(tail, remaining, nullptr)) place_row(r + 1);
                return;
            }
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = 0;
            fill(j + 1, need);
            if (need > 0 && remaining[static_cast<std::size_t>(j)] > 0) {
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = 1;
                --remaining[static_cast<std::size_t>(j)];
                fill(j + 1, need - 1);
                ++remaining[static_cast<std::size_t>(j)];
                grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = 0;
            }
        };
        fill(0, row_sums[static_cast<std::size_t>(r)]);
    };
    place_row(0);
    return out;
}

std::vector<int> signature_from_rc(const std::vector<int>& row_sums,
                                   const std::vector<int>& col_sums) {
    FeasibilityReport rep = pointful_check(row_sums, col_sums);
    if (!rep.feasible) {
        throw ValidationError("margins are infeasible: " + rep.reason);
    }
    long long total = std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
    std::vector<int> chain;
    chain.push_back(static_cast<int>(total));
    for (std::size_t t = col_sums.size(); t > 0; --t) {
        chain.push_back(chain.back() - col_sums[t - 1]);
    }
    return chain;
}

StrictChain strictify_chain(const std::vector<int>& chain,
                            const std::vector<int>& levels) {
    if (chain.empty()) throw ValidationError("empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i] < chain[i + 1]) {
            throw ValidationError("chain is not weakly decreasing");
        }
    }
    StrictChain out;
    out.chain = chain;
    int len = static_cast<int>(chain.size());
    for (int i = 0; i < len; ++i) {
        out.chain[static_cast<std::size_t>(i)] += len - 1 - i;
    }
    out.levels = levels;
    out.levels.push_back(out.chain.front());
    return out;
}

} // namespace bowlab
