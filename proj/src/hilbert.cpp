#include "bowlab/hilbert.hpp"

#include "bowlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace bowlab {

namespace {

int term_degree(const MonomialTerm& t) {
    return std::accumulate(t.exps.begin(), t.exps.end(), 0);
}

// All exponent vectors of the given total degree, lexicographically.
std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> walk = [&](int pos, int left) {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            walk(pos + 1, left - e);
        }
    };
    if (nvars > 0 && degree >= 0) walk(0, degree);
    return out;
}

// Rank over the rationals by straightforward elimination.
long long rank_of(std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    long long rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        Rational inv = rat(1) / rows[lead][col];
        for (std::size_t c = col; c < ncols; ++c) rows[lead][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) {
                rows[r][c] -= f * rows[lead][c];
            }
        }
        ++lead;
        ++rank;
    }
    return rank;
}

} // namespace

void validate_presentation(const Presentation& pres) {
    if (pres.variables.empty()) {
        throw ValidationError("presentation needs at least one variable");
    }
    std::size_t nvars = pres.variables.size();
    for (std::size_t ri = 0; ri < pres.relations.size(); ++ri) {
        const MultiPoly& rel = pres.relations[ri];
        if (rel.terms.empty()) {
            throw ValidationError("relation " + std::to_string(ri) + " is empty");
        }
        int deg = term_degree(rel.terms.front());
        for (const MonomialTerm& t : rel.terms) {
            if (t.exps.size() != nvars) {
                throw ValidationError("relation " + std::to_string(ri) +
                                      " has an exponent list of the wrong length");
            }
            for (int e : t.exps) {
                if (e < 0) {
                    throw ValidationError("relation " + std::to_string(ri) +
                                          " has a negative exponent");
                }
            }
            if (term_degree(t) != deg) {
                throw ValidationError("relation " + std::to_string(ri) +
                                      " is not homogeneous");
            }
        }
    }
}

long long graded_dimension(const Presentation& pres, int coh_degree) {
    validate_presentation(pres);
    if (coh_degree < 0 || coh_degree % 2 != 0) return 0;
    int m = coh_degree / 2;
    int nvars = static_cast<int>(pres.variables.size());

    std::vector<std::vector<int>> basis = monomials_of_degree(nvars, m);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    std::vector<std::vector<Rational>> rows;
    for (const MultiPoly& rel : pres.relations) {
        int deg = term_degree(rel.terms.front());
        if (deg > m) continue;
        for (const std::vector<int>& u : monomials_of_degree(nvars, m - deg)) {
            std::vector<Rational> row(basis.size(), rat(0));
            for (const MonomialTerm& t : rel.terms) {
                std::vector<int> e = t.exps;
                for (int v = 0; v < nvars; ++v) {
                    e[static_cast<std::size_t>(v)] += u[static_cast<std::size_t>(v)];
                }
                row[index.at(e)] += t.coef;
            }
            rows.push_back(std::move(row));
        }
    }
    long long rank = rank_of(rows);
    return static_cast<long long>(basis.size()) - rank;
}

} // namespace bowlab
