#include "bowlab/matrix.hpp"

#include "bowlab/errors.hpp"

#include <algorithm>
#include <utility>

namespace bowlab {

RatMat rat_inverse(const RatMat& m) {
    if (m.rows() != m.cols()) {
        throw SingularError("inverse of a non-square matrix");
    }
    int n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            throw SingularError("matrix is singular");
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rational d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rational rat_det(const RatMat& m) {
    if (m.rows() != m.cols()) {
        throw SingularError("determinant of a non-square matrix");
    }
    int n = m.rows();
    RatMat a = m;
    Rational det = rat(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return rat(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
            }
            det = -det;
        }
        det *= a.at(col, col);
        Rational inv_p = rat(1) / a.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rational f = a.at(i, col) * inv_p;
            for (int j = col; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
            }
        }
    }
    return det;
}

PolyMat to_poly_mat(const RatMat& m) {
    PolyMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            r.at(i, j) = Polynomial(m.at(i, j));
        }
    }
    return r;
}

LaurentMat to_laurent_mat(const PolyMat& m) {
    LaurentMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            r.at(i, j) = TruncatedLaurent::from_poly(m.at(i, j));
        }
    }
    return r;
}

PolyMat char_matrix(const RatMat& b) {
    if (b.rows() != b.cols()) {
        throw SingularError("characteristic matrix of a non-square matrix");
    }
    int n = b.rows();
    PolyMat r(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Polynomial e = Polynomial(Rational(-b.at(i, j)));
            if (i == j) {
                e += Polynomial::x_power(1);
            }
            r.at(i, j) = e;
        }
    }
    return r;
}

Polynomial poly_det(const PolyMat& m) {
    if (m.rows() != m.cols()) {
        throw SingularError("determinant of a non-square matrix");
    }
    int n = m.rows();
    if (n == 0) return Polynomial::one();
    PolyMat a = m;
    Polynomial prev = Polynomial::one();
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!a.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return Polynomial();
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(k, j));
            }
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                auto [q, r] = poly_divmod(num, prev);
                if (!r.is_zero()) {
                    throw VerificationError("fraction-free elimination division failed");
                }
                a.at(i, j) = q;
            }
        }
        prev = a.at(k, k);
    }
    Polynomial det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

Polynomial poly_minor(const PolyMat& m, const std::vector<int>& row_idx,
                      const std::vector<int>& col_idx) {
    if (row_idx.size() != col_idx.size()) {
        throw SingularError("minor with mismatched index lists");
    }
    return poly_det(m.submatrix(row_idx, col_idx));
}

PolyMat poly_adjugate(const PolyMat& m) {
    if (m.rows() != m.cols()) {
        throw SingularError("adjugate of a non-square matrix");
    }
    int n = m.rows();
    PolyMat adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = Polynomial::one();
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r) {
                if (r != i) rows.push_back(r);
            }
            for (int c = 0; c < n; ++c) {
                if (c != j) cols.push_back(c);
            }
            Polynomial cof = poly_det(m.submatrix(rows, cols));
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(j, i) = cof; // transpose of the cofactor matrix
        }
    }
    return adj;
}

namespace {

// Rescale each row so its first nonzero entry becomes primitive (coprime
// integer coefficients). Row scaling by a nonzero rational is invertible
// over Q[x], so this only changes the diagonal by units; it keeps
// coefficient growth in check during the diagonalization.
void primitivize_rows(PolyMat& a, int from) {
    for (int i = from; i < a.rows(); ++i) {
        const Polynomial* lead = nullptr;
        for (int j = from; j < a.cols() && lead == nullptr; ++j) {
            if (!a.at(i, j).is_zero()) {
                lead = &a.at(i, j);
            }
        }
        if (lead == nullptr) continue;
        Rational factor = poly_primitive(*lead).leading() / lead->leading();
        if (factor == 1) continue;
        for (int j = 0; j < a.cols(); ++j) {
            a.at(i, j) = a.at(i, j) * factor;
        }
    }
}

} // namespace

std::vector<Polynomial> invariant_factors(const PolyMat& m) {
    if (m.rows() != m.cols()) {
        throw SingularError("invariant factors of a non-square matrix");
    }
    int n = m.rows();
    Polynomial det = poly_det(m);
    if (det.is_zero()) {
        throw SingularError("invariant factors of a singular matrix");
    }
    PolyMat a = m;
    std::vector<Polynomial> d(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // Pick a nonzero entry of minimal degree as pivot.
            int pi = -1, pj = -1;
            long best = 0;
            for (int i = t; i < n; ++i) {
                for (int j = t; j < n; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    long deg = a.at(i, j).degree();
                    if (pi < 0 || deg < best) {
                        pi = i;
                        pj = j;
                        best = deg;
                    }
                }
            }
            if (pi < 0) {
                throw SingularError("invariant factors of a singular matrix");
            }
            if (pi != t) {
                for (int j = 0; j < n; ++j) std::swap(a.at(pi, j), a.at(t, j));
            }
            if (pj != t) {
                for (int i = 0; i < n; ++i) std::swap(a.at(i, pj), a.at(i, t));
            }
            const Polynomial pivot = a.at(t, t);
            bool retried = false;
            for (int i = t + 1; i < n; ++i) {
                if (a.at(i, t).is_zero()) continue;
                auto [q, r] = poly_divmod(a.at(i, t), pivot);
                for (int j = t; j < n; ++j) {
                    a.at(i, j) = a.at(i, j) - q * a.at(t, j);
                }
                if (!r.is_zero()) retried = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j).is_zero()) continue;
                auto [q, r] = poly_divmod(a.at(t, j), pivot);
                for (int i = t; i < n; ++i) {
                    a.at(i, j) = a.at(i, j) - a.at(i, t) * q;
                }
                if (!r.is_zero()) retried = true;
            }
            if (retried) continue; // smaller-degree remainders appeared
            bool row_clear = true, col_clear = true;
            for (int i = t + 1; i < n; ++i) {
                if (!a.at(i, t).is_zero()) row_clear = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (!a.at(t, j).is_zero()) col_clear = false;
            }
            if (!row_clear || !col_clear) continue;
            // Pivot must divide the remaining block for the divisibility
            // chain; if it does not, merge the offending row and retry.
            bool fixed = true;
            for (int i = t + 1; i < n && fixed; ++i) {
                for (int j = t + 1; j < n && fixed; ++j) {
                    if (!poly_divides(pivot, a.at(i, j))) {
                        for (int c = t; c < n; ++c) {
                            a.at(t, c) = a.at(t, c) + a.at(i, c);
                        }
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        d[static_cast<std::size_t>(t)] = a.at(t, t).monic();
        primitivize_rows(a, t + 1);
    }
    // Safety net: enforce the divisibility chain pairwise (diag(a, b) is
    // equivalent to diag(gcd, lcm)).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (!poly_divides(d[i], d[i + 1])) {
                Polynomial g = poly_gcd(d[i], d[i + 1]);
                Polynomial l = poly_divmod(d[i] * d[i + 1], g).first.monic();
                d[i] = g;
                d[i + 1] = l;
                changed = true;
            }
        }
    }
    Polynomial product = Polynomial::one();
    for (const auto& f : d) {
        product *= f;
    }
    if (product != det.monic()) {
        throw VerificationError("invariant factor product does not match determinant");
    }
    return d;
}

RatMat companion(const Polynomial& p) {
    if (p.is_zero() || !p.is_monic()) {
        throw ValidationError("companion matrix requires a monic polynomial");
    }
    long d = p.degree();
    RatMat c(static_cast<int>(d), static_cast<int>(d));
    for (long i = 0; i + 1 < d; ++i) {
        c.at(static_cast<int>(i) + 1, static_cast<int>(i)) = rat(1);
    }
    for (long i = 0; i < d; ++i) {
        c.at(static_cast<int>(i), static_cast<int>(d) - 1) = -p.coeff(i);
    }
    return c;
}

} // namespace bowlab
