#include "bowlab/mvy.hpp"

#include "bowlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bowlab {

namespace {

int upper_superscript(UpperOrientation orient, int block_cols, int c) {
    return orient == UpperOrientation::kHighFirst ? block_cols - 1 - c : c;
}

int block_sign(int i1, int j1) { return ((i1 + j1) % 2 == 0) ? 1 : -1; }

// Smallest k index of the quadratic correction sum at (i,j).
int correction_k_min(int i1, int j1, BVariant variant) {
    if (i1 >= j1) return i1 + 1;
    switch (variant) {
        case BVariant::kStrictlyAfterRow: return i1 + 1;
        case BVariant::kStrictlyAfterCol: return j1 + 1;
        case BVariant::kTailFromJ: return j1;
    }
    return j1;
}

// Sum of value(k,j,p) * value(i,k,q) over k >= k_min and p + q = mu_k + l,
// with both superscripts inside their block ranges. Fetch is indirected so
// the lazy solver can reuse the same enumeration.
template <typename Fetch>
Rational pair_sum(const Mu& mu, int i1, int j1, int l, int k_min, Fetch&& fetch) {
    Rational s = rat(0);
    int n = mu.n();
    for (int k = std::max(k_min, 1); k <= n; ++k) {
        int len_kj = mu.part(std::max(k, j1) - 1);
        int len_ik = mu.part(std::max(i1, k) - 1);
        int muk = mu.part(k - 1);
        for (int p = 0; p < len_kj; ++p) {
            int q = muk + l - p;
            if (q < 0 || q >= len_ik) continue;
            s += fetch(k, j1, p) * fetch(i1, k, q);
        }
    }
    return s;
}

// Lazy solver for b = a + correction(b). Dependencies between cells always
// lower a well-founded measure (either the cell moves strictly toward the
// tail, or the superscript strictly rises inside a bounded range), and a
// cycle guard turns any violation of that into an error instead of a hang.
class TableSolver {
public:
    TableSolver(const PolyMat& a, const Mu& mu, BVariant variant)
        : a_(a), mu_(mu), variant_(variant), table_(mu) {
        int n = mu_.n();
        state_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            state_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                state_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                    .assign(static_cast<std::size_t>(
                                mu_.part(std::max(i, j))),
                            0);
            }
        }
    }

    BTable solve() {
        int n = mu_.n();
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                for (int l = 0; l < table_.length(i, j); ++l) get(i, j, l);
            }
        }
        return table_;
    }

private:
    Rational get(int i1, int j1, int l) {
        char& st = state_[static_cast<std::size_t>(i1 - 1)]
                         [static_cast<std::size_t>(j1 - 1)]
                         [static_cast<std::size_t>(l)];
        if (st == 2) return table_.value(i1, j1, l);
        if (st == 1) {
            std::ostringstream os;
            os << "coefficient recursion is circular at (" << i1 << "," << j1
               << ")^{" << l << "} under this variant";
            throw VerificationError(os.str());
        }
        st = 1;
        Rational v = a_coefficient(a_, i1, j1, l) +
                     pair_sum(mu_, i1, j1, l,
                              correction_k_min(i1, j1, variant_),
                              [this](int i, int j, int s) { return get(i, j, s); });
        table_.value(i1, j1, l) = v;
        st = 2;
        return v;
    }

    const PolyMat& a_;
    Mu mu_;
    BVariant variant_;
    BTable table_;
    std::vector<std::vector<std::vector<char>>> state_;
};

long degree_or_minus_one(const Polynomial& p) {
    return p.is_zero() ? -1 : p.degree();
}

// Largest l at which the tail sum behind c_value can be nonzero.
int c_bound(const Mu& mu, int i1, int j1) {
    int big = std::max(i1, j1);
    int bound = mu.part(big - 1); // the delta term for i == j sits here
    for (int s = big + 1; s <= mu.n(); ++s) {
        bound = std::max(bound, mu.part(s - 1) - 2);
    }
    return bound;
}

} // namespace

BTable::BTable(const Mu& mu_in) : mu_(mu_in) {
    int n = mu_.n();
    val_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        val_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            val_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].assign(
                static_cast<std::size_t>(mu_.part(std::max(i, j))), rat(0));
        }
    }
}

int BTable::length(int i1, int j1) const {
    return mu_.part(std::max(i1, j1) - 1);
}

const Rational& BTable::value(int i1, int j1, int l) const {
    return val_.at(static_cast<std::size_t>(i1 - 1))
        .at(static_cast<std::size_t>(j1 - 1))
        .at(static_cast<std::size_t>(l));
}

Rational& BTable::value(int i1, int j1, int l) {
    return val_.at(static_cast<std::size_t>(i1 - 1))
        .at(static_cast<std::size_t>(j1 - 1))
        .at(static_cast<std::size_t>(l));
}

Rational a_coefficient(const PolyMat& a, int i1, int j1, int l) {
    return -a.at(i1 - 1, j1 - 1).coeff(l);
}

Rational correction(const BTable& table, int i1, int j1, int l, BVariant variant) {
    return pair_sum(table.mu(), i1, j1, l,
                    correction_k_min(i1, j1, variant),
                    [&table](int i, int j, int s) { return table.value(i, j, s); });
}

BTable b_table_from_matrix(const PolyMat& a, const Mu& mu, BVariant variant) {
    if (a.rows() != mu.n() || a.cols() != mu.n()) {
        throw ValidationError("polynomial matrix size does not match the composition");
    }
    return TableSolver(a, mu, variant).solve();
}

Rational c_value(const BTable& table, int i1, int j1, int l) {
    const Mu& mu = table.mu();
    int big = std::max(i1, j1);
    Rational s = pair_sum(mu, i1, j1, l, big + 1,
                          [&table](int i, int j, int p) { return table.value(i, j, p); });
    if (i1 == j1 && l == mu.part(big - 1)) s += rat(1);
    return s;
}

RatMat assemble_from_table(const BTable& table, UpperOrientation orient) {
    const Mu& mu = table.mu();
    int nn = mu.total();
    RatMat b(nn, nn);
    for (int i = 1; i <= mu.n(); ++i) {
        for (int j = 1; j <= mu.n(); ++j) {
            int oi = mu.offset(i - 1);
            int oj = mu.offset(j - 1);
            int mi = mu.part(i - 1);
            int mj = mu.part(j - 1);
            Rational sign = rat(block_sign(i, j));
            if (i == j) {
                for (int r = 1; r < mi; ++r) b.at(oi + r, oi + r - 1) = rat(1);
                for (int l = 0; l < mi; ++l) {
                    b.at(oi + l, oj + mj - 1) = table.value(i, i, l);
                }
            } else if (i > j) {
                for (int l = 0; l < mi; ++l) {
                    b.at(oi + l, oj + mj - 1) = sign * table.value(i, j, l);
                }
            } else {
                for (int c = 0; c < mj; ++c) {
                    int l = upper_superscript(orient, mj, c);
                    b.at(oi, oj + c) = sign * table.value(i, j, l);
                }
            }
        }
    }
    return b;
}

BTable table_from_matrix(const RatMat& b, const Mu& mu, UpperOrientation orient) {
    int nn = mu.total();
    if (b.rows() != nn || b.cols() != nn) {
        throw ValidationError("matrix size does not match the composition");
    }
    BTable table(mu);
    std::ostringstream bad;
    int bad_count = 0;
    auto complain = [&](int r, int c, const char* expected, const Rational& found) {
        ++bad_count;
        if (bad_count <= 10) {
            bad << " (" << (r + 1) << "," << (c + 1) << ") expected " << expected
                << " found " << rat_str(found) << ";";
        }
    };
    for (int i = 1; i <= mu.n(); ++i) {
        for (int j = 1; j <= mu.n(); ++j) {
            int oi = mu.offset(i - 1);
            int oj = mu.offset(j - 1);
            int mi = mu.part(i - 1);
            int mj = mu.part(j - 1);
            Rational sign = rat(block_sign(i, j));
            for (int r = 0; r < mi; ++r) {
                for (int c = 0; c < mj; ++c) {
                    const Rational& entry = b.at(oi + r, oj + c);
                    if (i == j) {
                        if (c == mj - 1) {
                            table.value(i, j, r) = entry;
                        } else if (r == c + 1) {
                            if (entry != 1) complain(oi + r, oj + c, "1", entry);
                        } else if (entry != 0) {
                            complain(oi + r, oj + c, "0", entry);
                        }
                    } else if (i > j) {
                        if (c == mj - 1) {
                            table.value(i, j, r) = sign * entry;
                        } else if (entry != 0) {
                            complain(oi + r, oj + c, "0", entry);
                        }
                    } else {
                        if (r == 0) {
                            table.value(i, j, upper_superscript(orient, mj, c)) =
                                sign * entry;
                        } else if (entry != 0) {
                            complain(oi + r, oj + c, "0", entry);
                        }
                    }
                }
            }
        }
    }
    if (bad_count > 0) {
        std::ostringstream os;
        os << "matrix is not in slice form: " << bad_count << " violation(s):"
           << bad.str();
        throw ValidationError(os.str());
    }
    return table;
}

ForwardResult mvy_forward(const PolyMat& a, const Mu& mu, BVariant variant,
                          UpperOrientation orient) {
    ForwardResult out;
    out.table = b_table_from_matrix(a, mu, variant);
    out.b = assemble_from_table(out.table, orient);
    for (int i = 1; i <= mu.n() && out.high_coefficients_consistent; ++i) {
        for (int j = 1; j <= mu.n() && out.high_coefficients_consistent; ++j) {
            int big = std::max(i, j);
            long lo = mu.part(big - 1);
            long hi = std::max<long>(c_bound(mu, i, j),
                                     degree_or_minus_one(a.at(i - 1, j - 1)));
            for (long l = lo; l <= hi; ++l) {
                if (a.at(i - 1, j - 1).coeff(l) !=
                    c_value(out.table, i, j, static_cast<int>(l))) {
                    out.high_coefficients_consistent = false;
                    break;
                }
            }
        }
    }
    return out;
}

PolyMat mvy_inverse(const RatMat& b, const Mu& mu, BVariant variant,
                    UpperOrientation orient) {
    BTable table = table_from_matrix(b, mu, orient);
    PolyMat a(mu.n(), mu.n());
    for (int i = 1; i <= mu.n(); ++i) {
        for (int j = 1; j <= mu.n(); ++j) {
            int big = std::max(i, j);
            int head = mu.part(big - 1);
            int top = c_bound(mu, i, j);
            std::vector<Rational> coeffs(
                static_cast<std::size_t>(std::max(head, top) + 1), rat(0));
            for (int l = 0; l < head; ++l) {
                coeffs[static_cast<std::size_t>(l)] =
                    correction(table, i, j, l, variant) - table.value(i, j, l);
            }
            for (int l = head; l <= top; ++l) {
                coeffs[static_cast<std::size_t>(l)] = c_value(table, i, j, l);
            }
            a.at(i - 1, j - 1) = Polynomial(coeffs);
        }
    }
    return a;
}

CheckReport w_membership(const PolyMat& a, const Mu& mu) {
    CheckReport rep;
    int n = mu.n();
    if (a.rows() != n || a.cols() != n) {
        rep.ok = false;
        rep.reason = "matrix size does not match the composition";
        return rep;
    }
    std::vector<int> chain = chain_from_mu(mu);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> idx;
        for (int t = n - i; t < n; ++t) idx.push_back(t);
        Polynomial minor = poly_minor(a, idx, idx);
        long want = chain[static_cast<std::size_t>(n - i)];
        if (minor.is_zero() || !minor.is_monic() || minor.degree() != want) {
            std::ostringstream os;
            os << "trailing " << i << "x" << i << " minor is not monic of degree "
               << want;
            rep.ok = false;
            rep.reason = os.str();
            return rep;
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            int big = std::max(i, j);
            std::vector<int> rows{i - 1};
            std::vector<int> cols{j - 1};
            for (int s = big; s < n; ++s) {
                rows.push_back(s);
                cols.push_back(s);
            }
            Polynomial minor = poly_minor(a, rows, cols);
            long cap = chain[static_cast<std::size_t>(big - 1)];
            if (!minor.is_zero() && minor.degree() >= cap) {
                std::ostringstream os;
                os << "bordered tail minor at (" << i << "," << j
                   << ") has degree " << minor.degree() << ", cap " << cap;
                rep.ok = false;
                rep.reason = os.str();
                return rep;
            }
        }
    }
    return rep;
}

bool verify_jordan_type(const PolyMat& a, const RatMat& b) {
    std::vector<Polynomial> fa = invariant_factors(a);
    std::vector<Polynomial> fb = invariant_factors(char_matrix(b));
    auto nontrivial = [](const std::vector<Polynomial>& fs) {
        std::vector<Polynomial> out;
        for (const Polynomial& f : fs) {
            if (!f.is_zero() && f.degree() >= 1) out.push_back(f);
        }
        return out;
    };
    return nontrivial(fa) == nontrivial(fb);
}

CheckReport quotient_basis_check(const PolyMat& a, const BTable& table) {
    CheckReport rep;
    const Mu& mu = table.mu();
    int n = mu.n();
    if (a.rows() != n || a.cols() != n) {
        rep.ok = false;
        rep.reason = "matrix size does not match the composition";
        return rep;
    }
    Polynomial det = poly_det(a);
    if (det.is_zero()) {
        rep.ok = false;
        rep.reason = "determinant vanishes";
        return rep;
    }
    PolyMat adj = poly_adjugate(a);

    auto times_x = [](const PolyMat& v) {
        PolyMat out = v;
        for (int r = 0; r < out.rows(); ++r) out.at(r, 0) = out.at(r, 0).shifted(1);
        return out;
    };
    auto unit = [&](int i1) {
        PolyMat e(n, 1);
        e.at(i1 - 1, 0) = Polynomial::one();
        return e;
    };

    // v[i][k]: the structured lift of the k-th power coordinate in slot i.
    std::vector<std::vector<PolyMat>> v(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        int mi = mu.part(i - 1);
        v[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(mi));
        v[static_cast<std::size_t>(i)][0] = unit(i);
        for (int k = 1; k < mi; ++k) {
            PolyMat next = times_x(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)]);
            for (int j = 1; j < i; ++j) {
                const Rational& coef = table.value(j, i, mi - k);
                if (coef == 0) continue;
                next.at(j - 1, 0) = next.at(j - 1, 0) -
                                    Polynomial(std::vector<Rational>{coef});
            }
            v[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = next;
        }
    }

    for (int i = 1; i <= n; ++i) {
        int mi = mu.part(i - 1);
        PolyMat w = times_x(v[static_cast<std::size_t>(i)][static_cast<std::size_t>(mi - 1)]);
        for (int l = 1; l < i; ++l) {
            const Rational& coef = table.value(l, i, 0);
            if (coef == 0) continue;
            PolyMat scaled = v[static_cast<std::size_t>(l)][0] *
                             Polynomial(std::vector<Rational>{coef});
            w = w - scaled;
        }
        for (int j = i; j <= n; ++j) {
            for (int k = 0; k < table.length(j, i); ++k) {
                const Rational& coef = table.value(j, i, k);
                if (coef == 0) continue;
                PolyMat scaled = v[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                                 Polynomial(std::vector<Rational>{coef});
                w = w - scaled;
            }
        }
        PolyMat img = adj * w;
        for (int r = 0; r < n; ++r) {
            if (!poly_divides(det, img.at(r, 0))) {
                std::ostringstream os;
                os << "structured generator " << i
                   << " is not a syzygy (slot " << (r + 1) << ")";
                rep.ok = false;
                rep.reason = os.str();
                return rep;
            }
        }
    }
    return rep;
}

RatMat sample_slice_matrix(const Mu& mu, Rng& rng, UpperOrientation orient) {
    BTable table(mu);
    for (int i = 1; i <= mu.n(); ++i) {
        for (int j = 1; j <= mu.n(); ++j) {
            for (int l = 0; l < table.length(i, j); ++l) {
                table.value(i, j, l) = rng.rational();
            }
        }
    }
    return assemble_from_table(table, orient);
}

} // namespace bowlab
