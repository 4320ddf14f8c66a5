#include "bowlab/normalizer.hpp"

#include "bowlab/errors.hpp"

#include <sstream>
#include <vector>

namespace bowlab {

namespace {

std::string describe(const MembershipReport& rep, const char* what) {
    std::ostringstream os;
    os << what << ": " << rep.violation_count << " violation(s)";
    for (const auto& v : rep.violations) {
        os << "; (" << v.row << "," << v.col << ") expected " << v.expected
           << " found " << v.found;
    }
    return os.str();
}

// Column vector shifted one slot toward higher row index; the top entry
// becomes zero and the bottom entry falls off.
std::vector<Rational> shift_down(const std::vector<Rational>& x) {
    std::vector<Rational> r(x.size(), rat(0));
    for (std::size_t i = 1; i < x.size(); ++i) r[i] = x[i - 1];
    return r;
}

} // namespace

NormalizationResult step_normalize(int v2, int v1, const RatMat& k) {
    MembershipReport in = step_level_membership(v2, v1, k);
    if (!in.ok) {
        throw ValidationError(describe(in, "input fails the step level pattern"));
    }
    int v = v2 - v1;

    // P: upper-unipotent v x v read off the pinned-staircase columns of k.
    // Column 0 is e_0; column j (j >= 1) copies the first v rows of k's
    // column j-1, whose subdiagonal entry is pinned to 1.
    RatMat p(v, v);
    p.at(0, 0) = rat(1);
    for (int j = 1; j < v; ++j) {
        for (int r = 0; r < v; ++r) p.at(r, j) = k.at(r, j - 1);
    }

    // M: columns built left to right; each new column is the previous one
    // shifted down, corrected by earlier columns so that M * P collapses to
    // the identity in its first row and column and reproduces M's own
    // leading corner in the rest.
    RatMat m(v, v);
    m.at(0, 0) = rat(1);
    for (int j = 1; j < v; ++j) {
        std::vector<Rational> col(static_cast<std::size_t>(v), rat(0));
        for (int r = 0; r < v; ++r) col[static_cast<std::size_t>(r)] = m.at(r, j - 1);
        col = shift_down(col);
        for (int i = 0; i < j; ++i) {
            const Rational& coef = p.at(i, j);
            if (coef == 0) continue;
            for (int r = 0; r < v; ++r) {
                col[static_cast<std::size_t>(r)] -= coef * m.at(r, i);
            }
        }
        for (int r = 0; r < v; ++r) m.at(r, j) = col[static_cast<std::size_t>(r)];
    }

    // Structural self-check: M * P must be the identity bordered onto M's
    // own leading (v-1)-corner.
    {
        RatMat mp = m * p;
        RatMat want(v, v);
        want.at(0, 0) = rat(1);
        if (v > 1) want.set_block(1, 1, m.block(0, 0, v - 1, v - 1));
        if (mp != want) {
            throw VerificationError("column recursion lost its defining identity");
        }
    }

    // N: rows built bottom to top against the trailing corner block.
    RatMat u = RatMat::identity(v2);
    u.set_block(0, 0, m);
    if (v1 > 0 && v > 1) {
        RatMat b1 = k.block(v, v, v1, v1);
        RatMat mb = m * k.block(0, v, v, v1); // v x v1, rows q_1..q_v
        RatMat n1(v - 1, v1);
        for (int c = 0; c < v1; ++c) n1.at(v - 2, c) = mb.at(v - 1, c);
        for (int idx = v - 3; idx >= 0; --idx) {
            RatMat next = n1.block(idx + 1, 0, 1, v1);
            RatMat row = next * b1 + mb.block(idx + 1, 0, 1, v1);
            n1.set_block(idx, 0, row);
        }
        u.set_block(0, v, n1); // bottom row of the mixing block stays zero
    }

    RatMat s = u * k * rat_inverse(u);
    MembershipReport out = step_slice_membership(v2, v1, s);
    if (!out.ok) {
        throw VerificationError(describe(out, "normalized matrix fails the step slice pattern"));
    }

    NormalizationResult res;
    res.u = u;
    res.s = s;
    res.steps = 1;
    res.corner_preserved =
        v1 == 0 || s.block(v, v, v1, v1) == k.block(v, v, v1, v1);
    return res;
}

NormalizationResult normalize_level(const Mu& mu, const RatMat& k) {
    int nn = mu.total();
    if (k.rows() != nn || k.cols() != nn) {
        throw ValidationError("matrix size does not match the composition");
    }
    MembershipReport in = shape_membership(ShapeKind::LevelP, mu, k);
    if (!in.ok) {
        throw ValidationError(describe(in, "input fails the level pattern"));
    }

    std::vector<int> chain = chain_from_mu(mu);
    RatMat cur = k;
    RatMat u_acc = RatMat::identity(nn);
    bool preserved = true;

    // Innermost corner first: the step on the bottom-right chain[t]-corner
    // leaves everything outside that corner's rows and columns intact, and
    // each conjugation is checked to land back in the next step's level
    // pattern before proceeding.
    for (int t = mu.n() - 1; t >= 0; --t) {
        int v2 = chain[static_cast<std::size_t>(t)];
        int v1 = chain[static_cast<std::size_t>(t) + 1];
        int off = nn - v2;
        RatMat corner = cur.block(off, off, v2, v2);
        MembershipReport step = step_level_membership(v2, v1, corner);
        if (!step.ok) {
            throw VerificationError(
                describe(step, "conjugated corner left the step level pattern"));
        }
        NormalizationResult one = step_normalize(v2, v1, corner);
        preserved = preserved && one.corner_preserved;
        RatMat u_t = RatMat::identity(nn);
        u_t.set_block(off, off, one.u);
        cur = u_t * cur * rat_inverse(u_t);
        u_acc = u_t * u_acc;
    }

    MembershipReport out = shape_membership(ShapeKind::SliceS, mu, cur);
    if (!out.ok) {
        throw VerificationError(describe(out, "result fails the slice pattern"));
    }
    MembershipReport grp = shape_membership(ShapeKind::GroupU, mu, u_acc);
    if (!grp.ok) {
        throw VerificationError(describe(grp, "witness left the group pattern"));
    }
    if (u_acc * k * rat_inverse(u_acc) != cur) {
        throw VerificationError("witness does not conjugate the input to the result");
    }

    NormalizationResult res;
    res.u = u_acc;
    res.s = cur;
    res.steps = mu.n();
    res.corner_preserved = preserved;
    return res;
}

LevelSample sample_level_witnessed(const Mu& mu, std::uint64_t seed) {
    Rng rng(seed);
    LevelSample out;
    out.w = sample_shape(ShapeKind::GroupU, mu, rng);
    out.s = sample_shape(ShapeKind::SliceS, mu, rng);
    out.k = out.w * out.s * rat_inverse(out.w);
    return out;
}

RatMat sample_level(const Mu& mu, std::uint64_t seed) {
    return sample_level_witnessed(mu, seed).k;
}

RatMat perturb_group_element(const RatMat& u, const Mu& mu, Rng& rng) {
    int nn = mu.total();
    if (u.rows() != nn || u.cols() != nn) {
        throw ValidationError("matrix size does not match the composition");
    }
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < nn; ++r) {
        for (int c = 0; c < nn; ++c) {
            if (pattern_entry(ShapeKind::GroupU, mu, r, c) == EntryRule::Free) {
                free_pos.emplace_back(r, c);
            }
        }
    }
    if (free_pos.empty()) {
        throw ValidationError("group pattern has no free entries to perturb");
    }
    auto [r, c] = free_pos[static_cast<std::size_t>(
        rng.int_in(0, static_cast<int>(free_pos.size()) - 1))];
    RatMat factor = RatMat::identity(nn);
    factor.at(r, c) = rng.nonzero_rational();
    return u * factor;
}

} // namespace bowlab
