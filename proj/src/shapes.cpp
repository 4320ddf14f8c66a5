#include "bowlab/shapes.hpp"

#include "bowlab/errors.hpp"

#include <sstream>

namespace bowlab {

Mu::Mu(std::vector<int> parts) : parts_(std::move(parts)) {
    offsets_.reserve(parts_.size());
    for (int p : parts_) {
        if (p <= 0) {
            throw ValidationError("composition parts must be positive");
        }
        offsets_.push_back(total_);
        total_ += p;
    }
}

int Mu::block_of(int g0) const {
    for (int b = n() - 1; b >= 0; --b) {
        if (g0 >= offset(b)) return b;
    }
    throw ValidationError("index outside the composition range");
}

bool Mu::is_block_end(int c0) const {
    int b = block_of(c0);
    return c0 == offset(b) + part(b) - 1;
}

std::string Mu::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < n(); ++i) {
        if (i) out << ",";
        out << part(i);
    }
    out << ")";
    return out.str();
}

std::vector<int> chain_from_mu(const Mu& mu) {
    std::vector<int> chain;
    chain.reserve(static_cast<std::size_t>(mu.n()) + 1);
    int rest = mu.total();
    chain.push_back(rest);
    for (int i = 0; i < mu.n(); ++i) {
        rest -= mu.part(i);
        chain.push_back(rest);
    }
    return chain; // ends with 0
}

RatMat build_f(const Mu& mu) {
    int nn = mu.total();
    RatMat f(nn, nn);
    for (int c = 0; c + 1 < nn; ++c) {
        if (!mu.is_block_end(c)) {
            f.at(c + 1, c) = rat(1);
        }
    }
    return f;
}

EntryRule pattern_entry(ShapeKind kind, const Mu& mu, int r0, int c0) {
    int bi = mu.block_of(r0);
    int bj = mu.block_of(c0);
    int lr = r0 - mu.offset(bi); // 0-based position inside the block
    int lc = c0 - mu.offset(bj);
    switch (kind) {
    case ShapeKind::GroupU:
        if (bi > bj) return EntryRule::Zero;
        if (bi == bj) {
            if (lr > lc) return EntryRule::Zero;
            if (lr == lc) return EntryRule::One;
            return EntryRule::Free;
        }
        // upper block: last row zero
        return (lr == mu.part(bi) - 1) ? EntryRule::Zero : EntryRule::Free;
    case ShapeKind::SliceS:
        if (bi == bj) {
            if (lc == mu.part(bj) - 1) return EntryRule::Free; // last column
            return (lr == lc + 1) ? EntryRule::One : EntryRule::Zero;
        }
        if (bi > bj) {
            return (lc == mu.part(bj) - 1) ? EntryRule::Free : EntryRule::Zero;
        }
        return (lr == 0) ? EntryRule::Free : EntryRule::Zero; // first row free
    case ShapeKind::LevelP:
        if (mu.is_block_end(c0)) return EntryRule::Free;
        if (r0 == c0 + 1) return EntryRule::One;
        if (r0 >= c0 + 2) return EntryRule::Zero;
        return EntryRule::Free;
    case ShapeKind::FMatrix: {
        bool one = (r0 == c0 + 1) && !mu.is_block_end(c0);
        return one ? EntryRule::One : EntryRule::Zero;
    }
    }
    throw ValidationError("unknown shape kind");
}

namespace {

void record(MembershipReport& rep, int r0, int c0, const char* expected,
            const Rational& found) {
    rep.ok = false;
    ++rep.violation_count;
    if (static_cast<int>(rep.violations.size()) < MembershipReport::kMaxViolations) {
        rep.violations.push_back(Violation{r0 + 1, c0 + 1, expected, rat_str(found)});
    }
}

void check_entry(MembershipReport& rep, EntryRule rule, const RatMat& m, int r0,
                 int c0) {
    const Rational& v = m.at(r0, c0);
    switch (rule) {
    case EntryRule::Free:
        return;
    case EntryRule::Zero:
        if (v != 0) record(rep, r0, c0, "0", v);
        return;
    case EntryRule::One:
        if (v != 1) record(rep, r0, c0, "1", v);
        return;
    }
}

} // namespace

MembershipReport shape_membership(ShapeKind kind, const Mu& mu, const RatMat& m) {
    MembershipReport rep;
    int nn = mu.total();
    if (m.rows() != nn || m.cols() != nn) {
        throw ValidationError("matrix size does not match the composition");
    }
    for (int i = 0; i < nn; ++i) {
        for (int j = 0; j < nn; ++j) {
            check_entry(rep, pattern_entry(kind, mu, i, j), m, i, j);
        }
    }
    return rep;
}

MembershipReport step_level_membership(int v2, int v1, const RatMat& k) {
    if (v2 <= v1 || v1 < 0) {
        throw ValidationError("descending step requires v2 > v1 >= 0");
    }
    if (k.rows() != v2 || k.cols() != v2) {
        throw ValidationError("matrix size does not match the step");
    }
    MembershipReport rep;
    int v = v2 - v1;
    for (int c = 0; c + 1 < v; ++c) {
        for (int r = 0; r < v2; ++r) {
            if (r == c + 1) {
                if (k.at(r, c) != 1) record(rep, r, c, "1", k.at(r, c));
            } else if (r >= c + 2) {
                if (k.at(r, c) != 0) record(rep, r, c, "0", k.at(r, c));
            }
        }
    }
    return rep;
}

MembershipReport step_slice_membership(int v2, int v1, const RatMat& k) {
    if (v2 <= v1 || v1 < 0) {
        throw ValidationError("descending step requires v2 > v1 >= 0");
    }
    if (k.rows() != v2 || k.cols() != v2) {
        throw ValidationError("matrix size does not match the step");
    }
    MembershipReport rep;
    int v = v2 - v1;
    for (int c = 0; c + 1 < v; ++c) {
        for (int r = 0; r < v2; ++r) {
            const char* expected = (r == c + 1) ? "1" : "0";
            Rational want = (r == c + 1) ? rat(1) : rat(0);
            if (k.at(r, c) != want) record(rep, r, c, expected, k.at(r, c));
        }
    }
    for (int r = 1; r < v; ++r) {
        for (int c = v; c < v2; ++c) {
            if (k.at(r, c) != 0) record(rep, r, c, "0", k.at(r, c));
        }
    }
    return rep;
}

MembershipReport level_membership_via_corners(const Mu& mu, const RatMat& m) {
    int nn = mu.total();
    if (m.rows() != nn || m.cols() != nn) {
        throw ValidationError("matrix size does not match the composition");
    }
    MembershipReport rep;
    std::vector<int> chain = chain_from_mu(mu);
    for (int t = 0; t < mu.n(); ++t) {
        int v2 = chain[static_cast<std::size_t>(t)];
        int v1 = chain[static_cast<std::size_t>(t) + 1];
        int off = nn - v2;
        RatMat corner = m.block(off, off, v2, v2);
        MembershipReport step = step_level_membership(v2, v1, corner);
        if (!step.ok) {
            rep.ok = false;
            rep.violation_count += step.violation_count;
            for (const auto& viol : step.violations) {
                if (static_cast<int>(rep.violations.size()) <
                    MembershipReport::kMaxViolations) {
                    rep.violations.push_back(Violation{viol.row + off, viol.col + off,
                                                       viol.expected, viol.found});
                }
            }
        }
    }
    return rep;
}

RatMat sample_shape(ShapeKind kind, const Mu& mu, Rng& rng) {
    int nn = mu.total();
    RatMat m(nn, nn);
    for (int i = 0; i < nn; ++i) {
        for (int j = 0; j < nn; ++j) {
            switch (pattern_entry(kind, mu, i, j)) {
            case EntryRule::Free:
                m.at(i, j) = rng.rational();
                break;
            case EntryRule::One:
                m.at(i, j) = rat(1);
                break;
            case EntryRule::Zero:
                break;
            }
        }
    }
    return m;
}

} // namespace bowlab
