#include "bowlab/cores.hpp"

#include "bowlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace bowlab {

std::vector<int> TwoRowSignature::u() const {
    std::vector<int> out;
    out.reserve(c.size());
    int acc = 0;
    for (int ci : c) {
        acc += ci;
        out.push_back(acc);
    }
    return out;
}

int TwoRowSignature::total() const {
    return std::accumulate(c.begin(), c.end(), 0);
}

std::string TwoRowSignature::str() const {
    std::ostringstream os;
    os << "k=" << k << " c=(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

bool signature_valid(const TwoRowSignature& sig) {
    if (sig.c.empty()) return false;
    int ones_or_more = 0;
    int twos = 0;
    for (int ci : sig.c) {
        if (ci < 0 || ci > 2) return false;
        if (ci >= 1) ++ones_or_more;
        if (ci == 2) ++twos;
    }
    int total = sig.total();
    int hi = std::max(sig.k, total - sig.k);
    int lo = std::min(sig.k, total - sig.k);
    return hi <= ones_or_more && lo >= twos;
}

std::vector<TwoRowSignature> enumerate_signatures(int n) {
    if (n <= 0) return {};
    std::vector<TwoRowSignature> out;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    std::function<void(int)> walk = [&](int pos) {
        if (pos == n) {
            int total = std::accumulate(c.begin(), c.end(), 0);
            for (int k = 0; k <= total; ++k) {
                TwoRowSignature sig{k, c};
                if (signature_valid(sig)) out.push_back(sig);
            }
            return;
        }
        for (int v = 0; v <= 2; ++v) {
            c[static_cast<std::size_t>(pos)] = v;
            walk(pos + 1);
        }
    };
    walk(0);
    std::stable_sort(out.begin(), out.end(),
                     [](const TwoRowSignature& x, const TwoRowSignature& y) {
                         return x.k < y.k;
                     });
    return out;
}

CoreData core_data(const TwoRowSignature& sig) {
    CoreData d;
    int n = sig.n();
    for (int i = n; i >= 1; --i) {
        if (sig.c[static_cast<std::size_t>(i - 1)] == 2) d.a.push_back(i);
    }
    if (!d.a.empty()) {
        int a_min = d.a.back();
        for (int i = n; i > a_min; --i) {
            if (sig.c[static_cast<std::size_t>(i - 1)] == 0) d.b.push_back(i);
        }
    }
    for (int bi : d.b) {
        int cnt = 0;
        for (int ai : d.a) {
            if (ai < bi) ++cnt;
        }
        d.r.push_back(cnt);
        d.rank += cnt;
    }
    return d;
}

namespace {

struct StepContext {
    CoreData data;
    int b_q = 0; // lowest zero past the last double increment
    int j = 0;   // the last double increment itself
    int q = 0;   // 1-based position of b_q in the descending b list
    int r_q = 0;
};

StepContext step_context(const TwoRowSignature& sig) {
    StepContext ctx;
    ctx.data = core_data(sig);
    if (ctx.data.rank == 0) {
        throw ValidationError("no surgery step at rank 0: " + sig.str());
    }
    ctx.b_q = ctx.data.b.back();
    ctx.q = static_cast<int>(ctx.data.b.size());
    ctx.r_q = ctx.data.r.back();
    // The surgery splits the largest double increment sitting strictly below
    // the chosen zero. The a-list is descending, and its last entry lies
    // below every element of b, so the scan always succeeds.
    ctx.j = 0;
    for (int cand : ctx.data.a) {
        if (cand < ctx.b_q) {
            ctx.j = cand;
            break;
        }
    }
    if (ctx.j == 0) {
        throw VerificationError("no double increment below the zero at " +
                                std::to_string(ctx.b_q));
    }
    return ctx;
}

void check_rank(const TwoRowSignature& next, long long expect, const char* what) {
    long long got = core_data(next).rank;
    if (got != expect) {
        std::ostringstream os;
        os << what << " produced rank " << got << " for " << next.str()
           << ", predicted " << expect;
        throw VerificationError(os.str());
    }
}

} // namespace

TwoRowSignature u_step(const TwoRowSignature& sig) {
    StepContext ctx = step_context(sig);
    TwoRowSignature next;
    next.k = sig.k;
    for (int i = 1; i <= sig.n(); ++i) {
        int ci = sig.c[static_cast<std::size_t>(i - 1)];
        if (i == ctx.b_q) continue; // the deleted zero
        if (i == ctx.j) {
            next.c.push_back(1);
            next.c.push_back(1);
        } else {
            next.c.push_back(ci);
        }
    }
    long long drop = static_cast<long long>(ctx.r_q) + ctx.q - 1;
    if (drop <= 0) throw VerificationError("u_step drop must be positive");
    check_rank(next, ctx.data.rank - drop, "u_step");
    return next;
}

TwoRowSignature v_step(const TwoRowSignature& sig) {
    StepContext ctx = step_context(sig);
    TwoRowSignature next;
    next.k = sig.k;
    for (int i = 1; i <= sig.n(); ++i) {
        int ci = sig.c[static_cast<std::size_t>(i - 1)];
        if (i == ctx.b_q) continue;
        if (i == ctx.j) next.c.push_back(0);
        next.c.push_back(ci);
    }
    check_rank(next, ctx.data.rank - 1, "v_step");
    return next;
}

RatMat nil_matrix(const TwoRowSignature& sig) {
    int total = sig.total();
    RatMat nil(total, total);
    std::vector<int> u = sig.u();
    for (int i = 1; i <= sig.n(); ++i) {
        if (sig.c[static_cast<std::size_t>(i - 1)] != 2) continue;
        int p = total - u[static_cast<std::size_t>(i - 1)] + 1;
        nil.at(p, p - 1) = rat(1); // (p+1, p) in 1-based coordinates
    }
    return nil;
}

bool m_entry_free(const TwoRowSignature& sig, int row1, int col1) {
    int total = sig.total();
    if (row1 < 1 || row1 > total || col1 < 1 || col1 > total) {
        throw ValidationError("entry outside the gl block");
    }
    std::vector<int> u = sig.u();
    for (int i = 1; i <= sig.n(); ++i) {
        if (sig.c[static_cast<std::size_t>(i - 1)] != 2) continue;
        int p = total - u[static_cast<std::size_t>(i - 1)] + 1;
        if (col1 == p && row1 >= p) return false;
        if (row1 == p + 1 && col1 >= p + 2) return false;
    }
    return true;
}

std::vector<int> torus_weights(const TwoRowSignature& sig) {
    int total = sig.total();
    std::vector<int> v(static_cast<std::size_t>(total), 1);
    std::vector<int> u = sig.u();
    for (int i = 1; i <= sig.n(); ++i) {
        if (sig.c[static_cast<std::size_t>(i - 1)] != 2) continue;
        int p = total - u[static_cast<std::size_t>(i - 1)] + 1;
        v[static_cast<std::size_t>(p - 1)] = 2;
        v[static_cast<std::size_t>(p)] = 0;
    }
    return v;
}

std::vector<int> ChartDescription::all() const {
    std::vector<int> out = tail_weights;
    out.insert(out.end(), m_weights.begin(), m_weights.end());
    return out;
}

ChartDescription chart_description(const TwoRowSignature& sig) {
    ChartDescription out;
    int total = sig.total();
    std::vector<int> u = sig.u();
    std::vector<int> v = torus_weights(sig);
    for (int i = 1; i <= sig.n(); ++i) {
        if (sig.c[static_cast<std::size_t>(i - 1)] != 0) continue;
        int lo = total - u[static_cast<std::size_t>(i - 1)] + 1;
        for (int x = lo; x <= total; ++x) {
            out.tail_weights.push_back(v[static_cast<std::size_t>(x - 1)]);
        }
        for (int x = lo; x <= total; ++x) {
            out.tail_weights.push_back(2 - v[static_cast<std::size_t>(x - 1)]);
        }
    }
    for (int r = 1; r <= total; ++r) {
        for (int c = 1; c <= total; ++c) {
            if (m_entry_free(sig, r, c)) {
                out.m_weights.push_back(v[static_cast<std::size_t>(r - 1)] + 2 -
                                        v[static_cast<std::size_t>(c - 1)]);
            }
        }
    }
    return out;
}

BaseCase base_case_descriptor(const TwoRowSignature& sig) {
    CoreData d = core_data(sig);
    if (d.rank != 0) {
        throw ValidationError("base case requires rank 0, got " +
                              std::to_string(d.rank));
    }
    int p = static_cast<int>(d.a.size());
    BaseCase bc;
    bc.sub = sig.k - p;
    bc.amb = sig.total() - 2 * p;
    if (bc.sub < 0 || bc.sub > bc.amb) {
        throw VerificationError("base case dimensions out of range for " + sig.str());
    }
    return bc;
}

Polynomial gaussian_binomial(int m, int k) {
    if (k < 0 || k > m) return Polynomial();
    // row-by-row addition rule, keeping only the current row
    std::vector<Polynomial> row(static_cast<std::size_t>(m) + 1);
    row[0] = Polynomial::one();
    for (int mm = 1; mm <= m; ++mm) {
        for (int kk = std::min(mm, k); kk >= 1; --kk) {
            Polynomial shifted = row[static_cast<std::size_t>(kk)].shifted(kk);
            row[static_cast<std::size_t>(kk)] =
                row[static_cast<std::size_t>(kk) - 1] + shifted;
        }
    }
    return row[static_cast<std::size_t>(k)];
}

TreeStats recursion_tree(const TwoRowSignature& sig) {
    if (!signature_valid(sig)) {
        throw ValidationError("invalid signature: " + sig.str());
    }
    long long budget = 10000;
    if (const char* env = std::getenv("BOWLAB_NODE_BUDGET")) {
        char* end = nullptr;
        long long parsed = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) budget = parsed;
    }
    TreeStats stats;
    std::function<void(const TwoRowSignature&, int)> walk =
        [&](const TwoRowSignature& node, int depth) {
            if (++stats.nodes > budget) {
                throw ValidationError("recursion exceeded the node budget of " +
                                      std::to_string(budget));
            }
            stats.max_depth = std::max(stats.max_depth, depth);
            if (core_data(node).rank == 0) {
                ++stats.leaves;
                stats.leaf_cases.push_back(base_case_descriptor(node));
                return;
            }
            walk(u_step(node), depth + 1);
            walk(v_step(node), depth + 1);
        };
    walk(sig, 0);
    return stats;
}

} // namespace bowlab
