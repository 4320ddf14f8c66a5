#include "bowlab/laurent.hpp"

#include "bowlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bowlab {

TruncatedLaurent::TruncatedLaurent(long floor, std::vector<Rational> asc, bool exact)
    : floor_(floor), asc_(std::move(asc)), exact_(exact) {
    trim_top();
}

void TruncatedLaurent::trim_top() {
    while (!asc_.empty() && asc_.back() == 0) {
        asc_.pop_back();
    }
}

TruncatedLaurent TruncatedLaurent::from_poly(const Polynomial& p) {
    return TruncatedLaurent(0, p.coeffs(), true);
}

TruncatedLaurent TruncatedLaurent::monomial(const Rational& c, long k) {
    return TruncatedLaurent(k, {c}, true);
}

Rational TruncatedLaurent::coeff_at(long e) const {
    if (e > top_degree()) {
        return rat(0);
    }
    if (e >= floor_) {
        return asc_[static_cast<std::size_t>(e - floor_)];
    }
    if (exact_) {
        return rat(0);
    }
    std::ostringstream msg;
    msg << "coefficient of x^" << e << " requested below the known floor x^" << floor_;
    throw PrecisionError(msg.str());
}

bool TruncatedLaurent::vanishes_above(long k) const {
    for (long e = std::max(k + 1, floor_); e <= top_degree(); ++e) {
        if (asc_[static_cast<std::size_t>(e - floor_)] != 0) {
            return false;
        }
    }
    return true;
}

bool TruncatedLaurent::is_exact_zero() const {
    if (!exact_) return false;
    for (const auto& c : asc_) {
        if (c != 0) return false;
    }
    return true;
}

long TruncatedLaurent::leading_exponent() const {
    for (long e = top_degree(); e >= floor_; --e) {
        if (asc_[static_cast<std::size_t>(e - floor_)] != 0) {
            return e;
        }
    }
    if (exact_) {
        throw SingularError("leading exponent of the exact zero series");
    }
    throw PrecisionError("no nonzero coefficient inside the known window");
}

TruncatedLaurent TruncatedLaurent::operator-() const {
    TruncatedLaurent r = *this;
    for (auto& c : r.asc_) {
        c = -c;
    }
    return r;
}

TruncatedLaurent TruncatedLaurent::operator+(const TruncatedLaurent& o) const {
    bool exact = exact_ && o.exact_;
    long lo;
    if (exact) {
        lo = std::min(floor_, o.floor_);
    } else {
        lo = std::max(known_floor(), o.known_floor());
    }
    long hi = std::max(top_degree(), o.top_degree());
    if (hi < lo) {
        return TruncatedLaurent(lo, {}, exact);
    }
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), rat(0));
    auto add_in = [&](const TruncatedLaurent& t, int sign) {
        for (long e = std::max(lo, t.floor_); e <= t.top_degree(); ++e) {
            Rational v = t.asc_[static_cast<std::size_t>(e - t.floor_)];
            out[static_cast<std::size_t>(e - lo)] += (sign > 0) ? v : Rational(-v);
        }
    };
    add_in(*this, +1);
    add_in(o, +1);
    return TruncatedLaurent(lo, std::move(out), exact);
}

TruncatedLaurent TruncatedLaurent::operator-(const TruncatedLaurent& o) const {
    return *this + (-o);
}

TruncatedLaurent TruncatedLaurent::operator*(const TruncatedLaurent& o) const {
    if (is_exact_zero() || o.is_exact_zero()) {
        return TruncatedLaurent();
    }
    bool exact = exact_ && o.exact_;
    long lo;
    if (exact) {
        lo = floor_ + o.floor_;
    } else {
        // Unknown terms below one factor's floor meet known terms up to the
        // other factor's top, so knowledge stops at the larger contamination
        // point.
        lo = kNegInfDegree;
        if (!exact_) lo = std::max(lo, floor_ + o.top_degree());
        if (!o.exact_) lo = std::max(lo, o.floor_ + top_degree());
    }
    long hi = top_degree() + o.top_degree();
    if (hi < lo) {
        return TruncatedLaurent(lo, {}, exact);
    }
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), rat(0));
    for (long e1 = floor_; e1 <= top_degree(); ++e1) {
        const Rational& a = asc_[static_cast<std::size_t>(e1 - floor_)];
        if (a == 0) continue;
        for (long e2 = std::max(o.floor_, lo - e1); e2 <= o.top_degree(); ++e2) {
            const Rational& b = o.asc_[static_cast<std::size_t>(e2 - o.floor_)];
            if (b == 0) continue;
            out[static_cast<std::size_t>(e1 + e2 - lo)] += a * b;
        }
    }
    return TruncatedLaurent(lo, std::move(out), exact);
}

TruncatedLaurent TruncatedLaurent::operator*(const Rational& c) const {
    if (c == 0) {
        // Scaling by zero erases the unknown tail as well.
        return TruncatedLaurent();
    }
    TruncatedLaurent r = *this;
    for (auto& x : r.asc_) {
        x *= c;
    }
    return r;
}

bool TruncatedLaurent::operator==(const TruncatedLaurent& o) const {
    if (exact_ != o.exact_) return false;
    long lo = std::min(floor_, o.floor_);
    if (!exact_) {
        if (floor_ != o.floor_) return false;
        lo = floor_;
    }
    long hi = std::max(top_degree(), o.top_degree());
    for (long e = lo; e <= hi; ++e) {
        Rational a = (e >= floor_) ? coeff_at(e) : rat(0);
        Rational b = (e >= o.floor_) ? o.coeff_at(e) : rat(0);
        if (a != b) return false;
    }
    return true;
}

TruncatedLaurent TruncatedLaurent::shifted(long k) const {
    TruncatedLaurent r = *this;
    r.floor_ += k;
    return r;
}

TruncatedLaurent TruncatedLaurent::truncated(long new_floor) const {
    if (new_floor <= floor_) {
        if (exact_) {
            return *this; // padding with zeros below is implicit for exact series
        }
        if (new_floor == floor_) return *this;
        throw PrecisionError("cannot lower the floor of an inexact series");
    }
    std::vector<Rational> out;
    bool dropped_nonzero = false;
    for (long e = floor_; e <= top_degree(); ++e) {
        const Rational& v = asc_[static_cast<std::size_t>(e - floor_)];
        if (e < new_floor) {
            if (v != 0) dropped_nonzero = true;
        } else {
            out.push_back(v);
        }
    }
    bool exact = exact_ && !dropped_nonzero;
    return TruncatedLaurent(new_floor, std::move(out), exact);
}

Polynomial TruncatedLaurent::floor_truncation(long k) const {
    if (!exact_ && floor_ > k) {
        std::ostringstream msg;
        msg << "truncation at x^" << k << " requested below the known floor x^" << floor_;
        throw PrecisionError(msg.str());
    }
    long base = std::min(k, 0L);
    // Coefficient of x^e lands at index e - base; for k >= 0 base is 0 and
    // exponents are preserved verbatim.
    std::vector<Rational> out;
    long hi = top_degree();
    if (hi < k) return Polynomial();
    out.assign(static_cast<std::size_t>(hi - base + 1), rat(0));
    for (long e = std::max(k, floor_); e <= hi; ++e) {
        out[static_cast<std::size_t>(e - base)] = asc_[static_cast<std::size_t>(e - floor_)];
    }
    return Polynomial(std::move(out));
}

Polynomial TruncatedLaurent::to_polynomial() const {
    if (!exact_) {
        throw PrecisionError("inexact series cannot be converted to a polynomial");
    }
    for (long e = floor_; e < 0 && e <= top_degree(); ++e) {
        if (asc_[static_cast<std::size_t>(e - floor_)] != 0) {
            throw SingularError("series with negative exponents is not a polynomial");
        }
    }
    return floor_truncation(0);
}

std::string TruncatedLaurent::str() const {
    std::ostringstream out;
    bool first = true;
    for (long e = top_degree(); e >= floor_; --e) {
        Rational c = asc_[static_cast<std::size_t>(e - floor_)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (e == 0) {
            out << rat_str(mag);
        } else {
            if (mag != 1) out << rat_str(mag) << "*";
            out << "x^" << e;
        }
    }
    if (first) out << "0";
    out << " [" << (exact_ ? "exact" : "floor") << " " << floor_ << "]";
    return out.str();
}

TruncatedLaurent laurent_div(const TruncatedLaurent& p, const TruncatedLaurent& q,
                             long depth) {
    if (q.is_exact_zero()) {
        throw SingularError("laurent division by zero");
    }
    long qe = q.leading_exponent(); // may raise PrecisionError
    Rational qlead = q.coeff_at(qe);
    long rtop = p.top_degree() - qe;
    if (rtop < depth) {
        return TruncatedLaurent(depth, {}, false);
    }
    std::vector<Rational> res(static_cast<std::size_t>(rtop - depth + 1), rat(0));
    TruncatedLaurent rem = p;
    for (long e = rtop; e >= depth; --e) {
        Rational c = rem.coeff_at(e + qe);
        if (c != 0) {
            c /= qlead;
            res[static_cast<std::size_t>(e - depth)] = c;
            rem = rem - q.shifted(e) * c;
        }
    }
    bool exact = p.exact() && q.exact() && rem.is_exact_zero();
    return TruncatedLaurent(depth, std::move(res), exact);
}

TruncatedLaurent laurent_div(const Polynomial& p, const Polynomial& q, long depth) {
    return laurent_div(TruncatedLaurent::from_poly(p), TruncatedLaurent::from_poly(q),
                       depth);
}

Polynomial truncate_floor(const TruncatedLaurent& y, long k) {
    return y.floor_truncation(k);
}

} // namespace bowlab
