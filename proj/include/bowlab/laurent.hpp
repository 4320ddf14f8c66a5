#pragma once

#include "bowlab/polynomial.hpp"
#include "bowlab/rational.hpp"

#include <string>
#include <vector>

namespace bowlab {

// A Laurent series in descending powers of x, stored as a finite window of
// coefficients for the exponents [floor, top]. Exponents above `top` are
// zero. Exponents below `floor` are exactly zero when `exact()` is true
// (the value is a genuine Laurent polynomial); otherwise they are unknown,
// and reading one raises PrecisionError — never a silent zero.
class TruncatedLaurent {
public:
    // The exact zero series.
    TruncatedLaurent() : floor_(0), exact_(true) {}

    // Window constructor: asc[i] is the coefficient of x^(floor + i).
    TruncatedLaurent(long floor, std::vector<Rational> asc, bool exact);

    static TruncatedLaurent from_poly(const Polynomial& p);
    // c * x^k as an exact series.
    static TruncatedLaurent monomial(const Rational& c, long k);

    bool exact() const { return exact_; }
    // Largest exponent that may carry a nonzero coefficient; every exponent
    // above it is zero. One less than floor() for an empty window.
    long top_degree() const { return floor_ + static_cast<long>(asc_.size()) - 1; }
    long floor_degree() const { return floor_; }
    // floor_degree() for inexact series, -inf sentinel for exact ones.
    long known_floor() const { return exact_ ? kNegInfDegree : floor_; }

    // Coefficient of x^e; PrecisionError when e lies below an inexact window.
    Rational coeff_at(long e) const;

    // True when every known coefficient above exponent k vanishes (this is
    // decidable for any k since exponents above the window are zero).
    bool vanishes_above(long k) const;

    // True when this is known to be exactly zero.
    bool is_exact_zero() const;

    // Exponent of the leading (highest nonzero) coefficient.
    // SingularError on the exact zero series; PrecisionError when the whole
    // known window vanishes but lower terms are unknown.
    long leading_exponent() const;

    TruncatedLaurent operator-() const;
    TruncatedLaurent operator+(const TruncatedLaurent& o) const;
    TruncatedLaurent operator-(const TruncatedLaurent& o) const;
    TruncatedLaurent operator*(const TruncatedLaurent& o) const;
    TruncatedLaurent operator*(const Rational& c) const;
    bool operator==(const TruncatedLaurent& o) const;
    bool operator!=(const TruncatedLaurent& o) const { return !(*this == o); }

    // Multiply by x^k (k may be negative).
    TruncatedLaurent shifted(long k) const;

    // Forget everything below new_floor (no-op when new_floor <= floor for
    // exact series; raising the floor of an exact series keeps it exact only
    // when the dropped coefficients are all zero).
    TruncatedLaurent truncated(long new_floor) const;

    // The terms with exponent >= k, as a Polynomial. For k >= 0 this is the
    // literal polynomial (exponents preserved). For k < 0 the window is
    // re-based so that index 0 holds the coefficient of x^k; the caller
    // carries the x^k factor. PrecisionError when the window does not reach
    // down to k.
    Polynomial floor_truncation(long k) const;

    // Conversion for a series known to be a genuine polynomial.
    // Requires exact() with no nonzero negative-exponent coefficients.
    Polynomial to_polynomial() const;

    std::string str() const;

private:
    void trim_top();
    long floor_;
    std::vector<Rational> asc_; // asc_[i] = coefficient of x^(floor_ + i)
    bool exact_;
};

inline TruncatedLaurent operator*(const Rational& c, const TruncatedLaurent& t) {
    return t * c;
}

// The series p/q with every coefficient of exponent >= depth computed
// exactly; the result's floor is depth. PrecisionError when the inputs do
// not determine the quotient that deep; SingularError when q is exactly zero.
TruncatedLaurent laurent_div(const TruncatedLaurent& p, const TruncatedLaurent& q,
                             long depth);
TruncatedLaurent laurent_div(const Polynomial& p, const Polynomial& q, long depth);

// The terms of y with exponent >= k as a Polynomial (see floor_truncation).
Polynomial truncate_floor(const TruncatedLaurent& y, long k);

} // namespace bowlab
