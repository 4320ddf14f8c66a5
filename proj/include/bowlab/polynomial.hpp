#pragma once

#include "bowlab/rational.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace bowlab {

// Degree of the zero polynomial; compares below every true degree.
inline constexpr long kNegInfDegree = std::numeric_limits<long>::min();

// Dense univariate polynomial over the rationals. coeffs_[k] is the
// coefficient of x^k; the representation never carries trailing zeros, so
// the zero polynomial is the empty vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coeffs); // trims trailing zeros

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(rat(1)); }
    // c * x^k
    static Polynomial monomial(const Rational& c, long k);
    static Polynomial x_power(long k) { return monomial(rat(1), k); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    long degree() const {
        return coeffs_.empty() ? kNegInfDegree
                               : static_cast<long>(coeffs_.size()) - 1;
    }
    // Zero outside the stored range.
    Rational coeff(long k) const;
    Rational leading() const; // precondition: nonzero
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Multiply by x^k (k >= 0).
    Polynomial shifted(long k) const;

    Rational eval(const Rational& x) const;

    bool is_monic() const;
    Polynomial monic() const; // precondition: nonzero

    std::string str() const; // e.g. "x^2 - 3*x + 1/2"

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Euclidean division by a nonzero divisor: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

// True when b is nonzero and divides a exactly.
bool poly_divides(const Polynomial& b, const Polynomial& a);

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Scale so the coefficients become coprime integers with positive leading
// coefficient; zero maps to zero. (Scaling by nonzero rationals is invertible,
// so this is free to use inside elimination algorithms.)
Polynomial poly_primitive(const Polynomial& p);

// Linear expressions in x with rational coefficients: "x^2 - 3*x + 1/2",
// "-x", "7", "1/2*x^3". Used by the JSON matrix readers.
Polynomial poly_parse(const std::string& text);

} // namespace bowlab
