#include "bowlab/polynomial.hpp"

#include "bowlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bowlab {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) {
        coeffs_.push_back(constant);
    }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, long k) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, rat(0));
        p.coeffs_.back() = c;
    }
    return p;
}

bool Polynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rational Polynomial::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) {
        return rat(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw SingularError("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& x : r.coeffs_) {
        x *= c;
    }
    return r;
}

Polynomial Polynomial::shifted(long k) const {
    if (k < 0) {
        throw ValidationError("negative shift of a polynomial");
    }
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> out(static_cast<std::size_t>(k), rat(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = rat(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) {
        throw SingularError("monic normalization of the zero polynomial");
    }
    Rational inv = rat(1) / coeffs_.back();
    return *this * inv;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0) {
            out << rat_str(mag);
        } else {
            if (!unit) out << rat_str(mag) << "*";
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw SingularError("polynomial division by zero");
    }
    Polynomial q;
    Polynomial r = a;
    long db = b.degree();
    Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        Rational c = r.leading() / lb;
        Polynomial t = Polynomial::monomial(c, k);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

bool poly_divides(const Polynomial& b, const Polynomial& a) {
    if (b.is_zero()) return false;
    return poly_divmod(a, b).second.is_zero();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Polynomial poly_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    Polynomial r = p * scale;
    if (r.leading() < 0) {
        r = -r;
    }
    return r;
}

namespace {

// One term of a polynomial expression: [coef] ['*'] ['x' ['^' exp]].
struct TermParser {
    const std::string& s;
    std::size_t i = 0;

    explicit TermParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool done() {
        skip_ws();
        return i >= s.size();
    }

    // Reads an unsigned integer literal.
    mpz_class read_uint() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) {
            throw ValidationError("malformed polynomial literal: '" + s + "'");
        }
        return mpz_class(s.substr(start, i - start));
    }

    Polynomial read_term(bool negate) {
        skip_ws();
        Rational coef = rat(1);
        bool saw_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mpz_class num = read_uint();
            mpz_class den = 1;
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = read_uint();
                if (den == 0) {
                    throw SingularError("zero denominator in polynomial literal");
                }
            }
            coef = Rational(num, den);
            coef.canonicalize();
            saw_coef = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = static_cast<long>(read_uint().get_si());
            }
        } else if (!saw_coef) {
            throw ValidationError("malformed polynomial literal: '" + s + "'");
        }
        if (negate) coef = -coef;
        return Polynomial::monomial(coef, exp);
    }
};

} // namespace

Polynomial poly_parse(const std::string& text) {
    TermParser p(text);
    Polynomial result;
    bool first = true;
    while (!p.done()) {
        bool negate = false;
        p.skip_ws();
        if (p.i < p.s.size() && (p.s[p.i] == '+' || p.s[p.i] == '-')) {
            negate = (p.s[p.i] == '-');
            ++p.i;
        } else if (!first) {
            throw ValidationError("malformed polynomial literal: '" + text + "'");
        }
        result += p.read_term(negate);
        first = false;
    }
    if (first) {
        throw ValidationError("empty polynomial literal");
    }
    return result;
}

} // namespace bowlab
