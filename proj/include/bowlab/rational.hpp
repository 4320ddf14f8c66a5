#pragma once

#include <gmpxx.h>

#include <string>

namespace bowlab {

// Exact rational numbers, backed by GMP. mpq_class keeps values canonical
// (fully reduced, positive denominator) under arithmetic; the helpers below
// canonicalize at every construction edge so the invariant holds everywhere.
using Rational = mpq_class;

// num/den, reduced; den must be nonzero.
Rational rat(long num, long den = 1);

// Accepts "p", "-p", or "p/q" with optional surrounding whitespace.
Rational rat_parse(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rational& r);

bool rat_is_integer(const Rational& r);

} // namespace bowlab
