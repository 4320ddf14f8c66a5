#pragma once

#include "bowlab/rational.hpp"

#include <string>
#include <vector>

namespace bowlab {

// One term of a multivariate polynomial: coefficient times the monomial
// with the given exponent per variable.
struct MonomialTerm {
    std::vector<int> exps;
    Rational coef;
};

struct MultiPoly {
    std::vector<MonomialTerm> terms;
};

// A graded commutative ring presented by degree-1 generators (sitting in
// cohomological degree 2) and homogeneous relations.
struct Presentation {
    std::vector<std::string> variables;
    std::vector<MultiPoly> relations;
};

// Throws ValidationError on malformed input: no variables, exponent lists
// of the wrong length, negative exponents, or inhomogeneous relations.
void validate_presentation(const Presentation& pres);

// Dimension of the quotient in one cohomological degree. Odd or negative
// degrees hold nothing because the generators sit in degree 2. Internally:
// count degree-(d/2) monomials, subtract the rank of all monomial multiples
// of the relations in that degree (exact elimination over the rationals).
long long graded_dimension(const Presentation& pres, int coh_degree);

} // namespace bowlab
