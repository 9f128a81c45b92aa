#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walker/symcore/expr.hpp"

namespace walker {

// Canonical form: an expanded sum of monomials over Q whose indeterminates ("atoms") are
// coordinates, parameters, opaque functions, elementary kernels with canonical arguments,
// root atoms B^(1/q) and inverted irreducible-by-us sums. Idempotent.
Expr simplify(const Expr& e);

Expr diff(const Expr& e, Coord v);
Expr diff(const Expr& e, Coord v, int n);
Expr diff(const Expr& e, const Orders& orders);

struct Bindings {
    std::map<std::string, Expr> params;
    std::map<Coord, Expr> coords;
    // Opaque name -> closed form written in that function's argument coordinates.
    std::map<std::string, Expr> functions;
};

// Function bindings first, then simultaneous coordinate/parameter replacement, then simplify.
Expr substitute(const Expr& e, const Bindings& bindings);

using Monomial = std::vector<std::pair<Expr, int>>;

struct Term {
    Rational coef;
    Monomial mono;  // atoms sorted by compare(), nonzero exponents
};

// The canonical terms of simplify(e), leading term first.
std::vector<Term> canonical_terms(const Expr& e);

// Leading coefficient of the canonical form (0 for the zero expression).
Rational leading_coefficient(const Expr& e);

}  // namespace walker
