#pragma once

#include <optional>

#include "walker/symcore/expr.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {

// Soliton constants. beta, lambda and mu may be rationals or symbolic expressions;
// epsilon is either a concrete sign (+1/-1) or the sign symbol `eps`.
struct Params {
    Expr beta = param("beta");
    Expr lambda = param("lambda");
    Expr mu = param("mu");
    Expr epsilon = sign_param("eps");

    Params() = default;
    Params(Expr beta, Expr lambda, Expr mu, Expr epsilon);
    Params(const Rational& beta, const Rational& lambda, const Rational& mu, int epsilon);

    // Concrete epsilon as +1/-1, or nullopt when it is the sign symbol.
    std::optional<int> sign() const;

    // Bindings mapping the parameter symbols beta, lambda, mu, eps to these values.
    Bindings bindings() const;
};

void validate_epsilon(const Expr& epsilon);

}  // namespace walker
