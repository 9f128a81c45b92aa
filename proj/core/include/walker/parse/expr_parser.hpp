#pragma once

#include <string_view>

#include "walker/symcore/expr.hpp"

namespace walker {

// Grammar, loosest to tightest: + - (left), * / and juxtaposition (left), ^ (right), unary minus.
// x, y, z are coordinates; exp log sin cos sqrt are builtins; eps is the sign symbol;
// D(e, v[, n]) differentiates; INT(e, v, lo) is the antiderivative from lo; name(v, ...) is an
// opaque function of coordinates; any other identifier is a parameter.
Expr parse_expr(std::string_view text);

}  // namespace walker
