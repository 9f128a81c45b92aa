#pragma once

#include "walker/symcore/expr.hpp"

namespace walker {

// Integral from 0 to v of e with respect to v. Terms of the form
// (v-free factor) * v^n * exp(k v + c) with k free of v are integrated in closed form;
// every other term is grouped by its v-dependent part into Antideriv nodes.
Expr integrate_from_zero(const Expr& e, Coord v);

}  // namespace walker
