#pragma once

#include <iosfwd>
#include <string>

#include "walker/symcore/expr.hpp"

namespace walker {

// Text form accepted by parse_expr; parse_expr(render(e)) rebuilds e structurally.
std::string render(const Expr& e);

std::ostream& operator<<(std::ostream& os, const Expr& e);

}  // namespace walker
