#pragma once

#include <gtest/gtest.h>

#include <string>

#include "random_expr.hpp"
#include "walker/parse/expr_parser.hpp"
#include "walker/parse/render.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker::testing {

inline Expr P(std::string_view s) { return parse_expr(s); }

inline ::testing::AssertionResult SimplifiesToZero(const Expr& e) {
    Expr s = simplify(e);
    if (s.is_zero()) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "leftover: " << render(s);
}

inline ::testing::AssertionResult SameExpr(const Expr& a, const Expr& b) {
    Expr d = simplify(a - b);
    if (d.is_zero()) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << render(simplify(a)) << " != " << render(simplify(b)) << " (diff "
                                         << render(d) << ")";
}

}  // namespace walker::testing
