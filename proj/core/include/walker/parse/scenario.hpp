#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walker/geometry/tensor.hpp"
#include "walker/symcore/params.hpp"

namespace walker {

enum class Check { Ry, GradientRy, Trace, Divergence };

const char* to_string(Check c);
std::optional<Check> check_from_string(std::string_view s);

struct Sampling {
    int count = 64;
    double lo = -2.0;
    double hi = 2.0;
    std::uint64_t seed = 42;
    double tol = 1e-9;
};

struct FieldSpec {
    enum class Type { Vector, Gradient, Hodge };
    Type type = Type::Vector;
    VectorField vector;  // V for Vector, Y for Hodge
    Expr potential;      // F for Gradient and Hodge
};

// Expressions are stored as written; resolve() substitutes the scenario constants.
struct Scenario {
    std::string name;
    int epsilon = 1;
    std::optional<Expr> beta, lambda, mu;  // nullopt means "free"
    Expr f;
    FieldSpec field;
    std::vector<Check> checks;
    Sampling sampling;

    // Constants with free ones left as the symbols beta, lambda, mu.
    Params params() const;
    Expr resolve(const Expr& e) const;
    std::vector<std::string> free_constants() const;
    bool has_potential() const { return field.type != FieldSpec::Type::Vector; }
};

// Strict validation: SchemaError for unknown/missing/mistyped keys, ValueError for bad values.
Scenario parse_scenario(std::string_view document);
std::string scenario_to_json(const Scenario& s);

}  // namespace walker
