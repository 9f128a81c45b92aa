#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walker/parse/scenario.hpp"
#include "walker/symcore/params.hpp"

namespace walker {

enum class Theorem {
    T1Hodge,
    T2,
    T3,
    C1,
    C2,
    T1Gradient,
    TTCase1a,
    TTCase1b,
    TTCase2a,
    TTCase2b,
    Beta0Mu0,
    Beta0MuNonzero,
    Fin,
};

const char* to_string(Theorem t);
std::optional<Theorem> theorem_from_string(std::string_view s);

// Printed keeps the closed forms exactly as originally stated. Corrected uses variants that
// solve the component system where the two differ (t2, t1-gradient, tt-1b, tt-2a).
enum class Form { Printed, Corrected };

// Free inputs by role name: a, b, c, v, xi, Z1..Z5, F, F1, F2, F4..F7, R, C, D, H, A, G, f ...
using Inputs = std::map<std::string, Expr>;

struct FamilySpec {
    Theorem theorem = Theorem::T2;
    Inputs inputs;
    Params params;
    Form form = Form::Printed;
};

using NamedExprs = std::vector<std::pair<std::string, Expr>>;

struct BuiltScenario {
    Scenario scenario;
    NamedExprs constraints;  // side conditions left by the family, simplified
    Params params;           // constants of the build; epsilon may be the sign symbol
};

BuiltScenario build_t1_hodge(const Inputs& in, const Params& p);
BuiltScenario build_t2(const Inputs& in, const Params& p, Form form = Form::Printed);
BuiltScenario build_t3(const Inputs& in, const Params& p);
BuiltScenario build_c1(const Inputs& in, const Params& p);
BuiltScenario build_c2(const Inputs& in, const Params& p);
BuiltScenario build_t1_gradient(const Inputs& in, const Params& p, Form form = Form::Printed);

enum class TTCase { Case1a, Case1b, Case2a, Case2b };
BuiltScenario build_tt(TTCase c, const Inputs& in, const Params& p, Form form = Form::Printed);

enum class Beta0Branch { MuZero, MuNonzero };
BuiltScenario build_beta0(Beta0Branch branch, const Inputs& in, const Params& p);

BuiltScenario build_fin(const Inputs& in, const Params& p);

BuiltScenario build(const FamilySpec& spec);

// The full soliton residual of a build (ry for vector fields, gradient_ry for gradients,
// ry of Y + grad F for Hodge fields), labelled "11".."33".
NamedExprs family_residual(const BuiltScenario& b);

// The residual divided by two, the normalization of the component systems.
NamedExprs family_system(const BuiltScenario& b);

}  // namespace walker
