#include "walker/families/families.hpp"

#include <initializer_list>

#include "walker/errors.hpp"
#include "walker/families/integrate.hpp"
#include "walker/geometry/walker_metric.hpp"
#include "walker/soliton/soliton.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

const Expr X = var(Coord::X1);
const Expr Y = var(Coord::X2);
const Expr Z = var(Coord::X3);

Expr dx(const Expr& e, int n = 1) { return diff(e, Coord::X1, n); }
Expr dy(const Expr& e, int n = 1) { return diff(e, Coord::X2, n); }
Expr dz(const Expr& e, int n = 1) { return diff(e, Coord::X3, n); }

bool vanishes(const Expr& e) { return simplify(e).is_zero(); }

// Concrete value of a constant, if it simplifies to a rational.
std::optional<Rational> concrete(const Expr& e) {
    Expr s = simplify(e);
    if (s.is_rational()) return s.value();
    return std::nullopt;
}

void check_args(const std::string& role, const Expr& e, std::initializer_list<Coord> allowed) {
    for (Coord c : kCoords) {
        bool ok = false;
        for (Coord a : allowed) ok = ok || a == c;
        if (!ok && depends_on(e, c))
            throw FamilyError(FamilyErrorCode::ArgumentViolation,
                              "input '" + role + "' depends on " + coord_name(c));
    }
}

Expr required(const Inputs& in, const std::string& role, std::initializer_list<Coord> allowed) {
    auto it = in.find(role);
    if (it == in.end()) throw FamilyError(FamilyErrorCode::Precondition, "missing input '" + role + "'");
    check_args(role, it->second, allowed);
    return it->second;
}

Expr optional_input(const Inputs& in, const std::string& role, std::initializer_list<Coord> allowed,
                    const Expr& fallback = integer(0)) {
    if (!in.count(role)) return fallback;
    return required(in, role, allowed);
}

Expr nonzero_input(const Inputs& in, const std::string& role, std::initializer_list<Coord> allowed) {
    Expr e = required(in, role, allowed);
    if (vanishes(e)) throw FamilyError(FamilyErrorCode::ZeroDenominator, "input '" + role + "' is identically zero");
    return e;
}

std::optional<Expr> scenario_constant(const Expr& value, const char* symbol) {
    if (value == param(symbol)) return std::nullopt;
    return value;
}

BuiltScenario assemble(const std::string& name, const Params& p, const Expr& f, FieldSpec field,
                       NamedExprs constraints) {
    BuiltScenario b;
    b.params = p;
    Scenario& s = b.scenario;
    s.name = name;
    s.epsilon = p.sign().value_or(1);
    s.beta = scenario_constant(p.beta, "beta");
    s.lambda = scenario_constant(p.lambda, "lambda");
    s.mu = scenario_constant(p.mu, "mu");
    s.f = simplify(f);
    switch (field.type) {
        case FieldSpec::Type::Vector: s.checks = {Check::Ry}; break;
        case FieldSpec::Type::Gradient: s.checks = {Check::GradientRy}; break;
        case FieldSpec::Type::Hodge: s.checks = {Check::Trace, Check::Divergence}; break;
    }
    field.vector = field.vector.simplified();
    if (field.type != FieldSpec::Type::Vector) field.potential = simplify(field.potential);
    s.field = std::move(field);
    for (auto& [label, e] : constraints) b.constraints.emplace_back(label, simplify(e));
    return b;
}

FieldSpec vector_field(Expr v1, Expr v2, Expr v3) {
    FieldSpec fs;
    fs.type = FieldSpec::Type::Vector;
    fs.vector = VectorField(std::move(v1), std::move(v2), std::move(v3));
    return fs;
}

FieldSpec gradient_field(Expr F) {
    FieldSpec fs;
    fs.type = FieldSpec::Type::Gradient;
    fs.potential = std::move(F);
    return fs;
}

// Lines of the gradient system (half the residual), written as left minus right side.
struct GradientLines {
    Expr F, f;
    const Params& p;

    Expr scal_rhs() const { return -p.lambda + p.mu / integer(2) * dx(f, 2); }
    Expr l11() const { return dx(F, 2); }
    Expr l12() const { return dx(dy(F)); }
    Expr l13() const { return dx(dz(F)) - dx(f) * dx(F) / integer(2) + p.beta / integer(2) * dx(f, 2) - scal_rhs(); }
    Expr l22() const { return dy(F, 2) - p.epsilon * scal_rhs(); }
    Expr l23() const { return dy(dz(F)) - dy(f) * dx(F) / integer(2) + p.beta / integer(2) * dx(dy(f)); }
    Expr l33() const {
        return dz(F, 2) - (f * dx(f) + dz(f)) * dx(F) / integer(2) + p.epsilon / integer(2) * dy(f) * dy(F) +
               dx(f) * dz(F) / integer(2) + p.beta / integer(2) * (f * dx(f, 2) - p.epsilon * dy(f, 2)) -
               scal_rhs() * f;
    }
};

// (3,3) line of the Ricci-Yamabe system for a vector field when mu = 0.
Expr ry_line33_mu0(const Expr& f, const VectorField& v, const Params& p) {
    Expr grad = v(1) * dx(f) + v(2) * dy(f) + v(3) * dz(f);
    return p.beta * (p.epsilon * f * dx(f, 2) - dy(f, 2)) / p.epsilon + grad + integer(2) * dz(v(1)) +
           integer(2) * f * (dz(v(3)) + p.lambda);
}

Params with(Params p, std::optional<Expr> beta, std::optional<Expr> lambda, std::optional<Expr> mu) {
    if (beta) p.beta = *beta;
    if (lambda) p.lambda = *lambda;
    if (mu) p.mu = *mu;
    return p;
}

void require_mu_zero(const Params& p, const char* theorem) {
    if (!vanishes(p.mu)) throw FamilyError(FamilyErrorCode::Precondition, std::string(theorem) + " needs mu = 0");
}

// Forces constant `value` for a case; a concrete contradicting value is a mismatch.
Expr force(const Expr& current, const Expr& value, const char* what) {
    auto c = concrete(current);
    auto v = concrete(value);
    if (c && v && *c != *v) throw FamilyError(FamilyErrorCode::CaseMismatch, std::string(what) + " contradicts the case");
    return value;
}

void forbid_zero(const Expr& e, const char* what) {
    if (vanishes(e)) throw FamilyError(FamilyErrorCode::CaseMismatch, std::string(what) + " must be nonzero for this case");
}

}  // namespace

const char* to_string(Theorem t) {
    switch (t) {
        case Theorem::T1Hodge: return "t1-hodge";
        case Theorem::T2: return "t2";
        case Theorem::T3: return "t3";
        case Theorem::C1: return "c1";
        case Theorem::C2: return "c2";
        case Theorem::T1Gradient: return "t1-gradient";
        case Theorem::TTCase1a: return "tt-1a";
        case Theorem::TTCase1b: return "tt-1b";
        case Theorem::TTCase2a: return "tt-2a";
        case Theorem::TTCase2b: return "tt-2b";
        case Theorem::Beta0Mu0: return "beta0-mu0";
        case Theorem::Beta0MuNonzero: return "beta0-mu";
        case Theorem::Fin: return "fin";
    }
    return "?";
}

std::optional<Theorem> theorem_from_string(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(Theorem::Fin); ++i)
        if (s == to_string(static_cast<Theorem>(i))) return static_cast<Theorem>(i);
    return std::nullopt;
}

BuiltScenario build_t1_hodge(const Inputs& in, const Params& p) {
    Expr f = required(in, "f", {Coord::X1, Coord::X2, Coord::X3});
    Expr F = required(in, "F", {Coord::X1, Coord::X2, Coord::X3});
    VectorField y(optional_input(in, "Y1", {Coord::X1, Coord::X2, Coord::X3}),
                  optional_input(in, "Y2", {Coord::X1, Coord::X2, Coord::X3}),
                  optional_input(in, "Y3", {Coord::X1, Coord::X2, Coord::X3}));
    WalkerMetric w(f, p.epsilon);
    FieldSpec fs;
    fs.type = FieldSpec::Type::Hodge;
    fs.vector = y;
    fs.potential = F;
    return assemble("t1-hodge", p, f, fs,
                    {{"divergence", divergence(w, y)}, {"trace", trace_condition_residual(w, F, p)}});
}

BuiltScenario build_t2(const Inputs& in, const Params& p, Form form) {
    if (vanishes(p.mu)) throw FamilyError(FamilyErrorCode::MuZero, "t2 needs mu != 0");
    Expr a = required(in, "a", {Coord::X2, Coord::X3});
    Expr b = required(in, "b", {Coord::X2, Coord::X3});
    Expr c = required(in, "c", {Coord::X2, Coord::X3});
    Expr v = required(in, "v", {Coord::X2, Coord::X3});
    Expr xi = required(in, "xi", {Coord::X1, Coord::X3});
    const Expr& eps = p.epsilon;
    const Expr& mu = p.mu;
    bool fixed = form == Form::Corrected;

    Expr by = fixed ? eps * dy(b) : dy(b);
    Expr f = -eps * pow(X, 3) * dy(a, 2) / (integer(3) * mu) + (by + p.lambda) * pow(X, 2) / mu + X * c + v;
    Expr v2 = (-X * dy(a) + b) / eps;
    Expr v3 = a;
    Expr drift = p.beta * ((-eps * pow(X, 2) * dy(a, 2) + integer(2) * X * (fixed ? eps : integer(1)) * dy(b)) / mu + c);
    Expr tail = -X * dz(a) + integrate_from_zero(dz(b), Coord::X2);
    Expr v1 = xi - drift - integrate_from_zero(f * dy(a), Coord::X2) - (fixed ? tail : eps * tail);

    VectorField V(v1, v2, v3);
    Expr grad = v1 * dx(f) + v2 * dy(f) + v3 * dz(f);
    Expr c33 = p.beta * (eps * f * dx(f, 2) - dy(f, 2)) / eps + grad + integer(2) * dz(v1) + integer(2) * f * dz(v3) -
               integer(2) * dy(v2) * f;
    Expr c13 = p.beta * dx(f, 2) + dx(v1) + dz(v3) - integer(2) * dy(v2);
    return assemble("t2", p, f, vector_field(v1, v2, v3), {{"33", c33}, {"13", c13}});
}

BuiltScenario build_t3(const Inputs& in, const Params& p) {
    require_mu_zero(p, "t3");
    Expr z1 = required(in, "Z1", {Coord::X3});
    Expr z2 = required(in, "Z2", {Coord::X3});
    Expr z3 = required(in, "Z3", {Coord::X3});
    Expr z4 = optional_input(in, "Z4", {Coord::X3});
    Expr f = required(in, "f", {Coord::X1, Coord::X2, Coord::X3});
    const Expr& eps = p.epsilon;

    Expr xi;
    if (in.count("xi")) {
        xi = required(in, "xi", {Coord::X2, Coord::X3});
    } else if (vanishes(z1)) {
        xi = -eps * Y * dz(z3) + z4;
    } else if (!depends_on(f, Coord::X1)) {
        check_args("Z1", z1, {});
        xi = -z1 * integrate_from_zero(f, Coord::X2) - eps * Y * dz(z3) + z4;
    } else {
        throw FamilyError(FamilyErrorCode::Precondition, "input 'xi' is required unless Z1 = 0 or f is x-free");
    }

    Expr v1 = -p.beta * dx(f) - Y * X * dz(z1) - X * dz(z2) - integer(2) * p.lambda * X + xi;
    Expr v2 = -eps * z1 * X - p.lambda * Y + z3;
    Expr v3 = z1 * Y + z2;
    VectorField V(v1, v2, v3);
    Expr c23 = integer(-2) * X * dz(z1) + dy(xi) + f * z1 + eps * dz(z3);
    return assemble("t3", p, f, vector_field(v1, v2, v3), {{"23", c23}, {"33", ry_line33_mu0(f, V, p)}});
}

BuiltScenario build_c1(const Inputs& in, const Params& p) {
    if (in.count("Z1") && !vanishes(in.at("Z1")))
        throw FamilyError(FamilyErrorCode::Precondition, "c1 needs Z1 = 0");
    if (in.count("xi")) throw FamilyError(FamilyErrorCode::Precondition, "c1 takes Z4, not xi");
    Inputs t3 = in;
    t3["Z1"] = integer(0);
    BuiltScenario b = build_t3(t3, p);
    b.scenario.name = "c1";
    b.constraints.erase(b.constraints.begin());  // the (2,3) condition holds by construction
    return b;
}

BuiltScenario build_c2(const Inputs& in, const Params& p) {
    require_mu_zero(p, "c2");
    Expr z1 = nonzero_input(in, "Z1", {Coord::X3});
    Expr z2 = required(in, "Z2", {Coord::X3});
    Expr z3 = required(in, "Z3", {Coord::X3});
    Expr xi = required(in, "xi", {Coord::X2, Coord::X3});
    const Expr& eps = p.epsilon;

    Expr f = (integer(2) * X * dz(z1) - dy(xi) - eps * dz(z3)) / z1;
    Expr v1 = -p.beta * integer(2) * dz(z1) / z1 - Y * X * dz(z1) - X * dz(z2) - integer(2) * p.lambda * X + xi;
    Expr v2 = -eps * z1 * X - p.lambda * Y + z3;
    Expr v3 = z1 * Y + z2;
    return assemble("c2", p, f, vector_field(v1, v2, v3), {{"33", ry_line33_mu0(f, VectorField(v1, v2, v3), p)}});
}

BuiltScenario build_t1_gradient(const Inputs& in, const Params& p, Form form) {
    if (vanishes(p.beta - p.mu)) throw FamilyError(FamilyErrorCode::BetaEqualsMu, "t1-gradient needs beta != mu");
    if (vanishes(p.beta)) throw FamilyError(FamilyErrorCode::Precondition, "t1-gradient needs beta != 0");
    if (vanishes(p.lambda)) throw FamilyError(FamilyErrorCode::Precondition, "t1-gradient needs lambda != 0");
    if (!p.sign()) throw FamilyError(FamilyErrorCode::Precondition, "t1-gradient needs a concrete epsilon");
    Expr a = required(in, "a", {});
    Expr b = required(in, "b", {});
    Expr R = required(in, "R", {Coord::X3});
    Expr C = required(in, "C", {Coord::X3});
    Expr D = required(in, "D", {Coord::X3});
    const Expr& eps = p.epsilon;
    Expr gap = p.mu - p.beta;
    bool fixed = form == Form::Corrected;

    Expr F = eps * p.lambda * p.beta / (integer(fixed ? 2 : 4) * gap) * pow(Y, 2) + a * Y + b;
    Expr quad = fixed ? eps * p.lambda / (integer(2) * gap) : p.lambda / (integer(4) * eps * gap);
    Expr v = integrate_from_zero(C * exp(a / p.beta * Y + quad * pow(Y, 2)), Coord::X2) + D;
    Expr f = p.lambda / gap * pow(X, 2) + R * X + v;
    return assemble("t1-gradient", p, f, gradient_field(F), {});
}

BuiltScenario build_tt(TTCase c, const Inputs& in, const Params& p0, Form form) {
    Params p = with(p0, std::nullopt, force(p0.lambda, integer(0), "lambda"), std::nullopt);
    const Expr& eps = p.epsilon;
    bool fixed = form == Form::Corrected;
    switch (c) {
        case TTCase::Case1a: {
            p = with(p, force(p.beta, integer(0), "beta"), std::nullopt, force(p.mu, integer(0), "mu"));
            Expr a = required(in, "a", {});
            Expr Fz = required(in, "F", {Coord::X3});
            Expr f = required(in, "f", {Coord::X1, Coord::X2, Coord::X3});
            Expr ode = dz(Fz, 2) + dx(f) / integer(2) * dz(Fz) + eps * a / integer(2) * dy(f);
            BuiltScenario b = assemble("tt-1a", p, f, gradient_field(a * Y + Fz), {{"33", ode}});
            return b;
        }
        case TTCase::Case1b: {
            forbid_zero(p.mu, "mu");
            Expr mu = p.mu;
            if (!concrete(mu) && concrete(p.beta)) mu = p.beta;
            p = with(p, force(p.beta, mu, "beta"), std::nullopt, mu);
            Expr F1 = required(in, "F1", fixed ? std::initializer_list<Coord>{} : std::initializer_list<Coord>{Coord::X3});
            Expr F2 = required(in, "F2", {Coord::X3});
            Expr A = optional_input(in, "A", {Coord::X3});
            Expr r = F1 / mu;
            Expr f;
            if (fixed) {
                Expr F5 = optional_input(in, "F5", {Coord::X3});
                Expr G = optional_input(in, "G", {Coord::X3});
                Expr s0 = integer(2) / (eps * mu) * (dz(F2, 2) + F5 * dz(F2) / integer(2));
                Expr w = (A + integrate_from_zero(s0 * exp(-r * Y), Coord::X2)) * exp(r * Y);
                f = F5 * X + integrate_from_zero(w, Coord::X2) + G;
            } else {
                Expr s1 = integer(2) / (eps * mu) * (-dz(F1, 2) + pow(dz(F1), 2) / mu);
                Expr s0 = integer(2) / (eps * mu) * (-dz(F2, 2) + dz(F1) * F2 / mu);
                Expr f2 = (A + integrate_from_zero((s1 * Y + s0) * exp(-r * Y), Coord::X2)) * exp(r * Y);
                f = integer(-2) / mu * dz(F1) * X + f2;
            }
            return assemble("tt-1b", p, f, gradient_field(F1 * Y + F2), {});
        }
        case TTCase::Case2a: {
            p = with(p, force(p.beta, integer(0), "beta"), std::nullopt, std::nullopt);
            forbid_zero(p.mu, "mu");
            Expr F, f;
            if (in.count("a") && !vanishes(in.at("a"))) {
                Expr a = required(in, "a", {});
                Expr F2 = required(in, "F2", {Coord::X3});
                Expr F3 = required(in, "F3", {Coord::X3});
                Expr F4 = optional_input(in, "F4", {Coord::X3});
                Expr k = fixed ? rational(Rational(1, 2)) : a / integer(2);
                F = a * Y + F2;
                f = X * F3 - integer(2) * eps / a * Y * (dz(F2, 2) + k * dz(F2) * F3) + F4;
            } else {
                Expr b = optional_input(in, "b", {});
                Expr c0 = optional_input(in, "c", {});
                Expr f1 = required(in, "f1", {Coord::X2, Coord::X3});
                Expr f2 = required(in, "f2", {Coord::X2, Coord::X3});
                F = b * Z + c0;
                f = X * f1 + f2;
            }
            return assemble("tt-2a", p, f, gradient_field(F), {{"33", GradientLines{F, f, p}.l33()}});
        }
        case TTCase::Case2b: {
            forbid_zero(p.beta, "beta");
            if (vanishes(p.beta - p.mu)) throw FamilyError(FamilyErrorCode::CaseMismatch, "case 2b needs beta != mu");
            Expr F2 = required(in, "F2", {Coord::X3});
            Expr F5 = optional_input(in, "F5", {Coord::X3});
            Expr F6 = optional_input(in, "F6", {Coord::X3});
            Expr F7 = optional_input(in, "F7", {Coord::X3});
            Expr f = X * F5 + (dz(F2, 2) + F5 * dz(F2) / integer(2)) / (p.beta * eps) * pow(Y, 2) + F6 * Y + F7;
            return assemble("tt-2b", p, f, gradient_field(F2), {});
        }
    }
    throw FamilyError(FamilyErrorCode::CaseMismatch, "unknown case");
}

BuiltScenario build_beta0(Beta0Branch branch, const Inputs& in, const Params& p0) {
    if (auto b = concrete(p0.beta); b && *b != 0)
        throw FamilyError(FamilyErrorCode::Precondition, "beta0 families need beta = 0");
    Params p = with(p0, integer(0), std::nullopt, std::nullopt);
    const Expr& eps = p.epsilon;
    Expr Fz = nonzero_input(in, "F", {Coord::X3});
    if (branch == Beta0Branch::MuZero) {
        p = with(p, std::nullopt, std::nullopt, force(p.mu, integer(0), "mu"));
        Expr a = optional_input(in, "a", {Coord::X3});
        Expr b = optional_input(in, "b", {Coord::X3});
        Expr c = optional_input(in, "c", {Coord::X3});
        Expr F = Fz * X - eps * p.lambda / integer(2) * pow(Y, 2) + a * Y + b;
        Expr f = (integer(2) * Y * dz(a) + integer(2) * dz(b)) / Fz + integer(2) * (p.lambda + dz(Fz)) / Fz * X + c;
        return assemble("beta0-mu0", p, f, gradient_field(F), {{"33", GradientLines{F, f, p}.l33()}});
    }
    forbid_zero(p.mu, "mu");
    Expr F2 = required(in, "F2", {Coord::X2, Coord::X3});
    Expr F4 = optional_input(in, "F4", {Coord::X3});
    Expr F5 = optional_input(in, "F5", {Coord::X3});
    Expr F = Fz * X + F2;
    Expr f = integer(2) * dz(F2) / Fz + (eps * p.lambda + dy(F2, 2)) / (eps * p.mu) * pow(X, 2) + F4 * X + F5;
    GradientLines g{F, f, p};
    return assemble("beta0-mu", p, f, gradient_field(F), {{"13", g.l13()}, {"23", g.l23()}, {"33", g.l33()}});
}

BuiltScenario build_fin(const Inputs& in, const Params& p) {
    if (vanishes(p.beta)) throw FamilyError(FamilyErrorCode::Precondition, "fin needs beta != 0");
    Expr Fz = nonzero_input(in, "F", {Coord::X3});
    Expr F2 = required(in, "F2", {Coord::X2, Coord::X3});
    Expr a = optional_input(in, "a", {Coord::X2, Coord::X3});
    Expr b = optional_input(in, "b", {Coord::X1, Coord::X3});
    bool override = in.count("F1") > 0;
    Expr F1 = override ? required(in, "F1", {Coord::X2, Coord::X3}) : Fz;

    Expr F = F1 * X + F2;
    Expr f = exp(X * Fz / p.beta) * integrate_from_zero(a, Coord::X2) + integer(2) * dz(F2) / Fz + b;
    GradientLines g{F, f, p};
    NamedExprs cs{{"13", g.l13()}, {"22", g.l22()}, {"33", g.l33()}};
    if (override) {
        cs.insert(cs.begin(), {"12", g.l12()});
        cs.insert(cs.end() - 1, {"23", g.l23()});
    }
    return assemble("fin", p, f, gradient_field(F), std::move(cs));
}

BuiltScenario build(const FamilySpec& spec) {
    const Inputs& in = spec.inputs;
    const Params& p = spec.params;
    switch (spec.theorem) {
        case Theorem::T1Hodge: return build_t1_hodge(in, p);
        case Theorem::T2: return build_t2(in, p, spec.form);
        case Theorem::T3: return build_t3(in, p);
        case Theorem::C1: return build_c1(in, p);
        case Theorem::C2: return build_c2(in, p);
        case Theorem::T1Gradient: return build_t1_gradient(in, p, spec.form);
        case Theorem::TTCase1a: return build_tt(TTCase::Case1a, in, p, spec.form);
        case Theorem::TTCase1b: return build_tt(TTCase::Case1b, in, p, spec.form);
        case Theorem::TTCase2a: return build_tt(TTCase::Case2a, in, p, spec.form);
        case Theorem::TTCase2b: return build_tt(TTCase::Case2b, in, p, spec.form);
        case Theorem::Beta0Mu0: return build_beta0(Beta0Branch::MuZero, in, p);
        case Theorem::Beta0MuNonzero: return build_beta0(Beta0Branch::MuNonzero, in, p);
        case Theorem::Fin: return build_fin(in, p);
    }
    throw FamilyError(FamilyErrorCode::Precondition, "unknown family");
}

NamedExprs family_residual(const BuiltScenario& b) {
    const Scenario& s = b.scenario;
    WalkerMetric w(s.f, b.params.epsilon);
    SymTensor2 r;
    switch (s.field.type) {
        case FieldSpec::Type::Vector: r = ry_residual(w, s.field.vector, b.params); break;
        case FieldSpec::Type::Gradient: r = gradient_ry_residual(w, s.field.potential, b.params); break;
        case FieldSpec::Type::Hodge:
            r = ry_residual(w, s.field.vector + gradient(w, s.field.potential), b.params);
            break;
    }
    NamedExprs out;
    for (int k = 0; k < 6; ++k) out.emplace_back(SymTensor2::label(k), r.at_slot(k));
    return out;
}

NamedExprs family_system(const BuiltScenario& b) {
    NamedExprs out = family_residual(b);
    for (auto& [label, e] : out) e = simplify(e / integer(2));
    return out;
}

}  // namespace walker
