#include "walker/families/catalog.hpp"

#include "walker/errors.hpp"
#include "walker/parse/expr_parser.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

Expr P(std::string_view s) { return parse_expr(s); }

Params constants(const char* beta, const char* lambda, const char* mu, int eps) {
    auto get = [](const char* s, const char* symbol) { return s ? P(s) : param(symbol); };
    return Params(get(beta, "beta"), get(lambda, "lambda"), get(mu, "mu"), integer(eps));
}

Expr constraint(const BuiltScenario& b, const std::string& label) {
    for (const auto& [l, e] : b.constraints)
        if (l == label) return e;
    throw UnknownName(label);
}

Expr component(const NamedExprs& parts, const std::string& label) {
    for (const auto& [l, e] : parts)
        if (l == label) return e;
    throw UnknownName(label);
}

CatalogEntry thm1(const char* name, int eps, const char* potential) {
    CatalogEntry e;
    e.name = name;
    e.summary = eps > 0 ? "Hodge trace condition, Y = A cos(sqrt2 y) + B sin(sqrt2 y)"
                        : "Hodge trace condition, Y = C1 exp(sqrt2 y) + C2 exp(-sqrt2 y)";
    e.built = build_t1_hodge({{"f", P("y*z*exp(-x)")}, {"F", P(potential)}}, constants(nullptr, "0", "2*beta", eps));
    e.built.scenario.name = name;
    e.identities = {{"trace", constraint(e.built, "trace")}, {"divergence", constraint(e.built, "divergence")}};
    return e;
}

CatalogEntry e1() {
    CatalogEntry e;
    e.name = "ex-E1";
    e.summary = "t2 with a=0, b=y, c=0, v=0, xi=x at (beta, lambda, mu, eps) = (1, 1, 2, 1)";
    e.built = build_t2({{"a", 0}, {"b", P("y")}, {"c", 0}, {"v", 0}, {"xi", P("x")}}, constants("1", "1", "2", 1));
    e.built.scenario.name = e.name;
    e.identities = {{"33", constraint(e.built, "33")}, {"13", constraint(e.built, "13")}};
    return e;
}

CatalogEntry c1() {
    CatalogEntry e;
    e.name = "ex-C1";
    e.summary = "c1 with f = Z5 = 1/(a1 z + a2), Z2 = a1 z + a2, Z3 = a z + b, Z4 = c, lambda = 0";
    Inputs in{{"Z2", P("a1*z + a2")}, {"Z3", P("a*z + b")}, {"Z4", P("c")}, {"f", P("(a1*z + a2)^(-1)")}};
    e.built = build_c1(in, constants(nullptr, "0", "0", 1));
    e.built.scenario.name = e.name;
    Expr z2 = in.at("Z2"), z5 = in.at("f");
    Expr reduced = z2 * diff(z5, Coord::X3) - integer(2) * var(Coord::X1) * diff(z2, Coord::X3, 2) +
                   z5 * diff(z2, Coord::X3);
    e.identities = {{"reduced", simplify(reduced)}};
    e.diagnostics = {{"33", constraint(e.built, "33"), false}};
    e.expect_pass = false;
    e.report_gated = false;
    return e;
}

CatalogEntry c2() {
    CatalogEntry e;
    e.name = "ex-C2";
    e.summary = "c2 with Z1 = 1, Z2 = 0, Z3 = z^2, xi = 2zy + 2z^2 + b0, eps = lambda = 1";
    Inputs in{{"Z1", 1}, {"Z2", 0}, {"Z3", P("z^2")}, {"xi", P("2*z*y + 2*z^2 + b0")}};
    e.built = build_c2(in, constants(nullptr, "1", "0", 1));
    e.built.scenario.name = e.name;
    e.identities = {{"33", constraint(e.built, "33")}};
    return e;
}

CatalogEntry t1_reduced() {
    CatalogEntry e;
    e.name = "ex-t1-reduced";
    e.summary = "t1-gradient with a = 0, C = 0 at (beta, lambda, mu, eps) = (1, 1, 2, 1); printed coefficient leaves (2,2)";
    Inputs in{{"a", 0}, {"b", P("b")}, {"C", 0}, {"R", P("R(z)")}, {"D", P("D1(z)")}};
    e.built = build_t1_gradient(in, constants("1", "1", "2", 1));
    e.built.scenario.name = e.name;
    e.expect_pass = false;
    e.diagnostics = {{"22", component(family_residual(e.built), "22"), false}};
    return e;
}

CatalogEntry tt_ode() {
    CatalogEntry e;
    e.name = "ex-TT-ode";
    e.summary = "tt-1a with f = a1 x + H(z) y and F solved by the integrating factor exp(a1 z/2)";
    Expr z = var(Coord::X3);
    Expr half = P("a1/2");
    Expr inner = antideriv(exp(half * z) * opaque("H", {Coord::X3}), Coord::X3, 0);
    Expr u = exp(-half * z) * (-(P("a") / integer(2)) * inner + P("C1"));
    Expr Fz = antideriv(simplify(u), Coord::X3, 0) + P("C2");
    Inputs in{{"a", P("a")}, {"F", Fz}, {"f", P("a1*x + H(z)*y")}};
    e.built = build_tt(TTCase::Case1a, in, constants("0", "0", "0", 1));
    e.built.scenario.name = e.name;
    e.identities = {{"33", constraint(e.built, "33")}};
    return e;
}

CatalogEntry fin() {
    CatalogEntry e;
    e.name = "ex-fin";
    e.summary = "fin with lambda = eps = 1, potential (alpha y - z) x - y^2/2 - (C/2) exp(-2z)";
    Inputs in{{"F", 1}, {"F1", P("alpha*y - z")}, {"F2", P("-(1/2)*y^2 - (C/2)*exp(-2*z)")}};
    e.built = build_fin(in, constants(nullptr, "1", nullptr, 1));
    e.built.scenario.name = e.name;
    const Expr& F = e.built.scenario.field.potential;
    const Expr& f = e.built.scenario.f;
    Expr lambda = integer(1), eps = integer(1);
    e.identities = {
        {"m3", simplify(diff(diff(F, Coord::X1), Coord::X3) + lambda)},
        {"m4", simplify(diff(F, Coord::X2, 2) + eps * lambda)},
        {"m6", simplify(diff(F, Coord::X3, 2) + lambda * f)},
    };
    NamedExprs r = family_residual(e.built);
    e.diagnostics = {{"12", component(r, "12"), false}, {"33", component(r, "33"), false}};
    e.expect_pass = false;
    e.report_gated = false;
    return e;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back(thm1("ex-thm1-plus", 1, "(A*cos(sqrt(2)*y) + B*sin(sqrt(2)*y))*exp(x + z)"));
    out.push_back(thm1("ex-thm1-minus", -1, "(C1*exp(sqrt(2)*y) + C2*exp(-sqrt(2)*y))*exp(x + z)"));
    out.push_back(e1());
    out.push_back(c1());
    out.push_back(c2());
    out.push_back(t1_reduced());
    out.push_back(tt_ode());
    out.push_back(fin());
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
}

const CatalogEntry& lookup(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw UnknownName(std::string(name));
}

}  // namespace walker
