#include "walker/families/integrate.hpp"

#include <map>
#include <optional>

#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

struct ExpPoly {
    Expr coef;  // free of v
    int n = 0;
    std::optional<Expr> k;  // exp(k v + c) factor, if any
    Expr c = integer(0);
};

std::optional<ExpPoly> match(const Term& t, Coord v) {
    ExpPoly out;
    std::vector<Expr> free{rational(t.coef)};
    for (const auto& [atom, power] : t.mono) {
        if (!depends_on(atom, v)) {
            free.push_back(pow(atom, power));
        } else if (atom.kind() == Kind::Coordinate && power > 0) {
            out.n = power;
        } else if (atom.kind() == Kind::Apply && atom.fn() == Fn::Exp && power == 1 && !out.k) {
            Expr k = simplify(diff(atom.arg(), v));
            if (depends_on(k, v)) return std::nullopt;
            out.k = k;
            out.c = simplify(atom.arg() - k * var(v));
        } else {
            return std::nullopt;
        }
    }
    out.coef = make_product(free);
    return out;
}

Expr factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return rational(r);
}

// int_0^y t^n exp(k t + c) dt
Expr closed_form(const ExpPoly& p, Coord v) {
    Expr y = var(v);
    if (!p.k || p.k->is_zero()) {
        Expr e = p.k ? exp(p.c) : integer(1);
        return p.coef * e * pow(y, p.n + 1) / integer(p.n + 1);
    }
    const Expr& k = *p.k;
    // G(t) = exp(k t + c) * sum_j (-1)^j n!/(n-j)! t^(n-j) / k^(j+1)
    auto G = [&](const Expr& t, bool at_zero) {
        Expr sum = integer(0);
        for (int j = 0; j <= p.n; ++j) {
            if (at_zero && j != p.n) continue;
            Expr c = factorial(p.n) / factorial(p.n - j) * pow(k, -(j + 1));
            if (j % 2) c = -c;
            sum = sum + (p.n == j ? c : c * pow(t, p.n - j));
        }
        return exp(k * t + p.c) * sum;
    };
    return p.coef * (G(y, false) - G(integer(0), true));
}

}  // namespace

Expr integrate_from_zero(const Expr& e, Coord v) {
    Expr closed = integer(0);
    std::map<Expr, Expr> rest;  // v-dependent part -> v-free cofactor
    for (const Term& t : canonical_terms(e)) {
        if (auto m = match(t, v)) {
            closed = closed + closed_form(*m, v);
            continue;
        }
        std::vector<Expr> dep, free{rational(t.coef)};
        for (const auto& [atom, power] : t.mono) (depends_on(atom, v) ? dep : free).push_back(pow(atom, power));
        Expr key = simplify(make_product(dep));
        auto [it, fresh] = rest.emplace(key, make_product(free));
        if (!fresh) it->second = it->second + make_product(free);
    }
    Expr out = closed;
    for (const auto& [dep, cof] : rest) out = out + cof * antideriv(dep, v, 0);
    return simplify(out);
}

}  // namespace walker
