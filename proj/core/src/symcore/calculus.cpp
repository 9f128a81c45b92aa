#include <algorithm>
#include <unordered_map>

#include "walker/errors.hpp"
#include "walker/symcore/params.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

class Substituter {
public:
    explicit Substituter(const Bindings& b) : b_(b) {}

    Expr functions(const Expr& e) {
        if (b_.functions.empty()) return e;
        return rebuild(e, true);
    }

    Expr symbols(const Expr& e) {
        if (b_.params.empty() && b_.coords.empty()) return e;
        memo_.clear();
        return rebuild(e, false);
    }

private:
    const Bindings& b_;
    std::unordered_map<Expr, Expr, ExprHash> memo_;

    Expr rebuild(const Expr& e, bool fn_pass) {
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        Expr out = fn_pass ? fn_step(e) : sym_step(e);
        memo_.emplace(e, out);
        return out;
    }

    std::vector<Expr> kids(const Expr& e, bool fn_pass) {
        std::vector<Expr> out;
        out.reserve(e.terms().size());
        for (const auto& k : e.terms()) out.push_back(rebuild(k, fn_pass));
        return out;
    }

    Expr fn_step(const Expr& e) {
        switch (e.kind()) {
            case Kind::Opaque: {
                auto it = b_.functions.find(e.name());
                if (it == b_.functions.end()) return e;
                for (int i = 0; i < 3; ++i) {
                    bool is_arg = std::find(e.args().begin(), e.args().end(), kCoords[i]) != e.args().end();
                    if (!is_arg && depends_on(it->second, kCoords[i]))
                        throw SubstitutionError("binding for " + e.name() + " depends on a coordinate outside its arguments");
                }
                return diff(it->second, e.orders());
            }
            case Kind::Sum: return make_sum(kids(e, true));
            case Kind::Product: return make_product(kids(e, true));
            case Kind::Power: return make_power(rebuild(e.base(), true), e.exponent());
            case Kind::Apply: return apply(e.fn(), rebuild(e.arg(), true));
            case Kind::Antideriv: return antideriv(rebuild(e.integrand(), true), e.var(), e.lower());
            default: return e;
        }
    }

    Coord rename(Coord c) const {
        auto it = b_.coords.find(c);
        if (it == b_.coords.end()) return c;
        if (it->second.kind() != Kind::Coordinate)
            throw SubstitutionError(std::string("cannot replace differentiation variable ") + coord_name(c) +
                                    " by a non-coordinate expression");
        return it->second.coord();
    }

    Expr sym_step(const Expr& e) {
        switch (e.kind()) {
            case Kind::Coordinate: {
                auto it = b_.coords.find(e.coord());
                return it == b_.coords.end() ? e : it->second;
            }
            case Kind::Param: {
                auto it = b_.params.find(e.name());
                return it == b_.params.end() ? e : it->second;
            }
            case Kind::Opaque: {
                std::vector<Coord> args;
                Orders orders{0, 0, 0};
                for (Coord c : e.args()) {
                    Coord r = rename(c);
                    if (std::find(args.begin(), args.end(), r) != args.end())
                        throw SubstitutionError("renaming makes two arguments of " + e.name() + " coincide");
                    args.push_back(r);
                    orders[index_of(r) - 1] = e.orders()[index_of(c) - 1];
                }
                return opaque(e.name(), std::move(args), orders);
            }
            case Kind::Antideriv: {
                Coord v = rename(e.var());
                return antideriv(rebuild(e.integrand(), false), v, e.lower());
            }
            case Kind::Sum: return make_sum(kids(e, false));
            case Kind::Product: return make_product(kids(e, false));
            case Kind::Power: return make_power(rebuild(e.base(), false), e.exponent());
            case Kind::Apply: return apply(e.fn(), rebuild(e.arg(), false));
            default: return e;
        }
    }
};

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
    Substituter s(bindings);
    Expr out = s.functions(e);
    out = s.symbols(out);
    return simplify(out);
}

void validate_epsilon(const Expr& epsilon) {
    if (epsilon.kind() == Kind::Param && epsilon.is_sign()) return;
    if (epsilon.is_rational() && (epsilon.value() == 1 || epsilon.value() == -1)) return;
    throw ValueError("epsilon must be +1, -1 or a sign symbol");
}

Params::Params(Expr b, Expr l, Expr m, Expr eps)
    : beta(std::move(b)), lambda(std::move(l)), mu(std::move(m)), epsilon(std::move(eps)) {
    validate_epsilon(epsilon);
}

Params::Params(const Rational& b, const Rational& l, const Rational& m, int eps)
    : Params(rational(b), rational(l), rational(m), integer(eps)) {}

std::optional<int> Params::sign() const {
    if (epsilon.is_rational()) return epsilon.value() > 0 ? 1 : -1;
    return std::nullopt;
}

Bindings Params::bindings() const {
    Bindings b;
    b.params["beta"] = beta;
    b.params["lambda"] = lambda;
    b.params["mu"] = mu;
    b.params["eps"] = epsilon;
    return b;
}

}  // namespace walker
