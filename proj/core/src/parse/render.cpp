#include "walker/parse/render.hpp"

#include <ostream>

namespace walker {
namespace {

std::string rational_text(const Rational& q) {
    if (q.get_den() == 1 && sgn(q) >= 0) return q.get_num().get_str();
    return "(" + q.get_str() + ")";
}

std::string render_node(const Expr& e);

bool is_atomic_base(const Expr& e) {
    switch (e.kind()) {
        case Kind::Coordinate:
        case Kind::Param:
        case Kind::Apply:
        case Kind::Opaque:
        case Kind::Antideriv: return true;
        case Kind::Rational: return true;  // rational_text adds its own parentheses
        default: return false;
    }
}

std::string factor_text(const Expr& f) {
    if (f.kind() == Kind::Sum) return "(" + render_node(f) + ")";
    return render_node(f);
}

std::string product_text(const std::vector<Expr>& factors, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < factors.size(); ++i) {
        if (i > from) out += "*";
        out += factor_text(factors[i]);
    }
    return out;
}

// For a non-leading sum term: the text of -term when term carries a negative sign.
bool negated_text(const Expr& t, std::string& out) {
    if (t.is_rational() && sgn(t.value()) < 0) {
        out = rational_text(-t.value());
        return true;
    }
    if (t.kind() == Kind::Product && t.terms().front().is_rational() && sgn(t.terms().front().value()) < 0) {
        Rational c = -t.terms().front().value();
        if (c == 1)
            out = product_text(t.terms(), 1);
        else
            out = rational_text(c) + "*" + product_text(t.terms(), 1);
        return true;
    }
    return false;
}

std::string render_node(const Expr& e) {
    switch (e.kind()) {
        case Kind::Rational: return rational_text(e.value());
        case Kind::Coordinate: return coord_name(e.coord());
        case Kind::Param: return e.name();
        case Kind::Sum: {
            std::string out;
            const auto& ts = e.terms();
            for (std::size_t i = 0; i < ts.size(); ++i) {
                std::string neg;
                if (i == 0)
                    out += render_node(ts[i]);
                else if (negated_text(ts[i], neg))
                    out += " - " + neg;
                else
                    out += " + " + render_node(ts[i]);
            }
            return out;
        }
        case Kind::Product: return product_text(e.terms(), 0);
        case Kind::Power: {
            std::string base = is_atomic_base(e.base()) ? render_node(e.base()) : "(" + render_node(e.base()) + ")";
            return base + "^" + rational_text(e.exponent());
        }
        case Kind::Apply: return std::string(fn_name(e.fn())) + "(" + render_node(e.arg()) + ")";
        case Kind::Opaque: {
            std::string out = e.name() + "(";
            for (std::size_t i = 0; i < e.args().size(); ++i) {
                if (i) out += ",";
                out += coord_name(e.args()[i]);
            }
            out += ")";
            for (int i = 0; i < 3; ++i) {
                int n = e.orders()[i];
                if (n == 0) continue;
                out = "D(" + out + ", " + coord_name(kCoords[i]) + (n == 1 ? std::string() : ", " + std::to_string(n)) + ")";
            }
            return out;
        }
        case Kind::Antideriv:
            return "INT(" + render_node(e.integrand()) + ", " + coord_name(e.var()) + ", " + rational_text(e.lower()) + ")";
    }
    return "?";
}

}  // namespace

std::string render(const Expr& e) { return render_node(e); }

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << render(e); }

}  // namespace walker
