#include "walker/symcore/expr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "walker/errors.hpp"

namespace walker {

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, const std::string& message)
    : Error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      expected_(std::move(expected)) {}

const char* to_string(FamilyErrorCode code) {
    switch (code) {
        case FamilyErrorCode::MuZero: return "MuZero";
        case FamilyErrorCode::ArgumentViolation: return "ArgumentViolation";
        case FamilyErrorCode::ZeroDenominator: return "ZeroDenominator";
        case FamilyErrorCode::BetaEqualsMu: return "BetaEqualsMu";
        case FamilyErrorCode::CaseMismatch: return "CaseMismatch";
        case FamilyErrorCode::Precondition: return "Precondition";
    }
    return "FamilyError";
}

Coord coord_at(int one_based) {
    if (one_based < 1 || one_based > 3) throw std::out_of_range("coordinate index must be 1, 2 or 3");
    return static_cast<Coord>(one_based);
}

const char* coord_name(Coord c) {
    switch (c) {
        case Coord::X1: return "x";
        case Coord::X2: return "y";
        case Coord::X3: return "z";
    }
    return "?";
}

std::optional<Coord> coord_from_name(std::string_view name) {
    if (name == "x") return Coord::X1;
    if (name == "y") return Coord::X2;
    if (name == "z") return Coord::X3;
    return std::nullopt;
}

const char* fn_name(Fn fn) {
    switch (fn) {
        case Fn::Exp: return "exp";
        case Fn::Log: return "log";
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Sqrt: return "sqrt";
    }
    return "?";
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_rational(const Rational& q) {
    return std::hash<std::string>{}(q.get_str());
}

Expr finish(Node n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 1315423911ULL;
    switch (n.kind) {
        case Kind::Rational: h = mix(h, hash_rational(n.q)); break;
        case Kind::Coordinate: h = mix(h, static_cast<std::size_t>(n.coord)); break;
        case Kind::Param:
            h = mix(h, std::hash<std::string>{}(n.name));
            h = mix(h, n.sign ? 1 : 0);
            break;
        case Kind::Sum:
        case Kind::Product:
            for (const auto& k : n.kids) h = mix(h, k.hash());
            break;
        case Kind::Power:
            h = mix(h, n.kids[0].hash());
            h = mix(h, hash_rational(n.q));
            break;
        case Kind::Apply:
            h = mix(h, static_cast<std::size_t>(n.fn));
            h = mix(h, n.kids[0].hash());
            break;
        case Kind::Opaque:
            h = mix(h, std::hash<std::string>{}(n.name));
            for (auto c : n.args) h = mix(h, static_cast<std::size_t>(c));
            for (int o : n.orders) h = mix(h, static_cast<std::size_t>(o));
            break;
        case Kind::Antideriv:
            h = mix(h, n.kids[0].hash());
            h = mix(h, static_cast<std::size_t>(n.coord));
            h = mix(h, hash_rational(n.q));
            break;
    }
    n.hash = h;
    return Expr(std::make_shared<const Node>(std::move(n)));
}

const Expr& zero_expr() {
    static const Expr z = [] {
        Node n;
        n.kind = Kind::Rational;
        n.q = 0;
        return finish(std::move(n));
    }();
    return z;
}

int cmp_rational(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

template <class T>
int cmp_value(const T& a, const T& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

}  // namespace

Expr::Expr() : node_(zero_expr().node_) {}
Expr::Expr(int value) : Expr(rational(Rational(value))) {}
Expr::Expr(long value) : Expr(rational(Rational(value))) {}
Expr::Expr(const Rational& value) : Expr(rational(value)) {}

Kind Expr::kind() const { return node_->kind; }
std::size_t Expr::hash() const { return node_->hash; }
bool Expr::is_zero() const { return node_->kind == Kind::Rational && sgn(node_->q) == 0; }
bool Expr::is_one() const { return node_->kind == Kind::Rational && node_->q == 1; }
const Rational& Expr::value() const { return node_->q; }
Coord Expr::coord() const { return node_->coord; }
const std::string& Expr::name() const { return node_->name; }
bool Expr::is_sign() const { return node_->sign; }
const std::vector<Expr>& Expr::terms() const { return node_->kids; }
const Expr& Expr::base() const { return node_->kids.at(0); }
const Rational& Expr::exponent() const { return node_->q; }
Fn Expr::fn() const { return node_->fn; }
const Expr& Expr::arg() const { return node_->kids.at(0); }
const std::vector<Coord>& Expr::args() const { return node_->args; }
const Orders& Expr::orders() const { return node_->orders; }
const Expr& Expr::integrand() const { return node_->kids.at(0); }
Coord Expr::var() const { return node_->coord; }
const Rational& Expr::lower() const { return node_->q; }

int compare(const Expr& a, const Expr& b) {
    if (a.id() == b.id()) return 0;
    if (a.kind() != b.kind()) return cmp_value(static_cast<int>(a.kind()), static_cast<int>(b.kind()));
    const Node& x = *a.id();
    const Node& y = *b.id();
    switch (x.kind) {
        case Kind::Rational: return cmp_rational(x.q, y.q);
        case Kind::Coordinate: return cmp_value(static_cast<int>(x.coord), static_cast<int>(y.coord));
        case Kind::Param:
            if (int c = x.name.compare(y.name)) return c < 0 ? -1 : 1;
            return cmp_value(x.sign, y.sign);
        case Kind::Sum:
        case Kind::Product: {
            std::size_t n = std::min(x.kids.size(), y.kids.size());
            for (std::size_t i = 0; i < n; ++i)
                if (int c = compare(x.kids[i], y.kids[i])) return c;
            return cmp_value(x.kids.size(), y.kids.size());
        }
        case Kind::Power:
            if (int c = compare(x.kids[0], y.kids[0])) return c;
            return cmp_rational(x.q, y.q);
        case Kind::Apply:
            if (x.fn != y.fn) return cmp_value(static_cast<int>(x.fn), static_cast<int>(y.fn));
            return compare(x.kids[0], y.kids[0]);
        case Kind::Opaque:
            if (int c = x.name.compare(y.name)) return c < 0 ? -1 : 1;
            if (x.args != y.args) return x.args < y.args ? -1 : 1;
            return cmp_value(x.orders, y.orders);
        case Kind::Antideriv:
            if (x.coord != y.coord) return cmp_value(static_cast<int>(x.coord), static_cast<int>(y.coord));
            if (int c = cmp_rational(x.q, y.q)) return c;
            return compare(x.kids[0], y.kids[0]);
    }
    return 0;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.id() == b.id()) return true;
    if (a.hash() != b.hash()) return false;
    return compare(a, b) == 0;
}

bool operator<(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

Expr rational(const Rational& q) {
    if (sgn(q) == 0) return zero_expr();
    Node n;
    n.kind = Kind::Rational;
    n.q = q;
    n.q.canonicalize();
    return finish(std::move(n));
}

Expr integer(long v) { return rational(Rational(v)); }

Expr var(Coord c) {
    Node n;
    n.kind = Kind::Coordinate;
    n.coord = c;
    return finish(std::move(n));
}

Expr param(const std::string& name) {
    Node n;
    n.kind = Kind::Param;
    n.name = name;
    return finish(std::move(n));
}

Expr sign_param(const std::string& name) {
    Node n;
    n.kind = Kind::Param;
    n.name = name;
    n.sign = true;
    return finish(std::move(n));
}

Expr opaque(const std::string& name, std::vector<Coord> args, Orders orders) {
    for (int i = 0; i < 3; ++i) {
        if (orders[i] < 0) throw std::invalid_argument("negative derivative order");
        if (orders[i] > 0 && std::find(args.begin(), args.end(), kCoords[i]) == args.end())
            throw std::invalid_argument("derivative order on a non-argument coordinate");
    }
    Node n;
    n.kind = Kind::Opaque;
    n.name = name;
    n.args = std::move(args);
    n.orders = orders;
    return finish(std::move(n));
}

Expr antideriv(const Expr& integrand, Coord v, const Rational& lower) {
    Node n;
    n.kind = Kind::Antideriv;
    n.kids = {integrand};
    n.coord = v;
    n.q = lower;
    return finish(std::move(n));
}

Expr apply(Fn fn, const Expr& arg) {
    Node n;
    n.kind = Kind::Apply;
    n.fn = fn;
    n.kids = {arg};
    return finish(std::move(n));
}

Expr make_sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    flat.reserve(terms.size());
    for (auto& t : terms) {
        if (t.kind() == Kind::Sum)
            flat.insert(flat.end(), t.terms().begin(), t.terms().end());
        else
            flat.push_back(std::move(t));
    }
    if (flat.empty()) return Expr();
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = Kind::Sum;
    n.kids = std::move(flat);
    return finish(std::move(n));
}

Expr make_product(std::vector<Expr> factors) {
    Rational coef = 1;
    std::vector<Expr> rest;
    rest.reserve(factors.size());
    auto take = [&](const Expr& f) {
        if (f.is_rational())
            coef *= f.value();
        else
            rest.push_back(f);
    };
    for (const auto& f : factors) {
        if (f.kind() == Kind::Product)
            for (const auto& g : f.terms()) take(g);
        else
            take(f);
    }
    if (sgn(coef) == 0) return Expr();
    if (rest.empty()) return rational(coef);
    if (coef != 1) rest.insert(rest.begin(), rational(coef));
    if (rest.size() == 1) return rest.front();
    Node n;
    n.kind = Kind::Product;
    n.kids = std::move(rest);
    return finish(std::move(n));
}

namespace {

Rational rational_int_pow(const Rational& b, long k) {
    mpz_class num = b.get_num(), den = b.get_den();
    if (k < 0) {
        if (sgn(num) == 0) throw DomainError("division by zero");
        std::swap(num, den);
        k = -k;
    }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace

Expr make_power(const Expr& base, const Rational& exponent) {
    if (sgn(exponent) == 0) return integer(1);
    if (exponent == 1) return base;
    if (base.is_rational() && exponent.get_den() == 1 && exponent.get_num().fits_slong_p())
        return rational(rational_int_pow(base.value(), exponent.get_num().get_si()));
    Node n;
    n.kind = Kind::Power;
    n.kids = {base};
    n.q = exponent;
    n.q.canonicalize();
    return finish(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return make_sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return make_sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return make_product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return make_product({a, make_power(b, -1)}); }
Expr operator-(const Expr& a) { return make_product({integer(-1), a}); }
Expr pow(const Expr& base, const Rational& exponent) { return make_power(base, exponent); }
Expr exp(const Expr& u) { return apply(Fn::Exp, u); }
Expr log(const Expr& u) { return apply(Fn::Log, u); }
Expr sin(const Expr& u) { return apply(Fn::Sin, u); }
Expr cos(const Expr& u) { return apply(Fn::Cos, u); }
Expr sqrt(const Expr& u) { return apply(Fn::Sqrt, u); }

bool depends_on(const Expr& e, Coord c) {
    switch (e.kind()) {
        case Kind::Rational:
        case Kind::Param: return false;
        case Kind::Coordinate: return e.coord() == c;
        case Kind::Opaque: return std::find(e.args().begin(), e.args().end(), c) != e.args().end();
        case Kind::Antideriv:
            // The bound variable is also the upper limit, so the node depends on it.
            return e.var() == c || depends_on(e.integrand(), c);
        default:
            for (const auto& k : e.terms())
                if (depends_on(k, c)) return true;
            return false;
    }
}

bool contains_param(const Expr& e, const std::string& name) {
    if (e.kind() == Kind::Param) return e.name() == name;
    if (e.kind() == Kind::Sum || e.kind() == Kind::Product || e.kind() == Kind::Power ||
        e.kind() == Kind::Apply || e.kind() == Kind::Antideriv) {
        for (const auto& k : e.terms())
            if (contains_param(k, name)) return true;
    }
    return false;
}

namespace {

template <class Visit>
void walk(const Expr& e, std::unordered_set<const Node*>& seen, Visit& visit) {
    if (!seen.insert(e.id()).second) return;
    visit(e);
    switch (e.kind()) {
        case Kind::Sum:
        case Kind::Product:
        case Kind::Power:
        case Kind::Apply:
        case Kind::Antideriv:
            for (const auto& k : e.terms()) walk(k, seen, visit);
            break;
        default: break;
    }
}

}  // namespace

void collect_params(const Expr& e, std::vector<std::string>& out) {
    std::unordered_set<const Node*> seen;
    auto visit = [&](const Expr& n) {
        if (n.kind() == Kind::Param && std::find(out.begin(), out.end(), n.name()) == out.end())
            out.push_back(n.name());
    };
    walk(e, seen, visit);
}

void collect_opaques(const Expr& e, std::vector<Expr>& out) {
    std::unordered_set<const Node*> seen;
    auto visit = [&](const Expr& n) {
        if (n.kind() != Kind::Opaque) return;
        Expr rep = opaque(n.name(), n.args());
        if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
    };
    walk(e, seen, visit);
}

std::size_t node_count(const Expr& e) {
    std::unordered_set<const Node*> seen;
    auto visit = [](const Expr&) {};
    walk(e, seen, visit);
    return seen.size();
}

}  // namespace walker
