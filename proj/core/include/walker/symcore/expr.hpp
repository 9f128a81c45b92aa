#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace walker {

using Rational = mpq_class;

// x = x^1, y = x^2, z = x^3.
enum class Coord : int { X1 = 1, X2 = 2, X3 = 3 };

inline constexpr std::array<Coord, 3> kCoords{Coord::X1, Coord::X2, Coord::X3};

inline int index_of(Coord c) { return static_cast<int>(c); }
Coord coord_at(int one_based);
const char* coord_name(Coord c);
std::optional<Coord> coord_from_name(std::string_view name);

enum class Fn { Exp, Log, Sin, Cos, Sqrt };
const char* fn_name(Fn fn);

enum class Kind { Rational, Coordinate, Param, Sum, Product, Power, Apply, Opaque, Antideriv };

// Partial derivative orders w.r.t. (x, y, z).
using Orders = std::array<int, 3>;

struct Node;

class Expr {
public:
    Expr();
    Expr(int value);  // NOLINT(google-explicit-constructor)
    Expr(long value);  // NOLINT(google-explicit-constructor)
    Expr(const Rational& value);  // NOLINT(google-explicit-constructor)

    Kind kind() const;
    std::size_t hash() const;
    const Node* id() const { return node_.get(); }

    bool is_rational() const { return kind() == Kind::Rational; }
    bool is_zero() const;
    bool is_one() const;

    // Accessors; each is only meaningful for the matching kind.
    const Rational& value() const;
    Coord coord() const;
    const std::string& name() const;
    bool is_sign() const;
    const std::vector<Expr>& terms() const;
    const Expr& base() const;
    const Rational& exponent() const;
    Fn fn() const;
    const Expr& arg() const;
    const std::vector<Coord>& args() const;
    const Orders& orders() const;
    const Expr& integrand() const;
    Coord var() const;
    const Rational& lower() const;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
    friend bool operator<(const Expr& a, const Expr& b);

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<const Node> node_;
};

// Total deterministic order: negative, zero or positive.
int compare(const Expr& a, const Expr& b);

struct Node {
    Kind kind{};
    Rational q;  // constant value, power exponent or antiderivative lower bound
    Coord coord{Coord::X1};
    std::string name;
    bool sign = false;
    Fn fn{Fn::Exp};
    std::vector<Expr> kids;
    std::vector<Coord> args;
    Orders orders{0, 0, 0};
    std::size_t hash = 0;
};

struct ExprHash {
    std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Leaf and node constructors. These build raw trees: sums and products are flattened
// and constants in a product are folded, nothing more. Use simplify() for canonical form.
Expr rational(const Rational& q);
Expr integer(long v);
Expr var(Coord c);
Expr param(const std::string& name);
Expr sign_param(const std::string& name = "eps");
Expr opaque(const std::string& name, std::vector<Coord> args, Orders orders = {0, 0, 0});
Expr antideriv(const Expr& integrand, Coord var, const Rational& lower = 0);
Expr apply(Fn fn, const Expr& arg);
Expr make_sum(std::vector<Expr> terms);
Expr make_product(std::vector<Expr> factors);
Expr make_power(const Expr& base, const Rational& exponent);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, const Rational& exponent);
Expr exp(const Expr& u);
Expr log(const Expr& u);
Expr sin(const Expr& u);
Expr cos(const Expr& u);
Expr sqrt(const Expr& u);

// Structural queries.
bool depends_on(const Expr& e, Coord c);
bool contains_param(const Expr& e, const std::string& name);
void collect_params(const Expr& e, std::vector<std::string>& out);
void collect_opaques(const Expr& e, std::vector<Expr>& out);  // underived representatives
std::size_t node_count(const Expr& e);

}  // namespace walker
