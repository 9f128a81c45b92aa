#include "walker/parse/expr_parser.hpp"

#include <cctype>

#include "walker/errors.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "+";
        case Tok::Minus: return "-";
        case Tok::Star: return "*";
        case Tok::Slash: return "/";
        case Tok::Caret: return "^";
        case Tok::LParen: return "(";
        case Tok::RParen: return ")";
        case Tok::Comma: return ",";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= s_.size()) return {Tok::End, start, ""};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return {Tok::Ident, start, std::string(s_.substr(start, pos_ - start))};
        }
        ++pos_;
        switch (c) {
            case '+': return {Tok::Plus, start, "+"};
            case '-': return {Tok::Minus, start, "-"};
            case '*': return {Tok::Star, start, "*"};
            case '/': return {Tok::Slash, start, "/"};
            case '^': return {Tok::Caret, start, "^"};
            case '(': return {Tok::LParen, start, "("};
            case ')': return {Tok::RParen, start, ")"};
            case ',': return {Tok::Comma, start, ","};
            default: break;
        }
        throw ParseError(start, {"number", "identifier", "(", "-"}, std::string("unexpected character '") + c + "'");
    }

private:
    Token number(std::size_t start) {
        auto digits = [&] {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return pos_ - b;
        };
        std::size_t n = digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            n += digits();
        }
        if (n == 0) throw ParseError(start, {"number"}, "malformed number");
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (digits() == 0) pos_ = save;
        }
        return {Tok::Number, start, std::string(s_.substr(start, pos_ - start))};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

Rational decimal_value(const std::string& text) {
    std::string mant = text;
    long exp10 = 0;
    auto e = mant.find_first_of("eE");
    if (e != std::string::npos) {
        exp10 = std::stol(mant.substr(e + 1));
        mant = mant.substr(0, e);
    }
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty()) mant = "0";
    mpz_class num(mant), scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    Rational q = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return q;
}

constexpr int kAdd = 10;
constexpr int kMul = 20;
constexpr int kPow = 30;
constexpr int kUnary = 40;

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { advance(); }

    Expr parse_all() {
        Expr e = expression(0);
        if (cur_.kind != Tok::End) fail({"+", "-", "*", "/", "^", "end of input"}, "unexpected token");
        return e;
    }

private:
    Lexer lex_;
    Token cur_{Tok::End, 0, ""};

    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(std::set<std::string> expected, const std::string& what) {
        throw ParseError(cur_.offset, std::move(expected), what + " '" + (cur_.kind == Tok::End ? std::string("end of input") : cur_.text) + "'");
    }

    void expect(Tok t) {
        if (cur_.kind != t) fail({tok_name(t)}, std::string("expected ") + tok_name(t) + ", found");
        advance();
    }

    static bool starts_primary(Tok t) { return t == Tok::Number || t == Tok::Ident || t == Tok::LParen; }

    int left_power() const {
        switch (cur_.kind) {
            case Tok::Plus:
            case Tok::Minus: return kAdd;
            case Tok::Star:
            case Tok::Slash: return kMul;
            case Tok::Caret: return kPow;
            default: return starts_primary(cur_.kind) ? kMul : 0;
        }
    }

    Expr expression(int rbp) {
        Expr left = prefix();
        while (rbp < left_power()) left = infix(left);
        return left;
    }

    Expr infix(const Expr& left) {
        switch (cur_.kind) {
            case Tok::Plus: advance(); return left + expression(kAdd);
            case Tok::Minus: advance(); return left - expression(kAdd);
            case Tok::Star: advance(); return left * expression(kMul);
            case Tok::Slash: {
                advance();
                std::size_t at = cur_.offset;
                Expr rhs = expression(kMul);
                if (rhs.is_zero()) throw ParseError(at, {"nonzero divisor"}, "division by zero");
                return left / rhs;
            }
            case Tok::Caret: {
                advance();
                std::size_t at = cur_.offset;
                Expr ex = simplify(expression(kPow - 1));
                if (!ex.is_rational()) throw ParseError(at, {"rational exponent"}, "exponent is not a rational constant");
                if (left.is_zero() && sgn(ex.value()) < 0) throw ParseError(at, {"nonnegative exponent"}, "zero to a negative power");
                return pow(left, ex.value());
            }
            default: return left * expression(kMul);  // juxtaposition
        }
    }

    Expr prefix() {
        switch (cur_.kind) {
            case Tok::Number: {
                Rational q = decimal_value(cur_.text);
                advance();
                return rational(q);
            }
            case Tok::Minus: advance(); return -expression(kUnary);
            case Tok::LParen: {
                advance();
                Expr e = expression(0);
                expect(Tok::RParen);
                return e;
            }
            case Tok::Ident: return identifier();
            default: fail({"number", "identifier", "(", "-"}, "unexpected token");
        }
    }

    Coord coordinate() {
        if (cur_.kind == Tok::Ident)
            if (auto c = coord_from_name(cur_.text)) {
                advance();
                return *c;
            }
        fail({"x", "y", "z"}, "expected a coordinate, found");
    }

    Rational constant_arg(const char* what) {
        std::size_t at = cur_.offset;
        Expr v = simplify(expression(0));
        if (!v.is_rational()) throw ParseError(at, {"rational constant"}, std::string(what) + " must be a rational constant");
        return v.value();
    }

    Expr identifier() {
        std::string name = cur_.text;
        advance();
        if (auto c = coord_from_name(name)) return var(*c);
        if (name == "eps") return sign_param("eps");
        static const std::pair<const char*, Fn> builtins[] = {
            {"exp", Fn::Exp}, {"log", Fn::Log}, {"sin", Fn::Sin}, {"cos", Fn::Cos}, {"sqrt", Fn::Sqrt}};
        for (const auto& [n, fn] : builtins) {
            if (name != n) continue;
            expect(Tok::LParen);
            Expr a = expression(0);
            expect(Tok::RParen);
            return apply(fn, a);
        }
        if (name == "D") {
            expect(Tok::LParen);
            Expr e = expression(0);
            expect(Tok::Comma);
            Coord v = coordinate();
            long n = 1;
            if (cur_.kind == Tok::Comma) {
                advance();
                std::size_t at = cur_.offset;
                Rational k = constant_arg("derivative order");
                if (k.get_den() != 1 || sgn(k) < 0 || !k.get_num().fits_slong_p())
                    throw ParseError(at, {"nonnegative integer"}, "derivative order must be a nonnegative integer");
                n = k.get_num().get_si();
            }
            expect(Tok::RParen);
            return diff(e, v, static_cast<int>(n));
        }
        if (name == "INT") {
            expect(Tok::LParen);
            Expr e = expression(0);
            expect(Tok::Comma);
            Coord v = coordinate();
            expect(Tok::Comma);
            Rational lo = constant_arg("lower bound");
            expect(Tok::RParen);
            return antideriv(e, v, lo);
        }
        if (cur_.kind == Tok::LParen) {
            advance();
            std::vector<Coord> args;
            if (cur_.kind != Tok::RParen) {
                while (true) {
                    std::size_t at = cur_.offset;
                    Coord c = coordinate();
                    for (Coord a : args)
                        if (a == c) throw ParseError(at, {"distinct coordinate"}, "repeated argument");
                    args.push_back(c);
                    if (cur_.kind != Tok::Comma) break;
                    advance();
                }
            }
            expect(Tok::RParen);
            return opaque(name, std::move(args));
        }
        return param(name);
    }
};

}  // namespace

Expr parse_expr(std::string_view text) {
    Parser p(text);
    return p.parse_all();
}

}  // namespace walker
