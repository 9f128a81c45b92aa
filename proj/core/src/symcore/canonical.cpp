#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "walker/errors.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

using Mono = Monomial;

long mono_degree(const Mono& m) {
    long d = 0;
    for (const auto& [a, e] : m) d += e;
    return d;
}

// Sparse lexicographic comparison of exponent vectors; atoms earlier in compare() order rank higher.
int lex_cmp(const Mono& a, const Mono& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (j == b.size())
            c = -1;
        else if (i == a.size())
            c = 1;
        else
            c = compare(a[i].first, b[j].first);
        if (c < 0) return a[i].second > 0 ? 1 : -1;
        if (c > 0) return b[j].second > 0 ? -1 : 1;
        if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        long da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return lex_cmp(a, b) < 0;
    }
};

using Poly = std::map<Mono, Rational, MonoLess>;

void add_term(Poly& p, const Mono& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) p.erase(it);
    }
}

void add_into(Poly& p, const Poly& q, const Rational& scale = 1) {
    for (const auto& [m, c] : q) add_term(p, m, c * scale);
}

Mono merge(const Mono& a, const Mono& b) {
    Mono out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = (j == b.size()) ? -1 : (i == a.size()) ? 1 : compare(a[i].first, b[j].first);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

Mono negate(const Mono& m) {
    Mono out = m;
    for (auto& [a, e] : out) e = -e;
    return out;
}

void sort_mono(Mono& m) {
    std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
}

bool is_sign_atom(const Expr& a) { return a.kind() == Kind::Param && a.is_sign(); }
bool is_exp_atom(const Expr& a) { return a.kind() == Kind::Apply && a.fn() == Fn::Exp; }
bool is_cos_atom(const Expr& a) { return a.kind() == Kind::Apply && a.fn() == Fn::Cos; }
bool is_root_atom(const Expr& a) { return a.kind() == Kind::Power; }
bool is_sum_atom(const Expr& a) { return a.kind() == Kind::Sum; }

bool needs_rules(const Mono& m) {
    int exp_count = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& [a, e] = m[i];
        if (e == 0) return true;
        if (is_sign_atom(a) && e != 1) return true;
        if (is_exp_atom(a)) {
            if (e != 1 || ++exp_count > 1) return true;
        }
        if (is_cos_atom(a) && e >= 2) return true;
        if (is_sum_atom(a) && e > 0) return true;
        if (is_root_atom(a)) {
            const Rational& r = a.exponent();
            long q = r.get_den().get_si();
            if (e <= 0 || e >= q || std::gcd(static_cast<long>(e), q) != 1) return true;
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (is_root_atom(m[j].first) && m[j].first.base() == a.base()) return true;
        }
    }
    return false;
}

Expr atom_power(const Expr& atom, int e) {
    if (is_root_atom(atom)) return make_power(atom.base(), atom.exponent() * e);
    if (e == 1) return atom;
    return make_power(atom, e);
}

Expr to_expr(const Poly& p) {
    std::vector<Expr> terms;
    terms.reserve(p.size());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::vector<Expr> factors;
        factors.reserve(it->first.size() + 1);
        if (it->second != 1) factors.push_back(rational(it->second));
        for (const auto& [a, e] : it->first) factors.push_back(atom_power(a, e));
        terms.push_back(make_product(std::move(factors)));
    }
    return make_sum(std::move(terms));
}

Poly constant(const Rational& q) {
    Poly p;
    add_term(p, Mono{}, q);
    return p;
}

Poly atom_poly(const Expr& atom, int e = 1) {
    Poly p;
    p.emplace(Mono{{atom, e}}, Rational(1));
    return p;
}

bool mono_divides(const Mono& num, const Mono& den, Mono& out) {
    out = merge(num, negate(den));
    for (const auto& [a, e] : out)
        if (e < 0) return false;
    return true;
}

std::optional<Rational> exact_root(const Rational& v, long q) {
    if (sgn(v) < 0 && q % 2 == 0) return std::nullopt;
    mpz_class num = abs(v.get_num()), den = v.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(q))) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(q))) return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    if (sgn(v) < 0) r = -r;
    return r;
}

Rational rpow(const Rational& b, long k) {
    Rational out = 1;
    Rational base = k < 0 ? Rational(1) / b : b;
    for (long i = 0; i < std::labs(k); ++i) out *= base;
    return out;
}

class Canon {
public:
    Poly normalize(const Expr& e) {
        auto it = memo_.find(e);
        if (it != memo_.end()) return it->second;
        Poly p = compute(e);
        memo_.emplace(e, p);
        return p;
    }

    Expr canon(const Expr& e) { return to_expr(normalize(e)); }

private:
    std::unordered_map<Expr, Poly, ExprHash> memo_;

    Poly compute(const Expr& e) {
        switch (e.kind()) {
            case Kind::Rational: return constant(e.value());
            case Kind::Coordinate:
            case Kind::Param:
            case Kind::Opaque: return atom_poly(e);
            case Kind::Sum: {
                Poly acc;
                for (const auto& t : e.terms()) add_into(acc, normalize(t));
                return ratnorm(std::move(acc));
            }
            case Kind::Product: {
                Poly acc = constant(1);
                for (const auto& f : e.terms()) {
                    acc = mul(acc, normalize(f));
                    if (acc.empty()) return acc;
                }
                return ratnorm(std::move(acc));
            }
            case Kind::Power: return ratnorm(power_rational(normalize(e.base()), e.exponent()));
            case Kind::Apply: return apply_rules(e.fn(), normalize(e.arg()));
            case Kind::Antideriv: {
                Poly g = normalize(e.integrand());
                if (g.empty()) return g;
                Expr ge = to_expr(g);
                if (!depends_on(ge, e.var())) {
                    Poly span = atom_poly(var(e.var()));
                    add_term(span, Mono{}, -e.lower());
                    return mul(g, span);
                }
                return atom_poly(antideriv(ge, e.var(), e.lower()));
            }
        }
        return {};
    }

    Poly mul(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                Mono m = merge(ma, mb);
                Rational c = ca * cb;
                if (!needs_rules(m))
                    add_term(out, m, c);
                else
                    add_into(out, normalize_mono(std::move(m), c));
            }
        return out;
    }

    Poly power_int(const Poly& p, long k) {
        if (k < 0) return power_int(invert(p), -k);
        Poly result = constant(1), base = p;
        while (k > 0) {
            if (k & 1) result = mul(result, base);
            k >>= 1;
            if (k > 0) base = mul(base, base);
        }
        return result;
    }

    Poly power_rational(const Poly& base, const Rational& r) {
        if (r.get_den() == 1) return power_int(base, r.get_num().get_si());
        if (base.empty()) {
            if (sgn(r) < 0) throw DomainError("zero raised to a negative power");
            return {};
        }
        long q = r.get_den().get_si();
        long p = r.get_num().get_si();
        if (base.size() == 1 && base.begin()->first.empty()) {
            const Rational& v = base.begin()->second;
            if (auto root = exact_root(v, q)) return constant(rpow(*root, p));
        }
        Expr root = make_power(to_expr(base), Rational(1, q));
        return normalize_mono(Mono{{root, static_cast<int>(p)}}, 1);
    }

    Poly exp_of(const Poly& arg) {
        if (arg.empty()) return constant(1);
        Expr u = to_expr(arg);
        if (u.kind() == Kind::Apply && u.fn() == Fn::Log) return normalize(u.arg());
        return atom_poly(exp(u));
    }

    Poly apply_rules(Fn fn, const Poly& arg) {
        switch (fn) {
            case Fn::Exp: return exp_of(arg);
            case Fn::Log: {
                if (arg.empty()) throw DomainError("log of zero");
                if (arg.size() == 1 && arg.begin()->first.empty() && arg.begin()->second == 1) return {};
                Expr u = to_expr(arg);
                if (u.kind() == Kind::Apply && u.fn() == Fn::Exp) return normalize(u.arg());
                return atom_poly(log(u));
            }
            case Fn::Sin:
            case Fn::Cos: {
                if (arg.empty()) return fn == Fn::Sin ? Poly{} : constant(1);
                bool flip = sgn(arg.rbegin()->second) < 0;
                Poly a = arg;
                if (flip)
                    for (auto& [m, c] : a) c = -c;
                Poly out = atom_poly(apply(fn, to_expr(a)));
                if (flip && fn == Fn::Sin)
                    for (auto& [m, c] : out) c = -c;
                return out;
            }
            case Fn::Sqrt: return power_rational(arg, Rational(1, 2));
        }
        return {};
    }

    Poly normalize_mono(Mono m, const Rational& c) {
        if (!needs_rules(m)) {
            Poly p;
            add_term(p, m, c);
            return p;
        }
        Mono keep;
        std::vector<Poly> factors;
        std::vector<Expr> exp_args;
        std::vector<std::pair<Expr, Rational>> roots;
        for (auto& [a, e] : m) {
            if (e == 0) continue;
            if (is_sign_atom(a)) {
                if (((e % 2) + 2) % 2 == 1) keep.emplace_back(a, 1);
            } else if (is_exp_atom(a)) {
                exp_args.push_back(make_product({integer(e), a.arg()}));
            } else if (is_root_atom(a)) {
                Rational r = a.exponent() * e;
                auto it = std::find_if(roots.begin(), roots.end(), [&](const auto& g) { return g.first == a.base(); });
                if (it == roots.end())
                    roots.emplace_back(a.base(), r);
                else
                    it->second += r;
            } else if (is_cos_atom(a) && e >= 2) {
                if (e % 2 == 1) keep.emplace_back(a, 1);
                Poly one_minus_sin2 = constant(1);
                add_term(one_minus_sin2, Mono{{sin(a.arg()), 2}}, -1);
                factors.push_back(power_int(one_minus_sin2, e / 2));
            } else if (is_sum_atom(a) && e > 0) {
                factors.push_back(power_int(normalize(a), e));
            } else {
                keep.emplace_back(a, e);
            }
        }
        if (!exp_args.empty()) {
            Poly arg = normalize(make_sum(exp_args));
            factors.push_back(exp_of(arg));
        }
        for (auto& [b, r] : roots) {
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
            Rational frac = r - Rational(fl);
            long whole = fl.get_si();
            if (sgn(frac) != 0)
                keep.emplace_back(make_power(b, Rational(1, frac.get_den())), static_cast<int>(frac.get_num().get_si()));
            if (whole != 0) factors.push_back(power_int(normalize(b), whole));
        }
        sort_mono(keep);
        Poly result;
        add_term(result, keep, c);
        for (const auto& f : factors) {
            result = mul(result, f);
            if (result.empty()) break;
        }
        return result;
    }

    Poly invert(const Poly& p) {
        if (p.empty()) throw DomainError("division by zero");
        if (p.size() == 1) {
            const auto& [m, c] = *p.begin();
            return normalize_mono(negate(m), Rational(1) / c);
        }
        // Content: per non-exp atom, the minimum exponent over all terms (absent counts as 0).
        Mono content;
        bool first = true;
        bool all_exp = true;
        for (const auto& [m, c] : p) {
            bool has_exp = false;
            Mono nonexp;
            for (const auto& [a, e] : m) {
                if (is_exp_atom(a))
                    has_exp = true;
                else
                    nonexp.emplace_back(a, e);
            }
            all_exp = all_exp && has_exp;
            if (first) {
                content = std::move(nonexp);
                first = false;
                continue;
            }
            Mono next;
            std::size_t i = 0, j = 0;
            while (i < content.size() || j < nonexp.size()) {
                int c2 = (j == nonexp.size()) ? -1 : (i == content.size()) ? 1 : compare(content[i].first, nonexp[j].first);
                if (c2 < 0) {
                    if (content[i].second < 0) next.push_back(content[i]);
                    ++i;
                } else if (c2 > 0) {
                    if (nonexp[j].second < 0) next.push_back(nonexp[j]);
                    ++j;
                } else {
                    int e = std::min(content[i].second, nonexp[j].second);
                    if (e != 0) next.emplace_back(content[i].first, e);
                    ++i;
                    ++j;
                }
            }
            content = std::move(next);
        }

        Poly factor = normalize_mono(negate(content), Rational(1) / p.rbegin()->second);
        if (all_exp) {
            for (const auto& [a, e] : p.rbegin()->first)
                if (is_exp_atom(a)) factor = mul(factor, exp_of(normalize(-a.arg())));
        }
        bool trivial = factor.size() == 1 && factor.begin()->first.empty() && factor.begin()->second == 1;
        if (trivial) return atom_poly(to_expr(p), -1);
        // p = reduced / factor, so 1/p = factor / reduced.
        Poly reduced = mul(p, factor);
        return mul(factor, invert(reduced));
    }

    // Combine the inverted-sum atoms into a common denominator and cancel exact divisors.
    Poly ratnorm(Poly p) {
        std::vector<std::pair<Expr, int>> dens;
        for (const auto& [m, c] : p)
            for (const auto& [a, e] : m)
                if (is_sum_atom(a) && e < 0) {
                    auto it = std::find_if(dens.begin(), dens.end(), [&](const auto& d) { return d.first == a; });
                    if (it == dens.end())
                        dens.emplace_back(a, -e);
                    else
                        it->second = std::max(it->second, -e);
                }
        if (dens.empty()) return p;
        bool uniform = std::all_of(p.begin(), p.end(), [&](const auto& t) {
            for (const auto& [d, k] : dens) {
                auto it = std::find_if(t.first.begin(), t.first.end(), [&](const auto& ae) { return ae.first == d; });
                if (it == t.first.end() || it->second != -k) return false;
            }
            return true;
        });
        Mono dmono;
        for (const auto& [d, k] : dens) dmono.emplace_back(d, k);
        sort_mono(dmono);
        Poly num;
        if (uniform) {
            for (const auto& [m, c] : p) add_term(num, merge(m, dmono), c);
        } else {
            Poly dp;
            dp.emplace(dmono, Rational(1));
            num = mul(p, dp);
        }
        if (num.empty()) return num;
        for (const auto& [m, c] : num)
            for (const auto& [a, e] : m)
                if (is_sum_atom(a)) return p;  // nested denominators we do not flatten

        // Clear negative exponents so that division happens in a polynomial ring.
        std::map<Expr, int> mins;
        for (const auto& [m, c] : num)
            for (const auto& [a, e] : m)
                if (e < 0) mins[a] = std::min(mins[a], e);
        Mono shift;
        for (const auto& [a, e] : mins) shift.emplace_back(a, -e);
        sort_mono(shift);
        if (!shift.empty()) {
            Poly shifted;
            for (const auto& [m, c] : num) add_term(shifted, merge(m, shift), c);
            num = std::move(shifted);
        }

        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& [d, k] : dens) {
                while (k > 0) {
                    Poly q;
                    if (!raw_divide(num, normalize(d), q)) break;
                    num = std::move(q);
                    --k;
                    progress = true;
                }
            }
        }
        Mono tail = negate(shift);
        for (const auto& [d, k] : dens)
            if (k > 0) tail.emplace_back(d, -k);
        sort_mono(tail);
        Poly out;
        for (const auto& [m, c] : num) {
            Mono full = merge(m, tail);
            if (!needs_rules(full))
                add_term(out, full, c);
            else
                add_into(out, normalize_mono(std::move(full), c));
        }
        return out;
    }

    static bool raw_divide(const Poly& n, const Poly& d, Poly& q) {
        if (d.empty()) return false;
        for (const auto& [m, c] : d)
            for (const auto& [a, e] : m)
                if (e < 0) return false;
        const auto& [lead_m, lead_c] = *d.rbegin();
        Poly r = n;
        q.clear();
        for (int iter = 0; iter < 20000; ++iter) {
            if (r.empty()) return true;
            const auto& [rm, rc] = *r.rbegin();
            Mono qm;
            if (!mono_divides(rm, lead_m, qm)) return false;
            Rational qc = rc / lead_c;
            add_term(q, qm, qc);
            for (const auto& [m, c] : d) add_term(r, merge(qm, m), -qc * c);
        }
        return false;
    }
};

Expr raw_diff(const Expr& e, Coord v, std::unordered_map<Expr, Expr, ExprHash>& memo);

Expr raw_diff_impl(const Expr& e, Coord v, std::unordered_map<Expr, Expr, ExprHash>& memo) {
    switch (e.kind()) {
        case Kind::Rational:
        case Kind::Param: return Expr();
        case Kind::Coordinate: return e.coord() == v ? integer(1) : Expr();
        case Kind::Sum: {
            std::vector<Expr> out;
            for (const auto& t : e.terms()) {
                Expr d = raw_diff(t, v, memo);
                if (!d.is_zero()) out.push_back(d);
            }
            return make_sum(std::move(out));
        }
        case Kind::Product: {
            const auto& fs = e.terms();
            std::vector<Expr> out;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                Expr d = raw_diff(fs[i], v, memo);
                if (d.is_zero()) continue;
                std::vector<Expr> prod;
                prod.reserve(fs.size());
                for (std::size_t j = 0; j < fs.size(); ++j) prod.push_back(j == i ? d : fs[j]);
                out.push_back(make_product(std::move(prod)));
            }
            return make_sum(std::move(out));
        }
        case Kind::Power: {
            Expr d = raw_diff(e.base(), v, memo);
            if (d.is_zero()) return Expr();
            return make_product({rational(e.exponent()), make_power(e.base(), e.exponent() - 1), d});
        }
        case Kind::Apply: {
            const Expr& u = e.arg();
            Expr du = raw_diff(u, v, memo);
            if (du.is_zero()) return Expr();
            switch (e.fn()) {
                case Fn::Exp: return make_product({e, du});
                case Fn::Log: return make_product({du, make_power(u, -1)});
                case Fn::Sin: return make_product({cos(u), du});
                case Fn::Cos: return make_product({integer(-1), sin(u), du});
                case Fn::Sqrt: return make_product({rational(Rational(1, 2)), make_power(u, Rational(-1, 2)), du});
            }
            return Expr();
        }
        case Kind::Opaque: {
            const auto& args = e.args();
            if (std::find(args.begin(), args.end(), v) == args.end()) return Expr();
            Orders o = e.orders();
            ++o[index_of(v) - 1];
            return opaque(e.name(), args, o);
        }
        case Kind::Antideriv: {
            if (e.var() == v) return e.integrand();
            Expr d = raw_diff(e.integrand(), v, memo);
            if (d.is_zero()) return Expr();
            return antideriv(d, e.var(), e.lower());
        }
    }
    return Expr();
}

Expr raw_diff(const Expr& e, Coord v, std::unordered_map<Expr, Expr, ExprHash>& memo) {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    Expr d = raw_diff_impl(e, v, memo);
    memo.emplace(e, d);
    return d;
}

}  // namespace

Expr simplify(const Expr& e) {
    Canon c;
    return c.canon(e);
}

Expr diff(const Expr& e, Coord v) {
    std::unordered_map<Expr, Expr, ExprHash> memo;
    return simplify(raw_diff(e, v, memo));
}

Expr diff(const Expr& e, Coord v, int n) {
    Expr out = e;
    for (int i = 0; i < n; ++i) out = diff(out, v);
    return n == 0 ? simplify(out) : out;
}

Expr diff(const Expr& e, const Orders& orders) {
    Expr out = e;
    bool any = false;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < orders[i]; ++k) {
            out = diff(out, kCoords[i]);
            any = true;
        }
    return any ? out : simplify(out);
}

std::vector<Term> canonical_terms(const Expr& e) {
    Canon c;
    Poly p = c.normalize(e);
    std::vector<Term> out;
    out.reserve(p.size());
    for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(Term{it->second, it->first});
    return out;
}

Rational leading_coefficient(const Expr& e) {
    auto t = canonical_terms(e);
    return t.empty() ? Rational(0) : t.front().coef;
}

}  // namespace walker
