#include "walker/symcore/eval.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "walker/errors.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {

Evaluator::Evaluator(std::map<std::string, double> params, std::map<std::string, Expr> functions)
    : params_(std::move(params)), functions_(std::move(functions)) {
    reset_stats();
}

Evaluator& Evaluator::bind_param(const std::string& name, double value) {
    params_[name] = value;
    return *this;
}

Evaluator& Evaluator::bind_function(const std::string& name, const Expr& closed_form) {
    functions_[name] = closed_form;
    for (auto it = derivative_cache_.begin(); it != derivative_cache_.end();) {
        if (it->first.first == name)
            it = derivative_cache_.erase(it);
        else
            ++it;
    }
    return *this;
}

void Evaluator::reset_stats() {
    min_den_ = std::numeric_limits<double>::infinity();
    max_mag_ = 0;
}

void Evaluator::record(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite intermediate value");
    max_mag_ = std::max(max_mag_, std::fabs(v));
}

double Evaluator::operator()(const Expr& e, const Point& point) {
    return eval_node(e, point);
}

const Expr& Evaluator::derivative_of(const Expr& node) {
    auto key = std::make_pair(node.name(), node.orders());
    auto it = derivative_cache_.find(key);
    if (it != derivative_cache_.end()) return it->second;
    auto f = functions_.find(node.name());
    if (f == functions_.end()) throw UnboundSymbol(node.name());
    return derivative_cache_.emplace(key, diff(f->second, node.orders())).first->second;
}

double Evaluator::eval_node(const Expr& e, const Point& p) {
    double v = 0;
    switch (e.kind()) {
        case Kind::Rational: v = e.value().get_d(); break;
        case Kind::Coordinate: v = p[index_of(e.coord()) - 1]; break;
        case Kind::Param: {
            auto it = params_.find(e.name());
            if (it == params_.end()) throw UnboundSymbol(e.name());
            v = it->second;
            break;
        }
        case Kind::Sum:
            for (const auto& t : e.terms()) v += eval_node(t, p);
            break;
        case Kind::Product:
            v = 1;
            for (const auto& f : e.terms()) v *= eval_node(f, p);
            break;
        case Kind::Power: {
            double b = eval_node(e.base(), p);
            const Rational& r = e.exponent();
            if (sgn(r) < 0) {
                min_den_ = std::min(min_den_, std::fabs(b));
                if (std::fabs(b) < 1e-300) throw DomainError("division by zero");
            }
            if (r.get_den() == 1) {
                v = std::pow(b, r.get_num().get_si());
            } else if (b < 0) {
                if (r.get_den() % 2 == 0) throw DomainError("even root of a negative value");
                double mag = std::pow(-b, r.get_d());
                v = (r.get_num() % 2 == 0) ? mag : -mag;
            } else {
                v = std::pow(b, r.get_d());
            }
            break;
        }
        case Kind::Apply: {
            double a = eval_node(e.arg(), p);
            switch (e.fn()) {
                case Fn::Exp: v = std::exp(a); break;
                case Fn::Log:
                    if (a <= 0) throw DomainError("log of a non-positive value");
                    v = std::log(a);
                    break;
                case Fn::Sin: v = std::sin(a); break;
                case Fn::Cos: v = std::cos(a); break;
                case Fn::Sqrt:
                    if (a < 0) throw DomainError("sqrt of a negative value");
                    v = std::sqrt(a);
                    break;
            }
            break;
        }
        case Kind::Opaque: v = eval_node(derivative_of(e), p); break;
        case Kind::Antideriv: {
            int k = index_of(e.var()) - 1;
            double lo = e.lower().get_d();
            double hi = p[k];
            if (lo == hi) break;
            Point q = p;
            auto integrand = [&](double s) {
                q[k] = s;
                return eval_node(e.integrand(), q);
            };
            v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, lo, hi, 15, 1e-12);
            break;
        }
    }
    record(v);
    return v;
}

double eval(const Expr& e, const Point& point, const std::map<std::string, double>& params) {
    Evaluator ev(params);
    return ev(e, point);
}

double eval(const Expr& e, const Point& point, const std::map<std::string, double>& params,
            const std::map<std::string, Expr>& functions) {
    Evaluator ev(params, functions);
    return ev(e, point);
}

}  // namespace walker
