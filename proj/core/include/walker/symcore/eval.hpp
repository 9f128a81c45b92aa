#pragma once

#include <array>
#include <limits>
#include <map>
#include <string>

#include "walker/symcore/expr.hpp"

namespace walker {

using Point = std::array<double, 3>;

// Numeric evaluator. Opaque functions are bound to closed forms (in their own argument
// coordinates); derivative orders are resolved by symbolic differentiation and cached.
// Tracks the smallest denominator magnitude and the largest intermediate magnitude seen.
class Evaluator {
public:
    Evaluator() = default;
    Evaluator(std::map<std::string, double> params, std::map<std::string, Expr> functions = {});

    Evaluator& bind_param(const std::string& name, double value);
    Evaluator& bind_function(const std::string& name, const Expr& closed_form);

    double operator()(const Expr& e, const Point& point);

    double min_denominator() const { return min_den_; }
    double max_magnitude() const { return max_mag_; }
    void reset_stats();

    static constexpr double kQuadratureTol = 1e-10;

private:
    double eval_node(const Expr& e, const Point& point);
    const Expr& derivative_of(const Expr& opaque_node);
    void record(double v);

    std::map<std::string, double> params_;
    std::map<std::string, Expr> functions_;
    std::map<std::pair<std::string, Orders>, Expr> derivative_cache_;
    double min_den_ = std::numeric_limits<double>::infinity();
    double max_mag_ = 0;
};

double eval(const Expr& e, const Point& point, const std::map<std::string, double>& params = {});
double eval(const Expr& e, const Point& point, const std::map<std::string, double>& params,
            const std::map<std::string, Expr>& functions);

}  // namespace walker
