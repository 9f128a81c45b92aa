#pragma once

#include <array>
#include <utility>

#include "walker/geometry/tensor.hpp"
#include "walker/symcore/expr.hpp"

namespace walker {

// g = 2 dx dz + eps dy^2 + f dz^2 in coordinates (x, y, z) = (x^1, x^2, x^3).
class WalkerMetric {
public:
    WalkerMetric(Expr f, Expr epsilon);
    WalkerMetric(Expr f, int epsilon);

    const Expr& f() const { return f_; }
    const Expr& epsilon() const { return eps_; }

    SymTensor2 metric() const;
    SymTensor2 inverse() const;

private:
    Expr f_;
    Expr eps_;
};

// gamma(i, j, k) = Gamma^i_{jk}, 1-based, symmetric in j, k.
class Christoffel {
public:
    const Expr& operator()(int i, int j, int k) const { return g_.at(i - 1)(j, k); }
    Expr& operator()(int i, int j, int k) { return g_.at(i - 1)(j, k); }

private:
    std::array<SymTensor2, 3> g_{};
};

std::pair<SymTensor2, SymTensor2> metric_components(const WalkerMetric& w);
Expr det(const SymTensor2& t);

// Generic index-formula implementations.
Christoffel christoffel(const WalkerMetric& w);
SymTensor2 ricci(const WalkerMetric& w);
Expr scalar_curvature(const WalkerMetric& w);
SymTensor2 hessian(const WalkerMetric& w, const Expr& F);
SymTensor2 lie_derivative(const WalkerMetric& w, const VectorField& v);
Expr laplacian(const WalkerMetric& w, const Expr& F);
Expr divergence(const WalkerMetric& w, const VectorField& y);
VectorField gradient(const WalkerMetric& w, const Expr& F);

// g^{ij} T_ij.
Expr trace(const WalkerMetric& w, const SymTensor2& t);

}  // namespace walker
