#include <array>
#include <vector>

#include "walker/geometry/walker_metric.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

Coord C(int i) { return coord_at(i); }

// dg[k](i, j) = d_k g_ij
std::array<SymTensor2, 3> metric_derivatives(const SymTensor2& g) {
    std::array<SymTensor2, 3> dg;
    for (int k = 1; k <= 3; ++k)
        for (int s = 0; s < 6; ++s) dg[k - 1].at_slot(s) = diff(g.at_slot(s), C(k));
    return dg;
}

}  // namespace

Christoffel christoffel(const WalkerMetric& w) {
    SymTensor2 g = w.metric();
    SymTensor2 h = w.inverse();
    auto dg = metric_derivatives(g);
    Christoffel gamma;
    for (int i = 1; i <= 3; ++i)
        for (auto [j, k] : SymTensor2::kPairs) {
            std::vector<Expr> terms;
            for (int l = 1; l <= 3; ++l) {
                if (h(i, l).is_zero()) continue;
                Expr bracket = dg[j - 1](k, l) + dg[k - 1](j, l) - dg[l - 1](j, k);
                terms.push_back(h(i, l) * bracket);
            }
            gamma(i, j, k) = simplify(rational(Rational(1, 2)) * make_sum(std::move(terms)));
        }
    return gamma;
}

SymTensor2 ricci(const WalkerMetric& w) {
    Christoffel G = christoffel(w);
    // trace_l = Gamma^m_{l m}
    std::array<Expr, 3> tr;
    for (int l = 1; l <= 3; ++l) {
        std::vector<Expr> t;
        for (int m = 1; m <= 3; ++m) t.push_back(G(m, l, m));
        tr[l - 1] = simplify(make_sum(std::move(t)));
    }
    SymTensor2 ric;
    for (auto [i, j] : SymTensor2::kPairs) {
        std::vector<Expr> terms;
        for (int l = 1; l <= 3; ++l) {
            terms.push_back(diff(G(l, i, j), C(l)));
            terms.push_back(-diff(G(l, i, l), C(j)));
            terms.push_back(G(l, i, j) * tr[l - 1]);
            for (int m = 1; m <= 3; ++m) terms.push_back(-(G(m, i, l) * G(l, j, m)));
        }
        ric(i, j) = simplify(make_sum(std::move(terms)));
    }
    return ric;
}

Expr scalar_curvature(const WalkerMetric& w) { return trace(w, ricci(w)); }

SymTensor2 hessian(const WalkerMetric& w, const Expr& F) {
    Christoffel G = christoffel(w);
    std::array<Expr, 3> dF;
    for (int k = 1; k <= 3; ++k) dF[k - 1] = diff(F, C(k));
    SymTensor2 H;
    for (auto [i, j] : SymTensor2::kPairs) {
        std::vector<Expr> terms{diff(dF[i - 1], C(j))};
        for (int k = 1; k <= 3; ++k) terms.push_back(-(G(k, i, j) * dF[k - 1]));
        H(i, j) = simplify(make_sum(std::move(terms)));
    }
    return H;
}

SymTensor2 lie_derivative(const WalkerMetric& w, const VectorField& v) {
    SymTensor2 g = w.metric();
    auto dg = metric_derivatives(g);
    std::array<std::array<Expr, 3>, 3> dv;  // dv[i][k] = d_i V^k
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k) dv[i - 1][k - 1] = diff(v(k), C(i));
    SymTensor2 L;
    for (auto [i, j] : SymTensor2::kPairs) {
        std::vector<Expr> terms;
        for (int k = 1; k <= 3; ++k) {
            terms.push_back(v(k) * dg[k - 1](i, j));
            terms.push_back(g(k, j) * dv[i - 1][k - 1]);
            terms.push_back(g(i, k) * dv[j - 1][k - 1]);
        }
        L(i, j) = simplify(make_sum(std::move(terms)));
    }
    return L;
}

VectorField gradient(const WalkerMetric& w, const Expr& F) {
    SymTensor2 h = w.inverse();
    VectorField out;
    for (int i = 1; i <= 3; ++i) {
        std::vector<Expr> terms;
        for (int j = 1; j <= 3; ++j) terms.push_back(h(i, j) * diff(F, C(j)));
        out(i) = simplify(make_sum(std::move(terms)));
    }
    return out;
}

// With |det g| = 1 the volume factor drops out of both operators.
Expr laplacian(const WalkerMetric& w, const Expr& F) {
    VectorField grad = gradient(w, F);
    return divergence(w, grad);
}

Expr divergence(const WalkerMetric&, const VectorField& y) {
    std::vector<Expr> terms;
    for (int i = 1; i <= 3; ++i) terms.push_back(diff(y(i), C(i)));
    return simplify(make_sum(std::move(terms)));
}

}  // namespace walker
