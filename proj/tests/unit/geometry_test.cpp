#include <gtest/gtest.h>

#include "support.hpp"
#include "walker/geometry/walker_metric.hpp"

namespace walker {
namespace {

using testing::P;
using testing::RandomExpr;
using testing::SameExpr;
using testing::SimplifiesToZero;

const Expr x = var(Coord::X1), y = var(Coord::X2), z = var(Coord::X3);
const Expr half = rational(Rational(1, 2));

Expr d(const Expr& e, int i) { return diff(e, coord_at(i)); }
Expr d(const Expr& e, int i, int j) { return diff(diff(e, coord_at(i)), coord_at(j)); }

Expr generic_f() { return opaque("f", {Coord::X1, Coord::X2, Coord::X3}); }
Expr generic_F() { return opaque("F", {Coord::X1, Coord::X2, Coord::X3}); }

// Closed forms of the nonzero connection coefficients, indexed (i, j, k) with j <= k.
std::map<std::array<int, 3>, Expr> closed_christoffel(const Expr& f, const Expr& eps) {
    return {{{1, 1, 3}, half * d(f, 1)},
            {{1, 2, 3}, half * d(f, 2)},
            {{1, 3, 3}, half * (f * d(f, 1) + d(f, 3))},
            {{2, 3, 3}, -d(f, 2) / (2 * eps)},
            {{3, 3, 3}, -half * d(f, 1)}};
}

SymTensor2 closed_ricci(const Expr& f, const Expr& eps) {
    return SymTensor2({0, 0, half * d(f, 1, 1), 0, half * d(f, 1, 2), (eps * f * d(f, 1, 1) - d(f, 2, 2)) / (2 * eps)});
}

SymTensor2 closed_hessian(const Expr& f, const Expr& eps, const Expr& F) {
    return SymTensor2({d(F, 1, 1), d(F, 1, 2), d(F, 1, 3) - half * d(f, 1) * d(F, 1), d(F, 2, 2),
                       d(F, 2, 3) - half * d(f, 2) * d(F, 1),
                       d(F, 3, 3) - half * (f * d(f, 1) + d(f, 3)) * d(F, 1) + d(f, 2) * d(F, 2) / (2 * eps) +
                           half * d(f, 1) * d(F, 3)});
}

SymTensor2 closed_lie(const Expr& f, const Expr& eps, const VectorField& V) {
    return SymTensor2({2 * d(V(3), 1), eps * d(V(2), 1) + d(V(3), 2), d(V(1), 1) + d(V(3), 3) + f * d(V(3), 1),
                       2 * eps * d(V(2), 2), d(V(1), 2) + f * d(V(3), 2) + eps * d(V(2), 3),
                       V(1) * d(f, 1) + V(2) * d(f, 2) + V(3) * d(f, 3) + 2 * d(V(1), 3) + 2 * f * d(V(3), 3)});
}

Expr closed_laplacian(const Expr& f, const Expr& eps, const Expr& F) {
    return -f * d(F, 1, 1) - d(f, 1) * d(F, 1) + eps * d(F, 2, 2) + 2 * d(F, 1, 3);
}

void expect_tensor_eq(const SymTensor2& a, const SymTensor2& b) {
    for (int s = 0; s < 6; ++s) EXPECT_TRUE(SameExpr(a.at_slot(s), b.at_slot(s))) << "component " << SymTensor2::label(s);
}

void expect_christoffel_closed(const Expr& f, const Expr& eps) {
    WalkerMetric w(f, eps);
    Christoffel G = christoffel(w);
    auto closed = closed_christoffel(f, eps);
    for (int i = 1; i <= 3; ++i)
        for (auto [j, k] : SymTensor2::kPairs) {
            auto it = closed.find({i, j, k});
            Expr expected = it == closed.end() ? Expr(0) : it->second;
            EXPECT_TRUE(SameExpr(G(i, j, k), expected)) << "Gamma^" << i << "_" << j << k;
            EXPECT_EQ(G(i, j, k), G(i, k, j));
        }
}

class Signs : public ::testing::TestWithParam<int> {
protected:
    Expr eps() const { return GetParam() == 0 ? sign_param() : integer(GetParam()); }
};

TEST_P(Signs, MetricComponents) {
    WalkerMetric w(generic_f(), eps());
    auto [g, h] = metric_components(w);
    EXPECT_TRUE(g(1, 1).is_zero());
    EXPECT_TRUE(g(1, 2).is_zero());
    EXPECT_TRUE(g(2, 3).is_zero());
    EXPECT_TRUE(g(1, 3).is_one());
    EXPECT_EQ(g(2, 2), eps());
    EXPECT_EQ(g(3, 3), generic_f());
    EXPECT_TRUE(SameExpr(h(1, 1), -generic_f()));
    EXPECT_TRUE(h(1, 3).is_one());
    EXPECT_TRUE(SameExpr(h(2, 2), eps()));
    EXPECT_TRUE(h(3, 3).is_zero());
    EXPECT_TRUE(SameExpr(det(g), -eps()));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Expr s = 0;
            for (int k = 1; k <= 3; ++k) s = s + g(i, k) * h(k, j);
            EXPECT_TRUE(SameExpr(s, integer(i == j ? 1 : 0)));
        }
}

TEST_P(Signs, FlatMetric) {
    WalkerMetric w(0, eps());
    EXPECT_TRUE(SameExpr(det(w.metric()), -eps()));
    Christoffel G = christoffel(w);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) EXPECT_TRUE(G(i, j, k).is_zero());
    EXPECT_TRUE(ricci(w).simplified().is_zero());
}

TEST_P(Signs, ChristoffelClosedForm) { expect_christoffel_closed(generic_f(), eps()); }

TEST_P(Signs, RicciClosedForm) { expect_tensor_eq(ricci(WalkerMetric(generic_f(), eps())), closed_ricci(generic_f(), eps())); }

TEST_P(Signs, ScalarCurvature) {
    WalkerMetric w(generic_f(), eps());
    EXPECT_EQ(simplify(scalar_curvature(w)), simplify(d(generic_f(), 1, 1)));
}

TEST_P(Signs, HessianClosedForm) {
    WalkerMetric w(generic_f(), eps());
    expect_tensor_eq(hessian(w, generic_F()), closed_hessian(generic_f(), eps(), generic_F()));
    EXPECT_TRUE(hessian(w, P("c0")).simplified().is_zero());
}

TEST_P(Signs, LieDerivativeClosedForm) {
    WalkerMetric w(generic_f(), eps());
    VectorField V(opaque("V1", {Coord::X1, Coord::X2, Coord::X3}), opaque("V2", {Coord::X1, Coord::X2, Coord::X3}),
                  opaque("V3", {Coord::X1, Coord::X2, Coord::X3}));
    expect_tensor_eq(lie_derivative(w, V), closed_lie(generic_f(), eps(), V));
    EXPECT_TRUE(lie_derivative(w, VectorField(0, 0, 0)).simplified().is_zero());
}

TEST_P(Signs, LaplacianClosedForm) {
    WalkerMetric w(generic_f(), eps());
    EXPECT_TRUE(SameExpr(laplacian(w, generic_F()), closed_laplacian(generic_f(), eps(), generic_F())));
    EXPECT_TRUE(laplacian(w, integer(7)).is_zero());
    EXPECT_TRUE(SameExpr(trace(w, hessian(w, generic_F())), laplacian(w, generic_F())));
}

INSTANTIATE_TEST_SUITE_P(Epsilon, Signs, ::testing::Values(1, -1, 0));

TEST(Christoffel, ExampleE1Metric) {
    Expr f = P("((1+lambda)/mu)*x^2");
    Christoffel G = christoffel(WalkerMetric(f, 1));
    EXPECT_TRUE(SameExpr(G(3, 3, 3), P("-((1+lambda)/mu)*x")));
}

TEST(Ricci, HodgeExampleMetric) {
    SymTensor2 r = ricci(WalkerMetric(P("y*z*exp(-x)"), 1));
    EXPECT_TRUE(SameExpr(r(1, 3), P("(1/2)*y*z*exp(-x)")));
}

TEST(ScalarCurvature, Examples) {
    EXPECT_TRUE(scalar_curvature(WalkerMetric(P("-4*z"), 1)).is_zero());
    EXPECT_TRUE(SameExpr(scalar_curvature(WalkerMetric(P("((1+lambda)/mu)*x^2"), 1)), P("2*(1+lambda)/mu")));
}

TEST(LieDerivative, C2Field) {
    VectorField V(P("-2*x + 2*z*y + 2*z^2 + b0"), P("-x - y + z^2"), y);
    SymTensor2 L = lie_derivative(WalkerMetric(P("-4*z"), 1), V);
    EXPECT_TRUE(L(2, 3).is_zero());
}

TEST(Laplacian, HodgeExample) {
    Expr Y = opaque("Y", {Coord::X2});
    Expr F = Y * exp(x + z);
    for (int s : {1, -1}) {
        Expr lap = laplacian(WalkerMetric(P("y*z*exp(-x)"), s), F);
        EXPECT_TRUE(SameExpr(lap, integer(s) * diff(Y, Coord::X2, 2) * exp(x + z) + 2 * Y * exp(x + z)));
    }
}

TEST(Divergence, Examples) {
    WalkerMetric w(generic_f(), 1);
    EXPECT_TRUE(divergence(w, VectorField(z, 0, 0)).is_zero());
    EXPECT_EQ(divergence(w, VectorField(x, y, z)), integer(3));
    EXPECT_TRUE(divergence(w, VectorField(P("-y^3"), 0, x)).is_zero());
}

TEST(Gradient, Components) {
    Expr f = generic_f(), F = generic_F();
    for (int s : {1, -1}) {
        VectorField g = gradient(WalkerMetric(f, s), F);
        EXPECT_TRUE(SameExpr(g(1), -f * d(F, 1) + d(F, 3)));
        EXPECT_TRUE(SameExpr(g(2), integer(s) * d(F, 2)));
        EXPECT_TRUE(SameExpr(g(3), d(F, 1)));
    }
}

class GeometryProperty : public ::testing::TestWithParam<int> {
protected:
    RandomExpr gen{9000 + static_cast<std::uint64_t>(GetParam())};
    int sign() { return gen.flip() ? 1 : -1; }
};

TEST_P(GeometryProperty, MetricCompatibility) {
    WalkerMetric w(gen.metric_function(), sign());
    SymTensor2 g = w.metric();
    Christoffel G = christoffel(w);
    for (int k = 1; k <= 3; ++k)
        for (auto [i, j] : SymTensor2::kPairs) {
            Expr e = d(g(i, j), k);
            for (int l = 1; l <= 3; ++l) e = e - G(l, k, i) * g(l, j) - G(l, k, j) * g(i, l);
            EXPECT_TRUE(SimplifiesToZero(e)) << "nabla_" << k << " g_" << i << j;
        }
}

TEST_P(GeometryProperty, ParallelNullLineField) {
    WalkerMetric w(gen.smooth(), sign());
    Christoffel G = christoffel(w);
    for (int j = 1; j <= 3; ++j)
        for (int k = 2; k <= 3; ++k) EXPECT_TRUE(G(k, j, 1).is_zero()) << "Gamma^" << k << "_" << j << "1";
    EXPECT_TRUE(w.metric()(1, 1).is_zero());
}

TEST_P(GeometryProperty, RicciMatchesClosedForm) {
    Expr f = GetParam() % 2 ? gen.metric_function() : gen.smooth();
    int s = sign();
    expect_tensor_eq(ricci(WalkerMetric(f, s)), closed_ricci(f, integer(s)));
    expect_christoffel_closed(f, integer(s));
}

TEST_P(GeometryProperty, ScalarCurvatureIsFullContraction) {
    Expr f = gen.smooth();
    WalkerMetric w(f, sign());
    SymTensor2 r = ricci(w), h = w.inverse();
    Expr s = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) s = s + h(i, j) * r(i, j);
    EXPECT_TRUE(SameExpr(scalar_curvature(w), s));
    EXPECT_TRUE(SameExpr(s, d(f, 1, 1)));
}

TEST_P(GeometryProperty, TraceOfHessianIsLaplacian) {
    WalkerMetric w(gen.metric_function(), sign());
    Expr F = gen.smooth();
    EXPECT_TRUE(SameExpr(trace(w, hessian(w, F)), laplacian(w, F)));
}

TEST_P(GeometryProperty, LieDerivativeOfGradientIsTwiceHessian) {
    WalkerMetric w(gen.smooth(), sign());
    Expr F = gen.smooth();
    SymTensor2 diffs = lie_derivative(w, gradient(w, F)) - integer(2) * hessian(w, F);
    EXPECT_TRUE(diffs.simplified().is_zero());
}

INSTANTIATE_TEST_SUITE_P(Seeded, GeometryProperty, ::testing::Range(0, testing::kPropertyInstances));

}  // namespace
}  // namespace walker
