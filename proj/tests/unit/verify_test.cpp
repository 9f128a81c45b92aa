#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>

#include "support.hpp"
#include "walker/errors.hpp"
#include "walker/families/catalog.hpp"
#include "walker/geometry/walker_metric.hpp"
#include "walker/soliton/soliton.hpp"
#include "walker/verify/report.hpp"
#include "walker/verify/reproduce.hpp"
#include "walker/verify/zero_test.hpp"

namespace walker {
namespace {

using testing::P;
using testing::RandomExpr;
using Kind = Verdict::Kind;

const Expr x = var(Coord::X1), y = var(Coord::X2), z = var(Coord::X3);

TEST(IsZero, SignSymbol) { EXPECT_EQ(is_zero(sign_param() * sign_param() - 1).kind, Kind::ProvedZero); }

TEST(IsZero, ExampleE1Residual) {
    SymTensor2 r = ry_residual(WalkerMetric(x * x, 1), VectorField(0, y, 0), Params(1, 1, 2, 1));
    for (const Verdict& v : verify_tensor(r)) EXPECT_EQ(v.kind, Kind::ProvedZero);
}

TEST(IsZero, StatedConstraintAtMismatchedConstants) {
    // Oracle: plain arithmetic at (beta, lambda, mu, eps) = (1, 1, 1, 1).
    const double beta = 1, lambda = 1, mu = 1, eps = 1;
    const double oracle = 2 * beta * (1 + lambda) / mu + 1 - 2 * beta / mu - 2 / eps;
    ASSERT_DOUBLE_EQ(oracle, 1.0);
    Bindings at;
    at.params = {{"beta", 1}, {"lambda", 1}, {"mu", 1}, {"eps", 1}};
    Expr e = substitute(P("2*beta*(1+lambda)/mu + 1 - 2*beta/mu - 2/eps"), at);
    Verdict v = is_zero(e);
    ASSERT_EQ(v.kind, Kind::NonZero);
    EXPECT_DOUBLE_EQ(v.value, oracle);
    Verdict bound = is_zero(P("2*beta*(1+lambda)/mu + 1 - 2*beta/mu - 2/eps"), {},
                            {{"beta", 1}, {"lambda", 1}, {"mu", 1}, {"eps", 1}});
    ASSERT_EQ(bound.kind, Kind::NonZero);
    EXPECT_DOUBLE_EQ(bound.value, oracle);
}

TEST(IsZero, NumericFallback) {
    Verdict v = is_zero(sin(2 * x) - 2 * sin(x) * cos(x));
    ASSERT_EQ(v.kind, Kind::NumericallyZero);
    EXPECT_EQ(v.samples, 64);
    EXPECT_LE(v.max_abs, 1e-9);
}

TEST(IsZero, NonZeroWitnessReplays) {
    SamplingPolicy policy;
    Expr e = P("x*y - k*z + sin(h(y))");
    Verdict v = is_zero(e, policy);
    ASSERT_EQ(v.kind, Kind::NonZero);
    EXPECT_GT(std::fabs(v.value), policy.tol);
    EXPECT_EQ(evaluate_witness(v.residual, v.witness), v.value);
    EXPECT_TRUE(v.witness.params.count("k"));
    EXPECT_TRUE(v.witness.functions.count("h"));
}

TEST(IsZero, ConditionalOnDeclaredSymbols) {
    SamplingPolicy policy;
    policy.conditional_symbols = {"beta"};
    Verdict v = is_zero(P("(mu - 2*beta)*x"), policy);
    ASSERT_EQ(v.kind, Kind::Conditional);
    EXPECT_TRUE(contains_param(v.residual, "beta"));
    EXPECT_EQ(is_zero(P("(mu - 2*beta)*x"), policy, {{"beta", 1.0}}).kind, Kind::NonZero);
    EXPECT_EQ(is_zero(P("beta - beta"), policy).kind, Kind::ProvedZero);
}

TEST(IsZero, SingularPointsAreRejected) {
    // Pole on the plane a1 z + a2 = 0 does not disturb the verdict.
    Expr e = P("(a1*z + a2)^(-1) * (a1*z + a2) * sin(x) - sin(x)");
    EXPECT_EQ(is_zero(e).kind, Kind::ProvedZero);
    Expr numeric = P("sin(2*x)*(a1*z + a2)^(-1) - 2*sin(x)*cos(x)*(a1*z+a2)^(-1)");
    EXPECT_TRUE(is_zero(numeric).is_zero());
}

TEST(IsZero, SamplingExhausted) {
    EXPECT_THROW(is_zero(sqrt(-(x * x) - 1) + x), SamplingExhausted);
}

TEST(IsZero, Determinism) {
    Expr e = P("x*exp(y) - q*z");
    Verdict a = is_zero(e), b = is_zero(e);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness.point, b.witness.point);
    EXPECT_EQ(a.witness.params, b.witness.params);
    SamplingPolicy other;
    other.seed = 7;
    EXPECT_NE(is_zero(e, other).witness.point, a.witness.point);
    EXPECT_NE(is_zero(e, {}, {}, 3).witness.point, a.witness.point);
}

TEST(VerifyTensor, Examples) {
    for (const Verdict& v : verify_tensor(SymTensor2({0, 0, 0, 0, 0, 0}))) EXPECT_EQ(v.kind, Kind::ProvedZero);
    VectorField V(P("-2*x + 2*z*y + 2*z^2 + b0"), P("-x - y + z^2"), y);
    SymTensor2 c2 = ry_residual(WalkerMetric(P("-4*z"), 1), V, Params(param("beta"), 1, 0, integer(1)));
    for (const Verdict& v : verify_tensor(c2)) EXPECT_EQ(v.kind, Kind::ProvedZero);
    Expr F = P("(alpha*y - z)*x - (1/2)*y^2 - (C/2)*exp(-2*z)");
    SymTensor2 fin = gradient_ry_residual(WalkerMetric(P("2*C*exp(-2*z)"), 1), F, Params(param("beta"), 1, param("mu"), integer(1)));
    auto verdicts = verify_tensor(fin);
    EXPECT_EQ(verdicts[SymTensor2::slot(3, 3)].kind, Kind::NonZero);
    EXPECT_EQ(verdicts[SymTensor2::slot(1, 3)].kind, Kind::ProvedZero);
    EXPECT_EQ(verdicts[SymTensor2::slot(2, 2)].kind, Kind::ProvedZero);
    const Witness& w = verdicts[SymTensor2::slot(3, 3)].witness;
    EXPECT_NE(w.params.at("C"), 0.0);
    EXPECT_NE(w.params.at("alpha"), 0.0);
}

TEST(FiniteDiff, Examples) {
    EXPECT_LE(finite_diff_check(x * x, Coord::X1, {3, 0, 0}), 1e-9);
    EXPECT_LE(finite_diff_check(P("y*z*exp(-x)"), Coord::X1, {1, 1, 1}), 1e-6);
    EXPECT_THROW(finite_diff_check(make_power(x, -1), Coord::X1, {0, 0, 0}), DomainError);
}

class VerifyProperty : public ::testing::TestWithParam<int> {};

// Every tenth seed also re-checks a ProvedZero verdict numerically on the unsimplified tree.
TEST_P(VerifyProperty, ProvedZeroAgreesWithSampling) {
    RandomExpr g(15000 + GetParam());
    Expr a = g.smooth(), b = g.smooth();
    Expr raw = diff(a * b, Coord::X2) - a * diff(b, Coord::X2) - b * diff(a, Coord::X2);
    EXPECT_EQ(is_zero(raw).kind, Kind::ProvedZero);
    if (GetParam() % 10 == 0) {
        SamplingPolicy policy;
        policy.lo = -1;
        policy.hi = 1;
        policy.tol = 1e-8;
        EXPECT_EQ(sample_zero(raw, policy).kind, Kind::NumericallyZero);
    }
}

TEST_P(VerifyProperty, NonZeroPolynomialsAreCaught) {
    RandomExpr g(16000 + GetParam());
    Expr p = g.polynomial(4, 3) + 1;
    Verdict v = is_zero(p);
    ASSERT_EQ(v.kind, Kind::NonZero);
    EXPECT_EQ(evaluate_witness(v.residual, v.witness), v.value);
}

INSTANTIATE_TEST_SUITE_P(Seeded, VerifyProperty, ::testing::Range(0, testing::kPropertyInstances));

TEST(Report, Combine) {
    EXPECT_EQ(combine({Overall::Pass, Overall::Pass}), Overall::Pass);
    EXPECT_EQ(combine({Overall::Pass, Overall::Conditional}), Overall::Conditional);
    EXPECT_EQ(combine({Overall::Conditional, Overall::Fail}), Overall::Fail);
    EXPECT_EQ(combine({}), Overall::Pass);
}

TEST(Report, JsonShapeAndStability) {
    const Scenario& s = lookup("ex-E1").built.scenario;
    VerificationReport r = run_scenario(s);
    EXPECT_EQ(r.overall, Overall::Pass);
    std::string a = report_to_json(r), b = report_to_json(run_scenario(s));
    EXPECT_EQ(a, b);
    auto doc = nlohmann::json::parse(a);
    EXPECT_EQ(doc["name"], "ex-E1");
    EXPECT_EQ(doc["checks"]["ry"]["overall"], "pass");
    EXPECT_EQ(doc["checks"]["ry"]["components"].size(), 6u);
    EXPECT_EQ(doc["checks"]["ry"]["components"]["33"]["kind"], "ProvedZero");
    EXPECT_EQ(doc["sampling"]["seed"], 42);
    EXPECT_EQ(doc["sampling"]["count"], 64);
    EXPECT_TRUE(doc.contains("version"));
}

TEST(Report, TextNamesEveryCheck) {
    VerificationReport r = run_scenario(lookup("ex-thm1-plus").built.scenario);
    std::string text = report_to_text(r, false);
    EXPECT_NE(text.find("trace"), std::string::npos);
    EXPECT_NE(text.find("divergence"), std::string::npos);
    EXPECT_EQ(text.find("\x1b["), std::string::npos);
    EXPECT_NE(report_to_text(r, true).find("\x1b["), std::string::npos);
}

TEST(Report, ConditionalWhenFreeConstantSurvives) {
    Scenario s = lookup("ex-E1").built.scenario;
    s.beta.reset();
    s.checks = {Check::Ry};
    VerificationReport r = run_scenario(s);
    EXPECT_EQ(r.overall, Overall::Conditional);
}

TEST(Reproduce, AllEntriesMatch) {
    std::vector<ReproduceResult> results;
    for (const auto& e : catalog()) {
        results.push_back(reproduce(e));
        EXPECT_TRUE(results.back().matched) << e.name;
    }
    std::string json = reproduce_to_json(results);
    auto doc = nlohmann::json::parse(json);
    EXPECT_EQ(doc["matched"], "8/8");
    EXPECT_NE(reproduce_to_text(results, false).find("8/8 expected verdicts matched"), std::string::npos);
}

TEST(Reproduce, FinDiagnosticIsReportedNotGated) {
    ReproduceResult r = reproduce(lookup("ex-fin"));
    EXPECT_TRUE(r.matched);
    for (const auto& id : r.identities) EXPECT_EQ(id.verdict.kind, Kind::ProvedZero) << id.label;
    bool saw33 = false;
    for (const auto& d : r.diagnostics)
        if (d.label == "33") {
            saw33 = true;
            EXPECT_EQ(d.verdict.kind, Kind::NonZero);
        }
    EXPECT_TRUE(saw33);
}

TEST(Reproduce, MismatchIsDetected) {
    CatalogEntry e = lookup("ex-E1");
    e.expect_pass = false;
    EXPECT_FALSE(reproduce(e).matched);
    CatalogEntry f = lookup("ex-fin");
    f.identities.push_back({"bogus", x, true});
    EXPECT_FALSE(reproduce(f).matched);
}

}  // namespace
}  // namespace walker
