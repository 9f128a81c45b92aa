#include "walker/soliton/soliton.hpp"

#include "walker/symcore/simplify.hpp"

namespace walker {
namespace {

SymTensor2 soliton_rhs(const WalkerMetric& w, const Expr& scal, const Params& p) {
    Expr factor = integer(-2) * p.lambda + p.mu * scal;
    return factor * w.metric();
}

}  // namespace

const char* to_string(SolitonKind kind) {
    switch (kind) {
        case SolitonKind::Expanding: return "expanding";
        case SolitonKind::Steady: return "steady";
        case SolitonKind::Shrinking: return "shrinking";
    }
    return "?";
}

SolitonKind classify(const Rational& lambda) {
    int s = sgn(lambda);
    if (s < 0) return SolitonKind::Expanding;
    if (s == 0) return SolitonKind::Steady;
    return SolitonKind::Shrinking;
}

SymTensor2 ry_residual(const WalkerMetric& w, const VectorField& v, const Params& p) {
    SymTensor2 ric = ricci(w);
    Expr scal = trace(w, ric);
    SymTensor2 lhs = (integer(2) * p.beta) * ric + lie_derivative(w, v);
    return (lhs - soliton_rhs(w, scal, p)).simplified();
}

SymTensor2 gradient_ry_residual(const WalkerMetric& w, const Expr& F, const Params& p) {
    SymTensor2 ric = ricci(w);
    Expr scal = trace(w, ric);
    SymTensor2 lhs = (integer(2) * p.beta) * ric + integer(2) * hessian(w, F);
    return (lhs - soliton_rhs(w, scal, p)).simplified();
}

SymTensor2 system_view(const SymTensor2& residual) {
    return (rational(Rational(1, 2)) * residual).simplified();
}

Expr trace_condition_residual(const WalkerMetric& w, const Expr& F, const Params& p) {
    Expr scal = scalar_curvature(w);
    Expr coef = -p.beta + rational(Rational(1, 2)) * p.mu;
    return simplify(laplacian(w, F) - integer(3) * (-p.lambda + coef * scal));
}

Expr trace_identity_residual(const WalkerMetric& w, const Expr& F, const Params& p) {
    Expr scal = scalar_curvature(w);
    Expr coef = rational(Rational(3, 2)) * p.mu - p.beta;
    return simplify(laplacian(w, F) + integer(3) * p.lambda - coef * scal);
}

HodgeReport hodge_soliton_check(const WalkerMetric& w, const VectorField& y, const Expr& F, const Params& p) {
    return HodgeReport{divergence(w, y), trace_condition_residual(w, F, p)};
}

}  // namespace walker
