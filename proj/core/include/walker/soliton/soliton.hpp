#pragma once

#include "walker/geometry/tensor.hpp"
#include "walker/geometry/walker_metric.hpp"
#include "walker/symcore/params.hpp"

namespace walker {

enum class SolitonKind { Expanding, Steady, Shrinking };

const char* to_string(SolitonKind kind);

// lambda < 0 expanding, lambda = 0 steady, lambda > 0 shrinking.
SolitonKind classify(const Rational& lambda);

// 2 beta Ric + L_V g - (-2 lambda + mu Scal) g, componentwise simplified.
SymTensor2 ry_residual(const WalkerMetric& w, const VectorField& v, const Params& p);

// 2 beta Ric + 2 Hess(F) - (-2 lambda + mu Scal) g, componentwise simplified.
SymTensor2 gradient_ry_residual(const WalkerMetric& w, const Expr& F, const Params& p);

// The residual divided by 2, the normalization used by the component systems of the families.
SymTensor2 system_view(const SymTensor2& residual);

// Lap(F) - 3(-lambda + (-beta + mu/2) Scal), the scalar certificate for V = Y + grad F.
Expr trace_condition_residual(const WalkerMetric& w, const Expr& F, const Params& p);

// Half the metric trace of the gradient residual: Lap(F) + 3 lambda - (3 mu / 2 - beta) Scal.
Expr trace_identity_residual(const WalkerMetric& w, const Expr& F, const Params& p);

struct HodgeReport {
    Expr divergence;
    Expr trace;
    bool certified() const { return divergence.is_zero() && trace.is_zero(); }
};

HodgeReport hodge_soliton_check(const WalkerMetric& w, const VectorField& y, const Expr& F, const Params& p);

}  // namespace walker
