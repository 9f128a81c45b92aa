#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "walker/geometry/tensor.hpp"
#include "walker/symcore/eval.hpp"
#include "walker/symcore/expr.hpp"

namespace walker {

struct SamplingPolicy {
    int count = 64;
    double lo = -2.0;
    double hi = 2.0;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    // Parameters kept symbolic: a residual that is not structurally zero and still
    // mentions one of these (and is not bound) yields Conditional instead of sampling.
    std::set<std::string> conditional_symbols;

    static constexpr double kParamLo = -2.0;
    static constexpr double kParamHi = 2.0;
    static constexpr double kMinDenominator = 1e-6;
    static constexpr int kAttemptFactor = 100;
};

struct Witness {
    Point point{};
    std::map<std::string, double> params;
    std::map<std::string, Expr> functions;
};

struct Verdict {
    enum class Kind { ProvedZero, NumericallyZero, NonZero, Conditional };
    Kind kind = Kind::ProvedZero;
    int samples = 0;        // NumericallyZero
    double max_abs = 0;     // NumericallyZero
    double value = 0;       // NonZero
    Witness witness;        // NonZero
    Expr residual;          // Conditional (and the simplified input for every kind)

    bool is_zero() const { return kind == Kind::ProvedZero || kind == Kind::NumericallyZero; }
};

const char* to_string(Verdict::Kind k);

// Stage 1: simplify, structural zero proves it. Stage 2: seeded sampling with rejection of
// singular points. `stream` selects an independent random stream (component index).
Verdict is_zero(const Expr& e, const SamplingPolicy& policy = {}, const std::map<std::string, double>& params = {},
                std::uint64_t stream = 0);

// Stage 2 only, on an already simplified expression (used to spot-check ProvedZero results).
Verdict sample_zero(const Expr& simplified, const SamplingPolicy& policy,
                    const std::map<std::string, double>& params = {}, std::uint64_t stream = 0);

std::array<Verdict, 6> verify_tensor(const SymTensor2& t, const SamplingPolicy& policy = {},
                                     const std::map<std::string, double>& params = {});

// |d/dv e - central difference| at the point, with step 1e-5.
double finite_diff_check(const Expr& e, Coord v, const Point& point, const std::map<std::string, double>& params = {},
                         const std::map<std::string, Expr>& functions = {});

// Re-evaluates a NonZero witness.
double evaluate_witness(const Expr& e, const Witness& w);

}  // namespace walker
