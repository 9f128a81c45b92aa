#pragma once

#include <array>
#include <string>
#include <utility>

#include "walker/symcore/expr.hpp"

namespace walker {

// Symmetric (0,2) tensor on the chart, stored as t11 t12 t13 t22 t23 t33. Indices are 1-based.
class SymTensor2 {
public:
    static constexpr std::array<std::pair<int, int>, 6> kPairs{{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

    SymTensor2() = default;
    explicit SymTensor2(std::array<Expr, 6> components) : c_(std::move(components)) {}

    static int slot(int i, int j);
    static std::string label(int slot);  // "11", "12", ...

    const Expr& operator()(int i, int j) const { return c_[slot(i, j)]; }
    Expr& operator()(int i, int j) { return c_[slot(i, j)]; }
    const Expr& at_slot(int s) const { return c_.at(s); }
    Expr& at_slot(int s) { return c_.at(s); }
    const std::array<Expr, 6>& components() const { return c_; }

    SymTensor2 simplified() const;
    bool is_zero() const;  // every component is the literal 0

    friend SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b);
    friend SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b);
    friend SymTensor2 operator*(const Expr& s, const SymTensor2& t);

private:
    std::array<Expr, 6> c_{};
};

// V = V^1 d_1 + V^2 d_2 + V^3 d_3; indices are 1-based.
class VectorField {
public:
    VectorField() = default;
    VectorField(Expr v1, Expr v2, Expr v3) : v_{std::move(v1), std::move(v2), std::move(v3)} {}

    const Expr& operator()(int i) const { return v_.at(i - 1); }
    Expr& operator()(int i) { return v_.at(i - 1); }
    const std::array<Expr, 3>& components() const { return v_; }

    VectorField simplified() const;

    friend VectorField operator+(const VectorField& a, const VectorField& b);

private:
    std::array<Expr, 3> v_{};
};

}  // namespace walker
