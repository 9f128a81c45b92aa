#include "walker/geometry/tensor.hpp"

#include <stdexcept>

#include "walker/symcore/simplify.hpp"

namespace walker {

int SymTensor2::slot(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw std::out_of_range("tensor index must be 1, 2 or 3");
    if (i > j) std::swap(i, j);
    static constexpr int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return table[i - 1][j - 1];
}

std::string SymTensor2::label(int s) {
    auto [i, j] = kPairs.at(s);
    return std::to_string(i) + std::to_string(j);
}

SymTensor2 SymTensor2::simplified() const {
    SymTensor2 out;
    for (int s = 0; s < 6; ++s) out.c_[s] = simplify(c_[s]);
    return out;
}

bool SymTensor2::is_zero() const {
    for (const auto& e : c_)
        if (!e.is_zero()) return false;
    return true;
}

SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b) {
    SymTensor2 out;
    for (int s = 0; s < 6; ++s) out.c_[s] = a.c_[s] + b.c_[s];
    return out;
}

SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b) {
    SymTensor2 out;
    for (int s = 0; s < 6; ++s) out.c_[s] = a.c_[s] - b.c_[s];
    return out;
}

SymTensor2 operator*(const Expr& k, const SymTensor2& t) {
    SymTensor2 out;
    for (int s = 0; s < 6; ++s) out.c_[s] = k * t.c_[s];
    return out;
}

VectorField VectorField::simplified() const {
    return VectorField(simplify(v_[0]), simplify(v_[1]), simplify(v_[2]));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    return VectorField(a(1) + b(1), a(2) + b(2), a(3) + b(3));
}

}  // namespace walker
