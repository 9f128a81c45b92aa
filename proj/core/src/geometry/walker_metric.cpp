#include "walker/geometry/walker_metric.hpp"

#include "walker/symcore/params.hpp"
#include "walker/symcore/simplify.hpp"

namespace walker {

WalkerMetric::WalkerMetric(Expr f, Expr epsilon) : f_(std::move(f)), eps_(std::move(epsilon)) {
    validate_epsilon(eps_);
}

WalkerMetric::WalkerMetric(Expr f, int epsilon) : WalkerMetric(std::move(f), integer(epsilon)) {}

SymTensor2 WalkerMetric::metric() const {
    SymTensor2 g;
    g(1, 3) = integer(1);
    g(2, 2) = eps_;
    g(3, 3) = f_;
    return g;
}

SymTensor2 WalkerMetric::inverse() const {
    SymTensor2 h;
    h(1, 1) = simplify(-f_);
    h(1, 3) = integer(1);
    h(2, 2) = eps_;  // 1/eps = eps
    return h;
}

std::pair<SymTensor2, SymTensor2> metric_components(const WalkerMetric& w) {
    return {w.metric(), w.inverse()};
}

Expr det(const SymTensor2& t) {
    auto m = [&](int i, int j) { return t(i, j); };
    return simplify(m(1, 1) * (m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2)) -
                    m(1, 2) * (m(2, 1) * m(3, 3) - m(2, 3) * m(3, 1)) +
                    m(1, 3) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1)));
}

Expr trace(const WalkerMetric& w, const SymTensor2& t) {
    SymTensor2 h = w.inverse();
    std::vector<Expr> terms;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) terms.push_back(h(i, j) * t(i, j));
    return simplify(make_sum(std::move(terms)));
}

}  // namespace walker
