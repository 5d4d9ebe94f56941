#include "trichain/interval.hpp"

#include <algorithm>

namespace trichain {

IntervalQ iv_add(const IntervalQ& a, const IntervalQ& b) { return {a.lo + b.lo, a.hi + b.hi}; }

IntervalQ iv_neg(const IntervalQ& a) { return {-a.hi, -a.lo}; }

IntervalQ iv_mul(const IntervalQ& a, const IntervalQ& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

IntervalQ eval_interval(const MPoly& F, const std::vector<IntervalQ>& box) {
    if (F.is_constant()) return {F.constant_value(), F.constant_value()};
    if (static_cast<size_t>(F.top_var()) >= box.size())
        throw std::domain_error("eval_interval: box does not cover all variables");
    const IntervalQ& x = box[static_cast<size_t>(F.top_var())];
    IntervalQ acc = eval_interval(F.coeffs().back(), box);
    for (int k = F.main_degree() - 1; k >= 0; --k)
        acc = iv_add(iv_mul(acc, x), eval_interval(F.coeffs()[static_cast<size_t>(k)], box));
    return acc;
}

} // namespace trichain
