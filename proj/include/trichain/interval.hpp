/*
 * interval.hpp
 * Rational intervals and boxes. Intervals live only in the isolation layer;
 * the polynomial core stays exact-rational.
 */
#ifndef TRICHAIN_INTERVAL_HPP
#define TRICHAIN_INTERVAL_HPP

#include <vector>

#include "trichain/mpoly.hpp"

namespace trichain {

struct IntervalQ {
    Rational lo, hi;  // lo <= hi; [a,a] is an exact rational root

    IntervalQ() : lo(0), hi(0) {}
    IntervalQ(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    bool degenerate() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool intersects(const IntervalQ& o) const { return !(hi < o.lo || o.hi < lo); }

    bool operator==(const IntervalQ& o) const { return lo == o.lo && hi == o.hi; }
};

IntervalQ iv_add(const IntervalQ& a, const IntervalQ& b);
IntervalQ iv_mul(const IntervalQ& a, const IntervalQ& b);
IntervalQ iv_neg(const IntervalQ& a);

struct BoxQ {
    std::vector<IntervalQ> intervals;  // one per variable, ascending order

    bool operator==(const BoxQ& o) const { return intervals == o.intervals; }
};

/// Interval range evaluation of F over per-variable intervals.
IntervalQ eval_interval(const MPoly& F, const std::vector<IntervalQ>& box);

} // namespace trichain

#endif
