/*
 * dualspace.hpp
 * Independent multiplicity oracle: dimension of the dual space of a
 * zero-dimensional ideal at a rational zero, by Macaulay-matrix nullity
 * stabilization with exact fraction-free rank computation.
 */
#ifndef TRICHAIN_DUALSPACE_HPP
#define TRICHAIN_DUALSPACE_HPP

#include <stdexcept>
#include <vector>

#include "trichain/mpoly.hpp"

namespace trichain {

struct DualSpaceCapError : std::runtime_error {
    int last_nullity;
    DualSpaceCapError(const std::string& msg, int nullity)
        : std::runtime_error(msg), last_nullity(nullity) {}
};

/// dim D_a(<gens>): grows the truncation order until the nullity of the
/// Macaulay matrix stabilizes. a must be a common zero (else domain error);
/// non-stabilization within `cap` raises DualSpaceCapError carrying the
/// last nullity (non-zero-dimensional input, or cap too small).
int dual_space_dim(const std::vector<MPoly>& gens, const std::vector<Rational>& a, int cap = 64);

} // namespace trichain

#endif
