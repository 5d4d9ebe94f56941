/*
 * isolate.hpp
 * Real root isolation for zero-dimensional simple sets and real solution
 * isolation with multiplicity.
 *
 * Each simple branch of the decomposition is isolated directly by
 * triangular lifting (exact substitution over degenerate coordinates,
 * rational interval arithmetic with ancestor refinement otherwise), and
 * boxes are refined until pairwise disjoint across branches.
 */
#ifndef TRICHAIN_ISOLATE_HPP
#define TRICHAIN_ISOLATE_HPP

#include <vector>

#include "trichain/chains.hpp"
#include "trichain/interval.hpp"
#include "trichain/reg2sim.hpp"

namespace trichain {

struct IsolatedZero {
    BoxQ box;
    long long multiplicity;
    size_t branch_index;  // into the Decomposition
};

struct IsolateOptions {
    int depth_cap = 256;   // bisections per coordinate; env TRICHAIN_DEPTH_CAP via CLI
    Rational width = 0;    // > 0: refine every interval at least this narrow
    int threads = 1;       // parallel per-branch isolation; outputs unchanged
};

/// Isolating intervals for a squarefree univariate polynomial: disjoint,
/// one real root each, jointly complete; rational roots come out as
/// degenerate intervals. Non-squarefree input -> domain error.
std::vector<IntervalQ> uni_isolate(const MPoly& F);

/// Disjoint boxes, one per real zero of the simple chain B.
std::vector<BoxQ> isolate_simple_set(const TriangularSet& B, const IsolateOptions& opt = {});

/// Shrink every interval of an isolating box below `width` (<= 0: domain
/// error), preserving which zero it isolates.
BoxQ refine_box(const TriangularSet& B, const BoxQ& box, const Rational& width,
                const IsolateOptions& opt = {});

/// Real solution isolation with multiplicity: one IsolatedZero per real
/// zero of T, boxes pairwise disjoint across all branches, multiplicity
/// read from the owning branch's array.
std::vector<IsolatedZero> iso_mult(const ZeroDimChain& T, const IsolateOptions& opt = {});

} // namespace trichain

#endif
