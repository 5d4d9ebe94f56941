/*
 * uniroot.hpp (internal)
 * Univariate kernel over Q: dense coefficient vectors, exact Euclidean
 * gcd, Descartes/bisection isolation with complete rational-root
 * extraction (denominator-lattice snapping).
 */
#ifndef TRICHAIN_UNIROOT_HPP
#define TRICHAIN_UNIROOT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "trichain/interval.hpp"
#include "trichain/mpoly.hpp"

namespace trichain::detail {

using QVec = std::vector<Rational>;  // dense, low -> high, trimmed

QVec to_uvec(const MPoly& F);                 // requires F univariate or constant
MPoly from_uvec(int var, const QVec& c);
QVec utrim(QVec c);
int udeg(const QVec& c);                      // -1 for the zero polynomial
Rational ueval(const QVec& c, const Rational& x);
int usign(const QVec& c, const Rational& x);
QVec uderiv(const QVec& c);
/// Integer-primitive with positive leading coefficient.
QVec uprim(const QVec& c);
/// Remainder of a by b over Q (field coefficients), b != 0.
QVec urem(const QVec& a, const QVec& b);
/// Exact quotient; throws std::logic_error if the division is inexact.
QVec udiv_exact(const QVec& a, const QVec& b);
/// Primitive positive gcd via Euclid over Q.
QVec ugcd(QVec a, QVec b);
bool usquarefree(const QVec& c);
QVec usqfree_part(const QVec& c);

/// Isolation of a squarefree polynomial: disjoint intervals with nonzero
/// opposite-sign endpoints, one real root each, rational roots snapped to
/// degenerate intervals (complete: a root p/q has q | lc, and an interval
/// narrower than 1/lc holds at most one candidate of the lattice (1/lc)Z).
std::vector<IntervalQ> isolate_squarefree_upoly(const QVec& p);

/// Shrink an isolating interval below `width`, preserving the sign-change
/// certificate; collapses to degenerate if a bisection point is a root.
void refine_root_interval(const QVec& p, IntervalQ& iv, const Rational& width);

/// All rational roots of any nonzero polynomial (via its squarefree part).
std::vector<Rational> rational_roots(const QVec& p);

/// Split a univariate non-constant F into (product of rational-root linear
/// factors with multiplicity) x (rational-root-free cofactor), both
/// primitive-normalized. nullopt when either part is trivial.
std::optional<std::pair<MPoly, MPoly>> rational_block_split(const MPoly& F);

} // namespace trichain::detail

#endif

namespace trichain::detail {
/// Quotient of a by b over Q (field coefficients).
QVec uquo(const QVec& a, const QVec& b);
/// Half-extended gcd: (g, u) with u*a = g modulo b, g = gcd(a, b).
std::pair<QVec, QVec> uhalfxgcd(const QVec& a, const QVec& b);
}
