/*
 * chains.hpp
 * Triangular sets, zero-dimensional regular chains, reduction and the
 * regularize/split primitive (invertibility test with case splitting).
 *
 * Convention: a chain over variables 0..r-1 has lv(T_i) = i exactly
 * ("prefix-covering"); for a VarOrder of size n, zero-dimensional means
 * r = n. The empty chain (r = 0, base field Q) is allowed wherever noted.
 */
#ifndef TRICHAIN_CHAINS_HPP
#define TRICHAIN_CHAINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "trichain/mpoly.hpp"

namespace trichain {

class TriangularSet {
public:
    TriangularSet() = default;
    /// Validates: non-constant polynomials with strictly increasing leading variables.
    explicit TriangularSet(std::vector<MPoly> polys);

    size_t size() const { return polys_.size(); }
    bool empty() const { return polys_.empty(); }
    const MPoly& poly(size_t i) const { return polys_.at(i); }
    const std::vector<MPoly>& polys() const { return polys_; }

    /// lv(T_i) = i for all i.
    bool is_prefix_covering() const;
    TriangularSet prefix(size_t r) const;

    bool operator==(const TriangularSet& o) const { return polys_ == o.polys_; }

private:
    std::vector<MPoly> polys_;
};

/// Validated zero-dimensional regular chain over a full VarOrder.
class ZeroDimChain {
public:
    /// Throws std::domain_error with a diagnostic naming the offending
    /// initial when the set is not a zero-dimensional regular chain.
    static ZeroDimChain make(TriangularSet base, const VarOrder& order);

    const TriangularSet& set() const { return base_; }
    const VarOrder& order() const { return order_; }
    size_t size() const { return base_.size(); }

private:
    ZeroDimChain(TriangularSet base, VarOrder order)
        : base_(std::move(base)), order_(std::move(order)) {}
    TriangularSet base_;
    VarOrder order_;
};

enum class RegStatus { INVERTIBLE, ZERO };

struct SplitCase {
    TriangularSet chain;  // zero-dim regular by construction
    RegStatus status;
};

struct SplitOutcome {
    std::vector<SplitCase> cases;
};

/// Iterated pseudo-remainder through the chain, top variable downward.
/// reduce(F, T) = 0 implies F in sat(T); for regular chains the converse
/// holds as well.
MPoly reduce(const MPoly& F, const TriangularSet& T);
/// Same, also returning H with H*F = sum q_i*T_i + r (H a product of
/// initial powers, invertible modulo regular chains).
MPoly reduce_traced(const MPoly& F, const TriangularSet& T, MPoly& multiplier_out);

/// D5-style splitting: partitions the zeros of T into cases where p is
/// invertible (vanishes at no zero) or zero (vanishes at every zero).
/// Dimension counts of the cases sum to chain_dimension(T).
/// Pre: T prefix-covering regular; variables of p inside T's range.
SplitOutcome regularize(const MPoly& p, const TriangularSet& T);
SplitOutcome regularize(const MPoly& p, const ZeroDimChain& T);

/// True iff T covers all nvars variables (r = n) and every initial is
/// invertible modulo the chain below it.
bool is_regular_chain(const TriangularSet& T, size_t nvars);
/// Diagnostic variant; nullopt when regular.
std::optional<std::string> validate_regular_chain(const TriangularSet& T, const VarOrder& order);

/// Product of main degrees = dim_Q of Q[x]/<T>.
long long chain_dimension(const TriangularSet& T);

/// Monic-in-z representative of B modulo C (an associate by an invertible
/// factor), when computable without splitting: constant leading
/// coefficient, or a univariate one invertible modulo a univariate level-0
/// element. Keeps Euclidean descents free of initial-power coefficient
/// swell. nullopt when not cheaply available.
std::optional<MPoly> monic_rep(const MPoly& B, int z, const TriangularSet& C);

std::string to_string(const TriangularSet& T, const VarOrder& order);

} // namespace trichain

#endif
