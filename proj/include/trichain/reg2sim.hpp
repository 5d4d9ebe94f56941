/*
 * reg2sim.hpp
 * Decomposition of a zero-dimensional regular chain into simple sets with
 * multiplicity arrays, and the multiplicity query at a given zero.
 */
#ifndef TRICHAIN_REG2SIM_HPP
#define TRICHAIN_REG2SIM_HPP

#include <memory>
#include <vector>

#include "trichain/chains.hpp"

namespace trichain {

using MultiplicityArray = std::vector<int>;  // one exponent per chain variable, all >= 1

struct SimpleBranch {
    TriangularSet chain;       // simple set [B1,...,Br]
    MultiplicityArray array;   // [p1,...,pr]

    long long product() const {
        long long m = 1;
        for (int p : array) m *= p;
        return m;
    }
};

struct Decomposition {
    std::vector<SimpleBranch> branches;  // sorted by normalized chain text
    TriangularSet source;
};

/// Algorithm: process the chain bottom-up, pseudo-squarefree-decomposing
/// each polynomial modulo the simple prefix built so far; every component
/// becomes a branch with its exponent appended to the array.
/// The CRT identity sum_branches prod p_i*deg(B_i) = prod deg(T_i) is
/// verified internally.
Decomposition reg2sim(const ZeroDimChain& T);

/// Memoized variant (thread-safe); repeated multiplicity queries against
/// the same chain do not re-decompose.
std::shared_ptr<const Decomposition> reg2sim_cached(const ZeroDimChain& T);

/// Local multiplicity of the zero a of T: finds the unique branch whose
/// chain vanishes at a and returns the product of its array.
/// a not a zero of T -> domain error; zero or multiple matching branches
/// -> logic error (internal invariant violation).
long long reg_mult(const ZeroDimChain& T, const std::vector<GaussianRational>& a);

/// The matching branch index alongside the multiplicity.
std::pair<size_t, long long> reg_mult_branch(const ZeroDimChain& T,
                                             const std::vector<GaussianRational>& a);

} // namespace trichain

#endif
