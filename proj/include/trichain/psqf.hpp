/*
 * psqf.hpp
 * Pseudo squarefree decomposition of a polynomial modulo a regular chain.
 */
#ifndef TRICHAIN_PSQF_HPP
#define TRICHAIN_PSQF_HPP

#include <vector>

#include "trichain/chains.hpp"

namespace trichain {

struct SqfComponent {
    MPoly P;  // squarefree factor, primitive-normalized, deg(P, z) > 0
    int a;    // exponent, >= 1
};

struct PsqfBranch {
    std::vector<SqfComponent> components;  // strictly increasing exponents
    TriangularSet chain;
};

/// Branch-wise squarefree decomposition of F modulo T in variable z:
/// at every zero of a branch chain, the specialized components form the
/// squarefree decomposition of the specialized F up to a nonzero constant.
/// T may be empty (plain squarefree decomposition over Q).
/// deg(F, z) = 0 -> domain error.
std::vector<PsqfBranch> psqf(const MPoly& F, const TriangularSet& T, int z);

} // namespace trichain

#endif
