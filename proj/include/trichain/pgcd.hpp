/*
 * pgcd.hpp
 * Pseudo GCD of a polynomial set modulo a zero-dimensional regular chain,
 * with chain splitting. Realized as a Euclidean remainder descent in z,
 * regularizing every leading coefficient before it is used as a divisor.
 */
#ifndef TRICHAIN_PGCD_HPP
#define TRICHAIN_PGCD_HPP

#include <vector>

#include "trichain/chains.hpp"

namespace trichain {

struct PgcdBranch {
    /// gcd on this branch: 0, the constant 1 (unit gcd), or primitive-
    /// normalized with deg(G, z) >= 1 and leading coefficient invertible
    /// modulo `chain`.
    MPoly G;
    TriangularSet chain;

    // Cofactor data, filled only when PgcdOptions::track_cofactors is set:
    // reduce(raw - sum cofactors[j]*F_j, chain) = 0, with raw the gcd value
    // before unitization (raw = G except on unit branches).
    MPoly raw;
    std::vector<MPoly> cofactors;
};

struct PgcdOptions {
    bool track_cofactors = false;
};

/// Branch-wise gcd of F_set modulo T in variable z. T may be empty
/// (ordinary gcd over Q). z must lie above all chain variables and all
/// F must live in K[x][z]. Empty F_set -> domain error. Branches where
/// every F vanishes identically carry G = 0.
std::vector<PgcdBranch> pgcd(const std::vector<MPoly>& F_set, const TriangularSet& T, int z,
                             const PgcdOptions& opt = {});

} // namespace trichain

#endif
