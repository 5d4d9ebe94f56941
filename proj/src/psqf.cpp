#include "trichain/psqf.hpp"

#include <algorithm>

#include "trichain/pgcd.hpp"
#include "uniroot.hpp"

namespace trichain {

namespace {

int zdeg(const MPoly& f, int z) { return f.is_zero() ? -1 : f.degree_in(z); }

bool is_univariate_in(const MPoly& F, int& var) {
    if (F.is_constant()) return true;
    if (var == -1) var = F.top_var();
    if (F.top_var() != var) return false;
    for (const auto& c : F.coeffs())
        if (!c.is_constant()) return false;
    return true;
}

// Divide out a K[x]-content that is invertible modulo the chain. Detected
// cheaply: a single nonzero coefficient, or all coefficients univariate in
// one variable. Otherwise P is returned unchanged.
MPoly strip_invertible_content(const MPoly& P, const TriangularSet& chain, int z) {
    if (P.is_constant() || P.top_var() != z) return P;
    const auto& cs = P.coeffs();
    int nonzero = 0;
    for (const auto& c : cs)
        if (!c.is_zero()) ++nonzero;
    if (nonzero == 1) {
        // P = c * z^k: strip c when invertible, no division needed
        const MPoly& c = cs.back();
        if (c.is_constant()) return P;
        for (const auto& cas : regularize(c, chain).cases)
            if (cas.status == RegStatus::ZERO) return P;
        std::vector<MPoly> out(cs.size(), MPoly(0));
        out.back() = MPoly(1);
        return MPoly::from_coeffs(z, std::move(out));
    }
    int var = -1;
    for (const auto& c : cs)
        if (!is_univariate_in(c, var)) return P;
    if (var == -1) return P;
    detail::QVec g;
    for (const auto& c : cs)
        if (!c.is_zero()) g = detail::ugcd(g, detail::to_uvec(c));
    if (detail::udeg(g) <= 0) return P;
    MPoly candidate = detail::from_uvec(var, g);
    for (const auto& c : regularize(candidate, chain).cases)
        if (c.status == RegStatus::ZERO) return P;
    std::vector<MPoly> out;
    out.reserve(cs.size());
    for (const auto& c : cs) {
        if (c.is_zero())
            out.emplace_back(0);
        else
            out.push_back(detail::from_uvec(var, detail::udiv_exact(detail::to_uvec(c), g)));
    }
    return primitive_normalize(MPoly::from_coeffs(z, std::move(out)));
}

MPoly reduce_norm(const MPoly& F, const TriangularSet& C) {
    MPoly r = reduce(F, C);
    return r.is_zero() ? r : primitive_normalize(r);
}

// pseudo-quotient by a monic associate of G when one is available
MPoly pquo_nice(const MPoly& F, const MPoly& G, int z, const TriangularSet& C) {
    if (auto m = monic_rep(G, z, C)) return pseudo_divide(F, *m, z).quo;
    return pseudo_divide(F, G, z).quo;
}

// Rational-root block refinement of the level-1 (univariate) chain element:
// split into the product of rational-root linear factors and the
// rational-root-free cofactor when both are nontrivial.
std::vector<TriangularSet> refine_level1(const TriangularSet& T) {
    if (T.empty()) return {T};
    auto sp = detail::rational_block_split(T.poly(0));
    if (!sp) return {T};
    std::vector<TriangularSet> out;
    for (const MPoly& elem : {sp->first, sp->second}) {
        std::vector<MPoly> polys = {elem};
        for (size_t j = 1; j < T.size(); ++j) {
            TriangularSet below{std::vector<MPoly>(polys)};
            polys.push_back(reduce_norm(T.poly(j), below));
        }
        out.emplace_back(std::move(polys));
    }
    return out;
}

struct Node {
    MPoly B, C1;
    TriangularSet chain;
    std::vector<SqfComponent> comps;
    int d;
};

} // namespace

std::vector<PsqfBranch> psqf(const MPoly& F, const TriangularSet& T, int z) {
    if (F.degree_in(z) == 0)
        throw std::domain_error("psqf: polynomial must have positive degree in z");
    std::vector<PsqfBranch> result;
    MPoly dF = derivative(F, z);

    for (const TriangularSet& Tr : refine_level1(T)) {
        std::vector<Node> stack;
        for (const auto& br : pgcd({F, dF}, Tr, z)) {
            if (br.G.is_zero())
                throw std::domain_error("psqf: polynomial vanishes identically on a component");
            MPoly B1 = br.G.is_one() ? reduce_norm(F, br.chain)
                                     : reduce_norm(pquo_nice(F, br.G, z, br.chain), br.chain);
            if (B1.is_zero())
                throw std::domain_error("psqf: polynomial vanishes identically on a component");
            stack.push_back({std::move(B1), br.G, br.chain, {}, 1});
        }
        while (!stack.empty()) {
            Node n = std::move(stack.back());  // LIFO for determinism
            stack.pop_back();
            if (zdeg(n.B, z) > 0) {
                for (const auto& br : pgcd({n.B, n.C1}, n.chain, z)) {
                    const MPoly& B2 = br.G;
                    if (B2.is_zero()) throw std::logic_error("psqf: gcd vanished unexpectedly");
                    MPoly C1r = reduce_norm(n.C1, br.chain);
                    MPoly Br = reduce_norm(n.B, br.chain);
                    MPoly C2 = B2.is_one() || C1r.is_zero() || zdeg(C1r, z) < zdeg(B2, z)
                                   ? C1r
                                   : reduce_norm(pquo_nice(C1r, B2, z, br.chain), br.chain);
                    MPoly P = B2.is_one() ? Br
                                          : reduce_norm(pquo_nice(Br, B2, z, br.chain), br.chain);
                    auto comps = n.comps;
                    if (!P.is_zero() && P.degree_in(z) > 0)
                        comps.push_back({strip_invertible_content(P, br.chain, z), n.d});
                    stack.push_back({B2, std::move(C2), br.chain, std::move(comps), n.d + 1});
                }
            } else {
                std::sort(n.comps.begin(), n.comps.end(),
                          [](const SqfComponent& a, const SqfComponent& b) { return a.a < b.a; });
                result.push_back({std::move(n.comps), std::move(n.chain)});
            }
        }
    }

    std::sort(result.begin(), result.end(), [](const PsqfBranch& a, const PsqfBranch& b) {
        const auto& pa = a.chain.polys();
        const auto& pb = b.chain.polys();
        if (pa.size() != pb.size()) return pa.size() < pb.size();
        for (size_t i = 0; i < pa.size(); ++i)
            if (pa[i] != pb[i]) return canonical_less(pa[i], pb[i]);
        return false;
    });
    return result;
}

} // namespace trichain
