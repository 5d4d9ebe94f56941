#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trichain/pgcd.hpp"

#include <algorithm>

#include "test_util.hpp"

using namespace tt;

namespace {

TriangularSet TS(const std::vector<std::string>& polys, const VarOrder& o) {
    std::vector<MPoly> ps;
    for (const auto& s : polys) ps.push_back(P(s, o));
    return TriangularSet(ps);
}

// G1 ~ G2 modulo the chain (cross-multiplied leading coefficients agree)
bool associates_mod(const MPoly& G1, const MPoly& G2, const TriangularSet& A, int z) {
    if (G1.is_zero() || G2.is_zero()) return G1.is_zero() && G2.is_zero();
    if (G1.degree_in(z) != G2.degree_in(z)) return false;
    MPoly u = coeff_in(G1, z, G1.degree_in(z));
    MPoly v = coeff_in(G2, z, G2.degree_in(z));
    return reduce(v * G1 - u * G2, A).is_zero();
}

} // namespace

TEST_CASE("pgcd splitting example") {
    VarOrder o = ord("x y");
    auto out = pgcd({P("y^2-x", o), P("y-1", o)}, TS({"x^2-x"}, o), 1);
    REQUIRE(out.size() == 2);
    bool b1 = false, b2 = false;
    for (const auto& br : out) {
        if (br.chain.poly(0) == P("x-1", o) && br.G == P("y-1", o)) b1 = true;
        if (br.chain.poly(0) == P("x", o) && br.G == MPoly(1)) b2 = true;
    }
    CHECK(b1);
    CHECK(b2);
}

TEST_CASE("pgcd singleton with invertible initial") {
    VarOrder o = ord("x y");
    TriangularSet T = TS({"x^3-x^2+2"}, o);
    MPoly F = P("(x^5+x)*y^3-x^3*y^2", o);
    auto out = pgcd({F}, T, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[0].chain == T);
    CHECK(associates_mod(out[0].G, reduce(F, T), T, 1));
    CHECK(primitive_normalize(out[0].G) == out[0].G);
}

TEST_CASE("pgcd over the empty chain is the ordinary gcd") {
    VarOrder o = ord("x");
    auto out = pgcd({P("3*x^5-3*x^3", o), P("15*x^4-9*x^2", o)}, TriangularSet(), 0);
    REQUIRE(out.size() == 1);
    CHECK(out[0].G == P("x^2", o));
    CHECK(out[0].chain.empty());
}

TEST_CASE("pgcd errors") {
    VarOrder o = ord("x y");
    CHECK_THROWS_AS(pgcd({}, TS({"x"}, o), 1), std::domain_error);
    CHECK_THROWS_AS(pgcd({P("y", o)}, TS({"x", "y"}, o), 1), std::domain_error);  // z not above chain
}

TEST_CASE("pgcd zero branch when all inputs vanish") {
    VarOrder o = ord("x y");
    // y*x vanishes identically on the branch x = 0 of [x^2-x]
    auto out = pgcd({P("x*y", o), P("x*y^2", o)}, TS({"x^2-x"}, o), 1);
    bool zero_branch = false, nonzero_branch = false;
    long long dims = 0;
    for (const auto& br : out) {
        dims += chain_dimension(br.chain);
        if (br.G.is_zero()) {
            zero_branch = true;
            CHECK(br.chain.poly(0) == P("x", o));
        } else {
            nonzero_branch = true;
        }
    }
    CHECK(zero_branch);
    CHECK(nonzero_branch);
    CHECK(dims == 2);
}

TEST_CASE("specialization soundness and partition on random chains") {
    Rng rng(37);
    int done = 0;
    for (int iter = 0; done < 120; ++iter) {
        REQUIRE(iter < 2000);
        int nv = rng.uniform(1, 2);
        TestChain tc = random_test_chain(rng, nv, 3);
        int z = nv;
        // polynomials in z with linear factors so specializations share roots
        auto rand_f = [&]() {
            MPoly f(1);
            int nf = rng.uniform(1, 2);
            for (int k = 0; k < nf; ++k) {
                MPoly lin = MPoly::variable(z) - MPoly(rng.coef(2));
                if (rng.uniform(0, 1)) lin = lin - MPoly::variable(0);
                f = f * lin;
            }
            return f;
        };
        std::vector<MPoly> fs = {rand_f(), rand_f()};
        if (rng.uniform(0, 2) == 0) fs.push_back(rand_f());
        auto out = pgcd(fs, tc.chain, z);
        ++done;

        long long dims = 0;
        for (const auto& br : out) {
            dims += chain_dimension(br.chain);
            if (!br.G.is_zero() && br.G.degree_in(z) > 0) {
                // leading coefficient regularizes to all-INVERTIBLE
                MPoly lc = coeff_in(br.G, z, br.G.degree_in(z));
                for (const auto& c : regularize(lc, br.chain).cases)
                    CHECK(c.status == RegStatus::INVERTIBLE);
                CHECK(primitive_normalize(br.G) == br.G);
            }
        }
        CHECK(dims == chain_dimension(tc.chain));

        auto zeros = test_chain_zeros(tc);
        for (const auto& pt : zeros) {
            // find the unique branch whose chain vanishes at pt
            int owner = -1;
            for (size_t bi = 0; bi < out.size(); ++bi) {
                bool vanishes = true;
                for (const auto& cp : out[bi].chain.polys())
                    if (sgn(eval_rational(cp, pt)) != 0) vanishes = false;
                if (vanishes) {
                    CHECK(owner == -1);  // partition: exactly one owner
                    owner = static_cast<int>(bi);
                }
            }
            REQUIRE(owner >= 0);
            const auto& br = out[static_cast<size_t>(owner)];
            UP g_oracle = {Rational(1)};
            bool all_zero = true;
            for (const auto& f : fs) {
                UP sf = specialize(f, z, pt);
                if (!sf.empty()) all_zero = false;
            }
            if (all_zero) {
                CHECK(br.G.is_zero());
                continue;
            }
            bool first = true;
            for (const auto& f : fs) {
                UP sf = specialize(f, z, pt);
                if (sf.empty()) continue;
                g_oracle = first ? up_monic(sf) : up_gcd(g_oracle, sf);
                first = false;
            }
            UP gb = specialize(br.G, z, pt);
            CHECK(up_associates(g_oracle, gb));
        }
    }
}

TEST_CASE("membership via tracked cofactors") {
    Rng rng(53);
    PgcdOptions opt;
    opt.track_cofactors = true;
    for (int iter = 0; iter < 60; ++iter) {
        int nv = rng.uniform(1, 2);
        TestChain tc = random_test_chain(rng, nv, 2);
        int z = nv;
        auto rand_f = [&]() {
            MPoly f(1);
            for (int k = 0, n = rng.uniform(1, 2); k < n; ++k) {
                MPoly lin = MPoly::variable(z) - MPoly(rng.coef(2));
                if (rng.uniform(0, 1)) lin = lin - MPoly::variable(0);
                f = f * lin;
            }
            return f;
        };
        std::vector<MPoly> fs = {rand_f(), rand_f()};
        for (const auto& br : pgcd(fs, tc.chain, z, opt)) {
            if (br.G.is_zero()) continue;
            REQUIRE(br.cofactors.size() == fs.size());
            MPoly combo(0);
            for (size_t j = 0; j < fs.size(); ++j) combo = combo + br.cofactors[j] * fs[j];
            CHECK(reduce(br.raw - combo, br.chain).is_zero());
        }
    }
}

TEST_CASE("simple input chains stay simple across branches") {
    Rng rng(83);
    for (int iter = 0; iter < 30; ++iter) {
        int nv = rng.uniform(1, 2);
        // distinct linear factors only: the chain is simple
        std::vector<MPoly> polys;
        for (int v = 0; v < nv; ++v) {
            MPoly prod(1);
            int d = rng.uniform(1, 3);
            std::vector<int> used;
            for (int k = 0; k < d; ++k) {
                int c;
                do {
                    c = rng.uniform(-4, 4);
                } while (std::find(used.begin(), used.end(), c) != used.end());
                used.push_back(c);
                prod = prod * (MPoly::variable(v) - MPoly(Rational(c)));
            }
            polys.push_back(prod);
        }
        TriangularSet T(polys);
        int z = nv;
        std::vector<MPoly> fs;
        for (int k = 0, n = rng.uniform(1, 2); k <= n; ++k) {
            MPoly lin = MPoly::variable(z) - MPoly(rng.coef(2));
            if (rng.uniform(0, 1)) lin = lin - MPoly::variable(0);
            fs.push_back(lin * (MPoly::variable(z) - MPoly(rng.coef(3))));
        }
        for (const auto& br : pgcd(fs, T, z)) {
            for (size_t i = 0; i < br.chain.size(); ++i) {
                const MPoly& Bi = br.chain.poly(i);
                for (const auto& g : pgcd({Bi, derivative(Bi, static_cast<int>(i))},
                                          br.chain.prefix(i), static_cast<int>(i)))
                    CHECK(g.G.degree_in(static_cast<int>(i)) == 0);
            }
        }
    }
}

TEST_CASE("order insensitivity up to associates") {
    Rng rng(71);
    for (int iter = 0; iter < 40; ++iter) {
        int nv = rng.uniform(1, 2);
        TestChain tc = random_test_chain(rng, nv, 2);
        int z = nv;
        auto rand_f = [&]() {
            MPoly f(1);
            for (int k = 0, n = rng.uniform(1, 2); k < n; ++k)
                f = f * (MPoly::variable(z) - MPoly(rng.coef(2)));
            return f;
        };
        std::vector<MPoly> fs = {rand_f(), rand_f(), rand_f()};
        auto out1 = pgcd(fs, tc.chain, z);
        std::vector<MPoly> rev(fs.rbegin(), fs.rend());
        auto out2 = pgcd(rev, tc.chain, z);
        // compare per rational zero: specialized gcds associate
        for (const auto& pt : test_chain_zeros(tc)) {
            auto find_g = [&](const std::vector<PgcdBranch>& out) {
                for (const auto& br : out) {
                    bool vanishes = true;
                    for (const auto& cp : br.chain.polys())
                        if (sgn(eval_rational(cp, pt)) != 0) vanishes = false;
                    if (vanishes) return specialize(br.G, z, pt);
                }
                REQUIRE(false);
                return UP{};
            };
            CHECK(up_associates(find_g(out1), find_g(out2)));
        }
    }
}
