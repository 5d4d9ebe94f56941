#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace tt;

namespace {

TriangularSet TS(const std::vector<std::string>& polys, const VarOrder& o) {
    std::vector<MPoly> ps;
    for (const auto& s : polys) ps.push_back(P(s, o));
    return TriangularSet(ps);
}

bool vanishes_at(const MPoly& f, const std::vector<Rational>& pt) {
    return sgn(eval_rational(f, pt)) == 0;
}

// zeros of a chain whose specializations all split over Q with small roots
std::vector<std::vector<Rational>> enumerate_zeros(const TriangularSet& T) {
    std::vector<std::vector<Rational>> pts = {{}};
    for (size_t lv = 0; lv < T.size(); ++lv) {
        std::vector<std::vector<Rational>> next;
        for (const auto& pt : pts) {
            UP cur = up_monic(specialize(T.poly(lv), static_cast<int>(lv), pt));
            std::vector<Rational> roots;
            bool progress = true;
            while (up_deg(cur) > 0 && progress) {
                progress = false;
                for (int num = -60; num <= 60 && !progress; ++num) {
                    for (int den = 1; den <= 6 && !progress; ++den) {
                        Rational r(num, den);
                        r.canonicalize();
                        Rational val(0);
                        for (size_t k = cur.size(); k-- > 0;) val = val * r + cur[k];
                        if (sgn(val) == 0) {
                            roots.push_back(r);
                            UP lin = {-r, Rational(1)};
                            cur = up_divexact(cur, lin);
                            progress = true;
                        }
                    }
                }
            }
            REQUIRE(up_deg(cur) <= 0);  // fully split over Q
            std::vector<Rational> uniq;
            for (const auto& r : roots) {
                bool dup = false;
                for (const auto& x : uniq)
                    if (x == r) dup = true;
                if (!dup) uniq.push_back(r);
            }
            for (const auto& r : uniq) {
                auto p2 = pt;
                p2.push_back(r);
                next.push_back(std::move(p2));
            }
        }
        pts = std::move(next);
    }
    return pts;
}

} // namespace

TEST_CASE("reduce examples") {
    VarOrder o = ord("x y");
    CHECK(reduce(P("y", o), TS({"x", "y-x"}, o)) == MPoly(0));
    CHECK(reduce(P("x^2", o), TS({"x^2-x"}, o)) == P("x", o));
    CHECK(reduce(MPoly(5), TS({"x"}, o)) == MPoly(5));
}

TEST_CASE("reduce kills explicit chain combinations") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        int nv = rng.uniform(1, 3);
        TestChain tc = random_test_chain(rng, nv, 3);
        MPoly F(0);
        for (size_t j = 0; j < tc.chain.size(); ++j)
            F = F + random_poly(rng, nv, 2, 3) * tc.chain.poly(j);
        CHECK(reduce(F, tc.chain) == MPoly(0));
        MPoly ini(1);
        for (size_t j = 0; j < tc.chain.size(); ++j)
            ini = ini * tc.chain.poly(j).coeff(tc.chain.poly(j).main_degree());
        CHECK(reduce(ini * ini * F, tc.chain) == MPoly(0));
    }
}

TEST_CASE("regularize examples") {
    VarOrder o = ord("x");
    {
        auto out = regularize(P("x", o), TS({"x^2-x"}, o));
        REQUIRE(out.cases.size() == 2);
        bool zero_x = false, inv_x1 = false;
        for (const auto& c : out.cases) {
            if (c.status == RegStatus::ZERO && c.chain.poly(0) == P("x", o)) zero_x = true;
            if (c.status == RegStatus::INVERTIBLE && c.chain.poly(0) == P("x-1", o)) inv_x1 = true;
        }
        CHECK(zero_x);
        CHECK(inv_x1);
    }
    {
        auto out = regularize(MPoly(1), TS({"x^2-x"}, o));
        REQUIRE(out.cases.size() == 1);
        CHECK(out.cases[0].status == RegStatus::INVERTIBLE);
        CHECK(out.cases[0].chain == TS({"x^2-x"}, o));
    }
    {
        auto out = regularize(P("x^5+x", o), TS({"x^3-x^2+2"}, o));
        REQUIRE(out.cases.size() == 1);
        CHECK(out.cases[0].status == RegStatus::INVERTIBLE);
        CHECK(out.cases[0].chain == TS({"x^3-x^2+2"}, o));  // no split
    }
    {
        auto out = regularize(MPoly(0), TS({"x^2-x"}, o));
        REQUIRE(out.cases.size() == 1);
        CHECK(out.cases[0].status == RegStatus::ZERO);
    }
}

TEST_CASE("regularize on non-squarefree chains keeps multiplicity") {
    VarOrder o = ord("x");
    {
        auto out = regularize(P("x", o), TS({"x^2"}, o));
        REQUIRE(out.cases.size() == 1);
        CHECK(out.cases[0].status == RegStatus::ZERO);
        CHECK(chain_dimension(out.cases[0].chain) == 2);
    }
    {
        auto out = regularize(P("x", o), TS({"x^2*(x-1)"}, o));
        REQUIRE(out.cases.size() == 2);
        long long dim = 0;
        for (const auto& c : out.cases) {
            dim += chain_dimension(c.chain);
            if (c.status == RegStatus::ZERO) CHECK(c.chain.poly(0) == P("x^2", o));
            if (c.status == RegStatus::INVERTIBLE) CHECK(c.chain.poly(0) == P("x-1", o));
        }
        CHECK(dim == 3);
    }
}

TEST_CASE("regularize partition and dimension conservation on random chains") {
    Rng rng(101);
    for (int i = 0; i < 150; ++i) {
        int nv = rng.uniform(1, 3);
        TestChain tc = random_test_chain(rng, nv, 3);
        MPoly p = rng.uniform(0, 1) ? random_poly(rng, nv, 2, 3)
                                    : tc.chain.poly(static_cast<size_t>(rng.uniform(0, nv - 1)));
        auto out = regularize(p, tc.chain);

        long long dims = 0;
        for (const auto& c : out.cases) dims += chain_dimension(c.chain);
        CHECK(dims == chain_dimension(tc.chain));

        auto all = enumerate_zeros(tc.chain);
        std::vector<std::vector<Rational>> seen;
        for (const auto& c : out.cases) {
            for (const auto& z : enumerate_zeros(c.chain)) {
                bool vz = vanishes_at(p, z);
                CHECK(vz == (c.status == RegStatus::ZERO));
                bool found = false;
                for (const auto& w : all)
                    if (w == z) found = true;
                CHECK(found);
                for (const auto& w : seen) CHECK(!(w == z));
                seen.push_back(z);
            }
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("is_regular_chain examples") {
    VarOrder o = ord("x y");
    CHECK(is_regular_chain(TS({"x^3-x^2+2", "(x^5+x)*y^3-x^3*y^2"}, o), 2));
    CHECK_FALSE(is_regular_chain(TS({"x", "x*y-1"}, o), 2));
    VarOrder ox = ord("x");
    CHECK(is_regular_chain(TS({"x"}, ox), 1));
    CHECK_FALSE(is_regular_chain(TS({"x"}, o), 2));  // does not cover y

    auto diag = validate_regular_chain(TS({"x", "x*y-1"}, o), o);
    REQUIRE(diag.has_value());
    CHECK(diag->find("x") != std::string::npos);
}

TEST_CASE("chain_dimension examples") {
    VarOrder o = ord("x y");
    CHECK(chain_dimension(TS({"x^3-x^2+2", "(x^5+x)*y^3-x^3*y^2"}, o)) == 9);
    CHECK(chain_dimension(TS({"x"}, ord("x"))) == 1);
    CHECK(chain_dimension(TS({"x*(x-1)", "y^20*(y-1)"}, o)) == 42);
}

TEST_CASE("triangular set validation") {
    VarOrder o = ord("x y");
    CHECK_THROWS_AS(TS({"y", "x"}, o), std::invalid_argument);
    CHECK_THROWS_AS(TS({"x", "x+1"}, o), std::invalid_argument);
    CHECK_THROWS_AS(TS({"5"}, o), std::invalid_argument);
    CHECK_THROWS_AS(ZeroDimChain::make(TS({"x", "x*y-1"}, o), o), std::domain_error);
}
