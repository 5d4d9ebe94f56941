#include "trichain/chains.hpp"

#include <deque>

#include "trichain/pgcd.hpp"
#include "uniroot.hpp"

namespace trichain {

TriangularSet::TriangularSet(std::vector<MPoly> polys) : polys_(std::move(polys)) {
    int last = -1;
    for (const auto& p : polys_) {
        if (p.is_constant())
            throw std::invalid_argument("TriangularSet: constant polynomial in chain");
        if (p.top_var() <= last)
            throw std::invalid_argument("TriangularSet: leading variables not strictly ascending");
        last = p.top_var();
    }
}

bool TriangularSet::is_prefix_covering() const {
    for (size_t i = 0; i < polys_.size(); ++i)
        if (polys_[i].top_var() != static_cast<int>(i)) return false;
    return true;
}

TriangularSet TriangularSet::prefix(size_t r) const {
    TriangularSet t;
    t.polys_.assign(polys_.begin(), polys_.begin() + static_cast<long>(r));
    return t;
}

MPoly reduce(const MPoly& F, const TriangularSet& T) {
    MPoly r = F;
    for (size_t i = T.size(); i-- > 0;) {
        const MPoly& Ti = T.poly(i);
        int v = Ti.top_var();
        if (!r.is_zero() && r.degree_in(v) >= Ti.main_degree())
            r = pseudo_divide(r, Ti, v).rem;
    }
    return r;
}

MPoly reduce_traced(const MPoly& F, const TriangularSet& T, MPoly& multiplier_out) {
    MPoly r = F;
    MPoly H(1);
    for (size_t i = T.size(); i-- > 0;) {
        const MPoly& Ti = T.poly(i);
        int v = Ti.top_var();
        if (!r.is_zero() && r.degree_in(v) >= Ti.main_degree()) {
            PseudoDiv pd = pseudo_divide(r, Ti, v);
            if (pd.e > 0) H = H * pow(Ti.coeff(Ti.main_degree()), pd.e);
            r = std::move(pd.rem);
        }
    }
    multiplier_out = std::move(H);
    return r;
}

long long chain_dimension(const TriangularSet& T) {
    long long d = 1;
    for (const auto& p : T.polys()) d *= p.main_degree();
    return d;
}

std::string to_string(const TriangularSet& T, const VarOrder& order) {
    std::string s = "[";
    for (size_t i = 0; i < T.size(); ++i) {
        if (i) s += ", ";
        s += to_string(T.poly(i), order);
    }
    return s + "]";
}

namespace {

// Chain with element at level `lv` replaced by `elem`, upper elements
// reduced modulo the prefix below them and primitive-normalized.
TriangularSet assemble_case(const TriangularSet& lower, const MPoly& elem,
                            const TriangularSet& full, size_t lv) {
    std::vector<MPoly> polys = lower.polys();
    polys.push_back(elem);
    for (size_t j = lv + 1; j < full.size(); ++j) {
        TriangularSet below{std::vector<MPoly>(polys)};
        MPoly r = reduce(full.poly(j), below);
        polys.push_back(primitive_normalize(r));
    }
    return TriangularSet(std::move(polys));
}

struct StripItem {
    MPoly ho;  // element image carrying full multiplicity
    MPoly hc;  // current p-stripped part
    TriangularSet lower;
};

} // namespace

SplitOutcome regularize(const MPoly& p, const TriangularSet& T) {
    SplitOutcome out;
    std::deque<std::pair<MPoly, TriangularSet>> queue;
    queue.push_back({reduce(p, T), T});
    while (!queue.empty()) {
        auto [q, C] = std::move(queue.front());
        queue.pop_front();
        if (q.is_zero()) {
            out.cases.push_back({C, RegStatus::ZERO});
            continue;
        }
        if (q.is_constant()) {
            out.cases.push_back({C, RegStatus::INVERTIBLE});
            continue;
        }
        const int v = q.top_var();
        if (static_cast<size_t>(v) >= C.size() || !C.is_prefix_covering())
            throw std::logic_error("regularize: polynomial variable outside chain");
        const size_t lv = static_cast<size_t>(v);
        const TriangularSet lower = C.prefix(lv);
        const MPoly& elem = C.poly(lv);

        std::deque<StripItem> items;
        items.push_back({elem, elem, lower});
        while (!items.empty()) {
            StripItem it = std::move(items.front());
            items.pop_front();
            for (const PgcdBranch& br : pgcd({q, it.hc}, it.lower, v)) {
                const TriangularSet& L = br.chain;
                bool refined = !(L == it.lower);
                MPoly ho = refined ? primitive_normalize(reduce(it.ho, L)) : it.ho;
                MPoly hc = refined ? primitive_normalize(reduce(it.hc, L)) : it.hc;
                if (br.G.is_zero())
                    throw std::logic_error("regularize: chain element vanished");
                if (br.G.is_constant()) {
                    // q coprime to hc over L
                    int dho = ho.degree_in(v), dhc = hc.degree_in(v);
                    if (dhc == dho && !refined && it.hc == it.ho) {
                        out.cases.push_back({C, RegStatus::INVERTIBLE});
                    } else if (dhc == dho) {
                        out.cases.push_back(
                            {assemble_case(L, primitive_normalize(hc), C, lv), RegStatus::INVERTIBLE});
                    } else {
                        MPoly V = pseudo_divide(ho, hc, v).quo;
                        V = primitive_normalize(reduce(V, L));
                        out.cases.push_back({assemble_case(L, V, C, lv), RegStatus::ZERO});
                        out.cases.push_back(
                            {assemble_case(L, primitive_normalize(hc), C, lv), RegStatus::INVERTIBLE});
                    }
                } else {
                    // strip the common factor br.G from hc
                    MPoly w = pseudo_divide(hc, br.G, v).quo;
                    w = reduce(w, L);
                    if (w.is_zero() || w.degree_in(v) == 0) {
                        // hc entirely shared with q: whole element vanishes on q's zeros
                        out.cases.push_back(
                            {assemble_case(L, primitive_normalize(ho), C, lv), RegStatus::ZERO});
                    } else {
                        items.push_back({ho, primitive_normalize(w), L});
                    }
                }
            }
        }
    }
    return out;
}

SplitOutcome regularize(const MPoly& p, const ZeroDimChain& T) { return regularize(p, T.set()); }

bool is_regular_chain(const TriangularSet& T, size_t nvars) {
    if (T.size() != nvars || !T.is_prefix_covering()) return false;
    for (size_t i = 0; i < T.size(); ++i) {
        const MPoly& ini = T.poly(i).coeff(T.poly(i).main_degree());
        if (ini.is_constant()) continue;  // nonzero by canonicity
        for (const auto& c : regularize(ini, T.prefix(i)).cases)
            if (c.status == RegStatus::ZERO) return false;
    }
    return true;
}

std::optional<std::string> validate_regular_chain(const TriangularSet& T, const VarOrder& order) {
    if (!T.is_prefix_covering() || T.size() != order.size()) {
        for (size_t v = 0; v < order.size(); ++v) {
            bool found = false;
            for (const auto& p : T.polys())
                if (p.top_var() == static_cast<int>(v)) found = true;
            if (!found)
                return "chain is not zero-dimensional: no polynomial has leading variable '" +
                       order.name(static_cast<int>(v)) + "'";
        }
        return "chain is not zero-dimensional over the given variables";
    }
    for (size_t i = 0; i < T.size(); ++i) {
        const MPoly& ini = T.poly(i).coeff(T.poly(i).main_degree());
        if (ini.is_constant()) continue;
        for (const auto& c : regularize(ini, T.prefix(i)).cases)
            if (c.status == RegStatus::ZERO)
                return "initial " + to_string(ini, order) + " of " + to_string(T.poly(i), order) +
                       " is zero or a zero divisor modulo the chain below it";
    }
    return std::nullopt;
}

std::optional<MPoly> monic_rep(const MPoly& B, int z, const TriangularSet& C) {
    if (B.is_zero() || B.degree_in(z) == 0) return std::nullopt;
    const int d = B.degree_in(z);
    MPoly lc = coeff_in(B, z, d);
    if (lc.is_constant())
        return B * MPoly(1 / lc.constant_value());
    // univariate leading coefficient over a univariate level-0 modulus
    if (C.empty() || lc.top_var() != 0 || C.poly(0).top_var() != 0) return std::nullopt;
    detail::QVec lcv, qv;
    try {
        lcv = detail::to_uvec(lc);
        qv = detail::to_uvec(C.poly(0));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    auto [g, u] = detail::uhalfxgcd(lcv, qv);
    if (detail::udeg(g) != 0) return std::nullopt;  // not invertible modulo level 0
    for (auto& c : u) c /= g[0];
    MPoly inv = detail::from_uvec(0, u);
    MPoly B2 = reduce(inv * B, C);
    MPoly lc2 = coeff_in(B2, z, d);
    if (!lc2.is_constant() || lc2.is_zero()) return std::nullopt;
    return B2 * MPoly(1 / lc2.constant_value());
}

ZeroDimChain ZeroDimChain::make(TriangularSet base, const VarOrder& order) {
    if (auto diag = validate_regular_chain(base, order))
        throw std::domain_error("not a zero-dimensional regular chain: " + *diag);
    return ZeroDimChain(std::move(base), order);
}

} // namespace trichain
