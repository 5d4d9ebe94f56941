#include "trichain/pgcd.hpp"

#include <algorithm>
#include <deque>

namespace trichain {

namespace {

int zdeg(const MPoly& f, int z) { return f.is_zero() ? -1 : f.degree_in(z); }

void vars_below(const MPoly& F, int z, int& maxv) {
    if (F.is_constant()) return;
    if (F.top_var() != z) maxv = std::max(maxv, F.top_var());
    for (const auto& c : F.coeffs()) vars_below(c, z, maxv);
}

MPoly drop_lead(const MPoly& F, int z) {
    int d = F.degree_in(z);
    return F - coeff_in(F, z, d) * pow(MPoly::variable(z), d);
}

struct Work {
    MPoly A, B;
    TriangularSet C;
    std::vector<MPoly> cofA, cofB;
};

struct Ctx {
    int z;
    bool track;
    size_t nf;
    std::vector<PgcdBranch> out;

    void emit(MPoly G, TriangularSet C, MPoly raw, std::vector<MPoly> cof) {
        PgcdBranch b;
        b.G = std::move(G);
        b.chain = std::move(C);
        if (track) {
            b.raw = std::move(raw);
            b.cofactors = std::move(cof);
            b.cofactors.resize(nf, MPoly(0));
        }
        out.push_back(std::move(b));
    }
};

// reduce + primitive-normalize modulo C; cofactors scaled consistently so
// that result == sum cof[j]*F_j modulo <C> still holds.
MPoly normalize_mod(const MPoly& F, const TriangularSet& C, std::vector<MPoly>* cof) {
    if (F.is_zero()) return F;
    MPoly r;
    MPoly H(1);
    if (cof)
        r = reduce_traced(F, C, H);
    else
        r = reduce(F, C);
    if (r.is_zero()) {
        if (cof) std::fill(cof->begin(), cof->end(), MPoly(0));
        return r;
    }
    Rational cont = rational_content(r);
    MPoly scaled = primitive_normalize(r);
    if (cof) {
        MPoly f = H * MPoly(1 / cont);
        for (auto& c : *cof)
            if (!c.is_zero()) c = c * f;
    }
    return scaled;
}

void process(std::deque<Work>& queue, Ctx& ctx) {
    while (!queue.empty()) {
        Work w = std::move(queue.back());
        queue.pop_back();
        MPoly A = normalize_mod(w.A, w.C, ctx.track ? &w.cofA : nullptr);
        MPoly B = normalize_mod(w.B, w.C, ctx.track ? &w.cofB : nullptr);
        if (zdeg(A, ctx.z) < zdeg(B, ctx.z)) {
            std::swap(A, B);
            std::swap(w.cofA, w.cofB);
        }
        if (B.is_zero()) {
            // gcd(A, 0): A with regular leading coefficient, or unit/zero
            if (A.is_zero()) {
                ctx.emit(MPoly(0), w.C, MPoly(0), w.cofA);
                continue;
            }
            if (zdeg(A, ctx.z) == 0) {
                for (auto& cs : regularize(A, w.C).cases) {
                    if (cs.status == RegStatus::INVERTIBLE)
                        ctx.emit(MPoly(1), cs.chain, A, w.cofA);
                    else
                        ctx.emit(MPoly(0), cs.chain, MPoly(0), w.cofA);
                }
                continue;
            }
            MPoly lc = coeff_in(A, ctx.z, zdeg(A, ctx.z));
            for (auto& cs : regularize(lc, w.C).cases) {
                if (cs.status == RegStatus::INVERTIBLE) {
                    auto cof = w.cofA;
                    MPoly G = normalize_mod(A, cs.chain, ctx.track ? &cof : nullptr);
                    ctx.emit(G, cs.chain, G, cof);
                } else {
                    queue.push_back({drop_lead(A, ctx.z), MPoly(0), cs.chain, w.cofA, {}});
                }
            }
            continue;
        }
        if (zdeg(B, ctx.z) == 0) {
            // B is a nonzero element of K[x]: unit or zero per case
            for (auto& cs : regularize(B, w.C).cases) {
                if (cs.status == RegStatus::INVERTIBLE)
                    ctx.emit(MPoly(1), cs.chain, B, w.cofB);
                else
                    queue.push_back({A, MPoly(0), cs.chain, w.cofA, {}});
            }
            continue;
        }
        // deg A >= deg B >= 1: Euclidean step, leading coefficient first
        MPoly lcB = coeff_in(B, ctx.z, zdeg(B, ctx.z));
        SplitOutcome so = regularize(lcB, w.C);
        if (so.cases.size() == 1 && so.cases[0].status == RegStatus::INVERTIBLE && !ctx.track) {
            // no split: divide by a monic associate to avoid initial-power swell
            if (auto bm = monic_rep(B, ctx.z, w.C)) B = *bm;
            PseudoDiv pd1 = pseudo_divide(A, B, ctx.z);
            queue.push_back({B, pd1.rem, so.cases[0].chain, w.cofB, {}});
            continue;
        }
        bool need_prem = false;
        for (auto& cs : so.cases)
            if (cs.status == RegStatus::INVERTIBLE) need_prem = true;
        PseudoDiv pd;
        std::vector<MPoly> cofR;
        if (need_prem) {
            pd = pseudo_divide(A, B, ctx.z);
            if (ctx.track) {
                MPoly ie = pd.e > 0 ? pow(lcB, pd.e) : MPoly(1);
                cofR.resize(ctx.nf, MPoly(0));
                for (size_t j = 0; j < ctx.nf; ++j) cofR[j] = ie * w.cofA[j] - pd.quo * w.cofB[j];
            }
        }
        for (auto& cs : so.cases) {
            if (cs.status == RegStatus::ZERO)
                queue.push_back({A, drop_lead(B, ctx.z), cs.chain, w.cofA, w.cofB});
            else
                queue.push_back({B, pd.rem, cs.chain, w.cofB, cofR});
        }
    }
}

} // namespace

std::vector<PgcdBranch> pgcd(const std::vector<MPoly>& F_set, const TriangularSet& T, int z,
                             const PgcdOptions& opt) {
    if (F_set.empty()) throw std::domain_error("pgcd: empty polynomial set");
    if (!T.is_prefix_covering() || static_cast<int>(T.size()) > z)
        throw std::domain_error("pgcd: z must lie strictly above all chain variables");
    for (const auto& F : F_set) {
        if (F.top_var() > z) throw std::domain_error("pgcd: input outside K[x][z]");
        int maxv = -1;
        vars_below(F, z, maxv);
        if (maxv >= static_cast<int>(T.size()))
            throw std::domain_error("pgcd: coefficient variables not covered by the chain");
    }

    const size_t nf = F_set.size();
    Ctx ctx{z, opt.track_cofactors, nf, {}};

    auto basis = [&](size_t j) {
        std::vector<MPoly> e(nf, MPoly(0));
        e[j] = MPoly(1);
        return e;
    };

    // fold gcd(F1, F2), then gcd(result, F3), ...
    struct State {
        MPoly G;
        TriangularSet C;
        MPoly raw;
        std::vector<MPoly> cof;
        bool final_form;  // already a finalized gcd (unit/zero/regular-lc)
    };
    std::vector<State> states = {{F_set[0], T, MPoly(0), basis(0), false}};
    for (size_t j = 1; j < nf; ++j) {
        std::vector<State> next;
        for (auto& st : states) {
            if (st.final_form && st.G.is_one()) {
                next.push_back(std::move(st));  // gcd stays 1
                continue;
            }
            Ctx sub{z, opt.track_cofactors, nf, {}};
            std::deque<Work> q;
            q.push_back({st.G, F_set[j], st.C, st.cof, basis(j)});
            process(q, sub);
            for (auto& br : sub.out)
                next.push_back({br.G, br.chain, br.raw, br.cofactors, true});
        }
        states = std::move(next);
    }

    for (auto& st : states) {
        if (st.final_form) {
            ctx.emit(std::move(st.G), std::move(st.C), std::move(st.raw), std::move(st.cof));
        } else {
            std::deque<Work> q;
            q.push_back({st.G, MPoly(0), st.C, st.cof, {}});
            process(q, ctx);
        }
    }

    std::sort(ctx.out.begin(), ctx.out.end(), [](const PgcdBranch& a, const PgcdBranch& b) {
        const auto& pa = a.chain.polys();
        const auto& pb = b.chain.polys();
        if (pa.size() != pb.size()) return pa.size() < pb.size();
        for (size_t i = 0; i < pa.size(); ++i)
            if (pa[i] != pb[i]) return canonical_less(pa[i], pb[i]);
        return canonical_less(a.G, b.G);
    });
    return ctx.out;
}

} // namespace trichain
