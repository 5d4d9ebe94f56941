#include "trichain/isolate.hpp"

#include <algorithm>
#include <future>

#include "uniroot.hpp"

namespace trichain {

namespace {

constexpr int kIndefinite = 2;

struct IsolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One resolved coordinate of a partial zero.
struct Coord {
    bool exact;
    Rational value;        // when exact
    IntervalQ iv;          // when bracket: nonzero opposite endpoint signs
    int sign_lo = 0, sign_hi = 0;
    int depth = 0;         // bisections spent on this coordinate
};

// A partial (or full) zero of a chain, with the machinery to evaluate
// definite signs over the enclosing box and to refine any coordinate.
struct Lifted {
    const TriangularSet* chain;
    int depth_cap;
    std::vector<Coord> coords;

    bool all_exact(size_t upto) const {
        for (size_t i = 0; i < upto; ++i)
            if (!coords[i].exact) return false;
        return true;
    }

    std::vector<IntervalQ> box(size_t upto) const {
        std::vector<IntervalQ> b;
        b.reserve(upto);
        for (size_t i = 0; i < upto; ++i)
            b.push_back(coords[i].exact ? IntervalQ(coords[i].value, coords[i].value)
                                        : coords[i].iv);
        return b;
    }

    BoxQ full_box() const { return BoxQ{box(coords.size())}; }

    void bump_depth(size_t level) {
        if (++coords[level].depth > depth_cap)
            throw IsolationError(
                "isolation depth cap exceeded at level " + std::to_string(level) +
                " (non-simple input or pathological box; raise TRICHAIN_DEPTH_CAP)");
    }

    // Exact specialization of chain level polynomial over exact ancestors.
    detail::QVec exact_level_poly(size_t level) const {
        MPoly G = chain->poly(level);
        for (size_t j = 0; j < level; ++j) G = substitute(G, static_cast<int>(j), coords[j].value);
        return detail::to_uvec(G);
    }

    // Sign of B_level(alpha, x): exact when ancestors are exact (may be 0),
    // otherwise interval-evaluated (never 0; kIndefinite when undecided).
    int raw_sign(size_t level, const Rational& x) const {
        if (all_exact(level)) {
            MPoly G = substitute(chain->poly(level), static_cast<int>(level), x);
            for (size_t j = 0; j < level; ++j)
                G = substitute(G, static_cast<int>(j), coords[j].value);
            return sgn(G.constant_value());
        }
        MPoly G = substitute(chain->poly(level), static_cast<int>(level), x);
        IntervalQ r = eval_interval(G, box(level));
        if (r.contains_zero()) return kIndefinite;
        return sgn(r.lo);
    }

    // Definite sign with ancestor refinement; 0 only in the exact case.
    int definite_sign(size_t level, const Rational& x) {
        int s = raw_sign(level, x);
        int rounds = 0;
        while (s == kIndefinite) {
            if (++rounds > depth_cap)
                throw IsolationError("isolation: sign undecidable at level " +
                                     std::to_string(level) + " after ancestor refinement");
            refine_ancestors(level);
            s = raw_sign(level, x);
        }
        return s;
    }

    void refine_ancestors(size_t level) {
        for (size_t j = 0; j < level; ++j)
            if (!coords[j].exact) refine_coord(j, coords[j].iv.width() / 2);
    }

    // Split point inside the middle half of (a, b) with a definite sign.
    std::pair<Rational, int> pick_split(size_t level, const Rational& a, const Rational& b) {
        static const std::pair<int, int> offsets[] = {{1, 2},  {3, 8},  {5, 8},  {7, 16},
                                                      {9, 16}, {5, 16}, {11, 16}};
        const Rational w = b - a;
        for (auto [num, den] : offsets) {
            Rational m = a + w * Rational(num, den);
            int s;
            if (all_exact(level)) {
                s = raw_sign(level, m);  // exact: 0 is meaningful
                return {m, s};
            }
            s = raw_sign(level, m);
            if (s != kIndefinite) return {m, s};
            // one round of ancestor refinement before trying the next offset
            refine_ancestors(level);
            s = raw_sign(level, m);
            if (s != kIndefinite) return {m, s};
        }
        throw IsolationError("isolation: no definite split point found at level " +
                             std::to_string(level));
    }

    void refine_coord(size_t level, const Rational& target_width) {
        Coord& c = coords[level];
        if (c.exact) return;
        while (c.iv.width() > target_width) {
            bump_depth(level);
            auto [m, sm] = pick_split(level, c.iv.lo, c.iv.hi);
            if (sm == 0) {  // exact root hit (exact-ancestors mode only)
                c.exact = true;
                c.value = m;
                c.iv = IntervalQ(m, m);
                return;
            }
            if (sm == c.sign_lo)
                c.iv.lo = m;
            else
                c.iv.hi = m;
        }
    }
};

// Isolate the real roots of chain level polynomial over the partial zero
// `base`; returns one extended Lifted per root.
std::vector<Lifted> isolate_level(const Lifted& base, size_t level) {
    std::vector<Lifted> out;
    const TriangularSet& chain = *base.chain;
    const int z = static_cast<int>(level);

    if (base.all_exact(level)) {
        detail::QVec G = base.exact_level_poly(level);
        if (detail::udeg(G) < 1)
            throw IsolationError("isolation: chain polynomial degenerated at level " +
                                 std::to_string(level) + " (non-regular input?)");
        if (!detail::usquarefree(G))
            throw std::domain_error(
                "isolation: specialized polynomial is not squarefree (upstream simplicity bug)");
        for (const IntervalQ& iv : detail::isolate_squarefree_upoly(G)) {
            Lifted ext = base;
            Coord c;
            if (iv.degenerate()) {
                c.exact = true;
                c.value = iv.lo;
                c.iv = iv;
            } else {
                c.exact = false;
                c.iv = iv;
                c.sign_lo = detail::usign(G, iv.lo);
                c.sign_hi = detail::usign(G, iv.hi);
            }
            ext.coords.push_back(std::move(c));
            out.push_back(std::move(ext));
        }
        return out;
    }

    // Interval lifting. Work on a copy: ancestor refinement during the
    // search must persist into the emitted extensions.
    Lifted st = base;
    const MPoly& B = chain.poly(level);
    const MPoly dB = derivative(B, z);
    const int d = B.degree_in(z);

    // Leading-coefficient interval must exclude zero for a root bound.
    MPoly lc = coeff_in(B, z, d);
    int rounds = 0;
    IntervalQ lci = eval_interval(lc, st.box(level));
    while (lci.contains_zero()) {
        if (++rounds > st.depth_cap)
            throw IsolationError("isolation: leading coefficient undecidable at level " +
                                 std::to_string(level));
        st.refine_ancestors(level + 0);
        lci = eval_interval(lc, st.box(level));
    }
    Rational lcmin = abs(lci.lo);
    {
        Rational t = abs(lci.hi);
        if (t < lcmin) lcmin = t;
    }
    Rational maxc(0);
    for (int k = 0; k < d; ++k) {
        IntervalQ ci = eval_interval(coeff_in(B, z, k), st.box(level));
        Rational t = abs(ci.lo);
        if (t > maxc) maxc = t;
        t = abs(ci.hi);
        if (t > maxc) maxc = t;
    }
    Rational bound = 1 + maxc / lcmin;
    Rational B2(1);
    while (B2 < bound) B2 *= 2;

    struct Seg {
        Rational a, b;
        int sa, sb;
        int depth;
    };

    auto range_excludes = [&](const MPoly& P, const Rational& a, const Rational& b) {
        std::vector<IntervalQ> bx = st.box(level);
        bx.emplace_back(a, b);
        return !eval_interval(P, bx).contains_zero();
    };

    int s_lo = st.definite_sign(level, -B2);
    int s_hi = st.definite_sign(level, B2);
    while (s_lo == 0 || s_hi == 0) {  // exact mode can't reach here; guard anyway
        B2 *= 2;
        s_lo = st.definite_sign(level, -B2);
        s_hi = st.definite_sign(level, B2);
    }

    std::vector<Seg> work = {{-B2, B2, s_lo, s_hi, 0}};
    std::vector<Coord> found;
    while (!work.empty()) {
        Seg s = std::move(work.back());
        work.pop_back();
        if (s.depth > st.depth_cap)
            throw IsolationError("isolation depth cap exceeded at level " +
                                 std::to_string(level));
        if (s.sa != s.sb) {
            if (range_excludes(dB, s.a, s.b)) {  // monotone: exactly one root
                Coord c;
                c.exact = false;
                c.iv = IntervalQ(s.a, s.b);
                c.sign_lo = s.sa;
                c.sign_hi = s.sb;
                c.depth = s.depth;
                found.push_back(std::move(c));
                continue;
            }
        } else {
            if (range_excludes(B, s.a, s.b) || range_excludes(dB, s.a, s.b))
                continue;  // no root: value bounded away, or monotone same-sign
        }
        // certificates need the ancestor box to shrink along with the
        // segment; tighten it once per split
        st.refine_ancestors(level);
        auto [m, sm] = st.pick_split(level, s.a, s.b);
        work.push_back({s.a, m, s.sa, sm, s.depth + 1});
        work.push_back({m, s.b, sm, s.sb, s.depth + 1});
    }

    std::sort(found.begin(), found.end(),
              [](const Coord& a, const Coord& b) { return a.iv.lo < b.iv.lo; });
    for (Coord& c : found) {
        Lifted ext = st;
        ext.coords.push_back(std::move(c));
        out.push_back(std::move(ext));
    }
    return out;
}

bool boxes_overlap(const BoxQ& a, const BoxQ& b) {
    for (size_t i = 0; i < a.intervals.size(); ++i)
        if (!a.intervals[i].intersects(b.intervals[i])) return false;
    return true;
}

// Refine until all boxes are pairwise disjoint in at least one coordinate.
void separate_states(std::vector<Lifted>& states, int cap) {
    bool again = true;
    int rounds = 0;
    while (again) {
        again = false;
        for (size_t i = 0; i < states.size(); ++i)
            for (size_t j = i + 1; j < states.size(); ++j) {
                if (!boxes_overlap(states[i].full_box(), states[j].full_box())) continue;
                bool any = false;
                for (Lifted* st : {&states[i], &states[j]})
                    for (size_t lv = 0; lv < st->coords.size(); ++lv)
                        if (!st->coords[lv].exact) {
                            st->refine_coord(lv, st->coords[lv].iv.width() / 2);
                            any = true;
                        }
                if (!any)
                    throw std::logic_error("isolate: two boxes share an exact zero");
                again = true;
            }
        if (++rounds > cap)
            throw IsolationError("isolate: could not separate boxes");
    }
}

std::vector<Lifted> lift_chain(const TriangularSet& B, const IsolateOptions& opt) {
    if (!B.is_prefix_covering())
        throw std::domain_error("isolate: chain must be zero-dimensional (prefix-covering)");
    std::vector<Lifted> states = {Lifted{&B, opt.depth_cap, {}}};
    for (size_t level = 0; level < B.size(); ++level) {
        std::vector<Lifted> next;
        for (const Lifted& st : states)
            for (Lifted& ext : isolate_level(st, level)) next.push_back(std::move(ext));
        states = std::move(next);
        if (states.empty()) break;
    }
    separate_states(states, opt.depth_cap);
    return states;
}

// Rebuild certificates for an externally supplied box.
Lifted relift(const TriangularSet& B, const BoxQ& box, const IsolateOptions& opt) {
    if (box.intervals.size() != B.size())
        throw std::domain_error("refine_box: box dimension does not match the chain");
    Lifted st{&B, opt.depth_cap, {}};
    for (size_t level = 0; level < B.size(); ++level) {
        const IntervalQ& iv = box.intervals[level];
        Coord c;
        if (iv.degenerate()) {
            c.exact = true;
            c.value = iv.lo;
            c.iv = iv;
        } else {
            c.exact = false;
            c.iv = iv;
            c.sign_lo = st.definite_sign(level, iv.lo);
            c.sign_hi = st.definite_sign(level, iv.hi);
            if (c.sign_lo == 0 || c.sign_hi == 0 || c.sign_lo == c.sign_hi)
                throw std::domain_error(
                    "refine_box: box lacks a sign-change certificate at level " +
                    std::to_string(level));
        }
        st.coords.push_back(std::move(c));
    }
    return st;
}

bool boxes_overlap(const BoxQ& a, const BoxQ& b) {
    for (size_t i = 0; i < a.intervals.size(); ++i)
        if (!a.intervals[i].intersects(b.intervals[i])) return false;
    return true;
}

} // namespace

std::vector<IntervalQ> uni_isolate(const MPoly& F) {
    if (F.is_zero()) throw std::domain_error("uni_isolate: zero polynomial");
    if (F.is_constant()) return {};
    detail::QVec p = detail::to_uvec(F);  // throws if multivariate
    if (!detail::usquarefree(p))
        throw std::domain_error("uni_isolate: polynomial is not squarefree");
    return detail::isolate_squarefree_upoly(p);
}

std::vector<BoxQ> isolate_simple_set(const TriangularSet& B, const IsolateOptions& opt) {
    std::vector<BoxQ> out;
    for (const Lifted& st : lift_chain(B, opt)) out.push_back(st.full_box());
    return out;
}

BoxQ refine_box(const TriangularSet& B, const BoxQ& box, const Rational& width,
                const IsolateOptions& opt) {
    if (sgn(width) <= 0) throw std::domain_error("refine_box: width must be positive");
    Lifted st = relift(B, box, opt);
    for (size_t level = 0; level < B.size(); ++level) st.refine_coord(level, width);
    return st.full_box();
}

std::vector<IsolatedZero> iso_mult(const ZeroDimChain& T, const IsolateOptions& opt) {
    auto dec = reg2sim_cached(T);

    struct Entry {
        Lifted st;
        size_t branch;
    };
    std::vector<Entry> entries;

    auto isolate_branch = [&](size_t bi) {
        return lift_chain(dec->branches[bi].chain, opt);
    };

    if (opt.threads > 1 && dec->branches.size() > 1) {
        std::vector<std::future<std::vector<Lifted>>> futs;
        futs.reserve(dec->branches.size());
        for (size_t bi = 0; bi < dec->branches.size(); ++bi)
            futs.push_back(std::async(std::launch::async, isolate_branch, bi));
        for (size_t bi = 0; bi < dec->branches.size(); ++bi)
            for (Lifted& st : futs[bi].get()) entries.push_back({std::move(st), bi});
    } else {
        for (size_t bi = 0; bi < dec->branches.size(); ++bi)
            for (Lifted& st : isolate_branch(bi)) entries.push_back({std::move(st), bi});
    }

    // Refine until boxes from distinct branches are pairwise disjoint.
    bool again = true;
    int rounds = 0;
    while (again) {
        again = false;
        for (size_t i = 0; i < entries.size(); ++i)
            for (size_t j = i + 1; j < entries.size(); ++j) {
                if (entries[i].branch == entries[j].branch) continue;
                if (!boxes_overlap(entries[i].st.full_box(), entries[j].st.full_box())) continue;
                bool any = false;
                for (auto* e : {&entries[i], &entries[j]})
                    for (size_t lv = 0; lv < e->st.coords.size(); ++lv)
                        if (!e->st.coords[lv].exact) {
                            e->st.refine_coord(lv, e->st.coords[lv].iv.width() / 2);
                            any = true;
                        }
                if (!any)
                    throw std::logic_error(
                        "iso_mult: two branches share an exact zero (invariant violation)");
                again = true;
            }
        if (++rounds > opt.depth_cap)
            throw IsolationError("iso_mult: could not separate boxes across branches");
    }

    if (sgn(opt.width) > 0)
        for (auto& e : entries)
            for (size_t lv = 0; lv < e.st.coords.size(); ++lv) e.st.refine_coord(lv, opt.width);

    std::vector<IsolatedZero> out;
    out.reserve(entries.size());
    for (auto& e : entries)
        out.push_back({e.st.full_box(), dec->branches[e.branch].product(), e.branch});
    std::sort(out.begin(), out.end(), [](const IsolatedZero& a, const IsolatedZero& b) {
        for (size_t i = 0; i < a.box.intervals.size(); ++i) {
            if (a.box.intervals[i].lo != b.box.intervals[i].lo)
                return a.box.intervals[i].lo < b.box.intervals[i].lo;
            if (a.box.intervals[i].hi != b.box.intervals[i].hi)
                return a.box.intervals[i].hi < b.box.intervals[i].hi;
        }
        return false;
    });
    return out;
}

} // namespace trichain
