#include "uniroot.hpp"

#include <algorithm>
#include <stdexcept>

namespace trichain::detail {

QVec utrim(QVec c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    return c;
}

int udeg(const QVec& c) { return static_cast<int>(c.size()) - 1; }

QVec to_uvec(const MPoly& F) {
    if (F.is_constant()) {
        if (F.is_zero()) return {};
        return {F.constant_value()};
    }
    QVec c(static_cast<size_t>(F.main_degree()) + 1, Rational(0));
    for (int k = 0; k <= F.main_degree(); ++k) {
        const MPoly& ck = F.coeff(k);
        if (!ck.is_constant()) throw std::domain_error("to_uvec: polynomial is not univariate");
        c[static_cast<size_t>(k)] = ck.constant_value();
    }
    return c;
}

MPoly from_uvec(int var, const QVec& c) {
    std::vector<MPoly> cs;
    cs.reserve(c.size());
    for (const auto& q : c) cs.emplace_back(q);
    return MPoly::from_coeffs(var, std::move(cs));
}

Rational ueval(const QVec& c, const Rational& x) {
    Rational acc(0);
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

int usign(const QVec& c, const Rational& x) { return sgn(ueval(c, x)); }

QVec uderiv(const QVec& c) {
    QVec d;
    for (size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * Rational(static_cast<long>(k)));
    return utrim(std::move(d));
}

QVec uprim(const QVec& c0) {
    QVec c = utrim(c0);
    if (c.empty()) return c;
    Integer g(0), l(1);
    for (const auto& q : c)
        if (sgn(q) != 0) {
            Integer num = abs(q.get_num());
            g = g == 0 ? num : gcd(g, num);
            l = lcm(l, q.get_den());
        }
    Rational f(l, g);
    f.canonicalize();
    if (sgn(c.back()) < 0) f = -f;
    for (auto& q : c) q *= f;
    return c;
}

QVec urem(const QVec& a0, const QVec& b0) {
    QVec a = utrim(a0), b = utrim(b0);
    if (b.empty()) throw std::domain_error("urem: division by zero polynomial");
    const int db = udeg(b);
    while (udeg(a) >= db && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        a = utrim(std::move(a));
    }
    return a;
}

QVec udiv_exact(const QVec& a0, const QVec& b0) {
    QVec a = utrim(a0), b = utrim(b0);
    if (b.empty()) throw std::domain_error("udiv_exact: division by zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("udiv_exact: inexact division");
    QVec q(a.size() - b.size() + 1, Rational(0));
    while (udeg(a) >= udeg(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        a = utrim(std::move(a));
    }
    if (!a.empty()) throw std::logic_error("udiv_exact: inexact division");
    return q;
}

QVec ugcd(QVec a, QVec b) {
    a = uprim(std::move(a));
    b = uprim(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!b.empty()) {
        QVec r = uprim(urem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool usquarefree(const QVec& c) {
    QVec t = utrim(c);
    if (t.empty()) return false;
    if (udeg(t) <= 1) return true;
    return udeg(ugcd(t, uderiv(t))) == 0;
}

QVec usqfree_part(const QVec& c) {
    QVec t = uprim(c);
    if (t.empty() || udeg(t) == 0) return t;
    QVec g = ugcd(t, uderiv(t));
    if (udeg(g) == 0) return t;
    return uprim(udiv_exact(t, g));
}

// ---- Descartes bisection isolation ----

namespace {

int variations(const QVec& c) {
    int v = 0, last = 0;
    for (const auto& q : c) {
        int s = sgn(q);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

QVec taylor_shift1(QVec c) {  // p(x+1)
    // Horner-style: repeatedly add; O(n^2)
    for (size_t i = c.size(); i-- > 0;)
        for (size_t k = i; k + 1 < c.size(); ++k) c[k] += c[k + 1];
    return c;
}

// Sign variation bound for the number of roots in the open interval (a, b).
// Endpoints are assumed to be non-roots.
int descartes_bound(const QVec& p, const Rational& a, const Rational& b) {
    const size_t n = p.size();  // deg+1
    // q(t) = p(a + (b-a)t), computed by Horner in (a + (b-a) t)
    QVec q(n, Rational(0));
    Rational w = b - a;
    // Horner: q := q*(a + w t) + p_k going from top coefficient down.
    // Represent q as coefficients in t.
    QVec acc;
    for (size_t k = n; k-- > 0;) {
        // acc = acc*(a + w*t) + p[k]
        QVec next(acc.size() + 1, Rational(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * a;
            next[i + 1] += acc[i] * w;
        }
        if (next.empty()) next.push_back(Rational(0));
        next[0] += p[k];
        acc = utrim(std::move(next));
        if (acc.empty()) acc.push_back(Rational(0));
    }
    acc.resize(n, Rational(0));  // keep full length for the reversal
    std::reverse(acc.begin(), acc.end());
    return variations(taylor_shift1(std::move(acc)));
}

struct Isolator {
    const QVec& orig;
    std::vector<IntervalQ> out;

    void emit_point(const Rational& r) { out.emplace_back(r, r); }

    void rec(const QVec& p, const Rational& a, const Rational& b, int depth) {
        if (depth > 512) throw std::runtime_error("uni_isolate: bisection depth exceeded");
        int v = descartes_bound(p, a, b);
        if (v == 0) return;
        if (v == 1) {
            out.emplace_back(a, b);  // certified vs orig: endpoints stay non-roots of orig
            return;
        }
        Rational m = (a + b) / 2;
        if (sgn(ueval(p, m)) == 0) {
            emit_point(m);
            QVec lin = {-m, Rational(1)};
            QVec p2 = udiv_exact(p, lin);
            rec(p2, a, m, depth + 1);
            rec(p2, m, b, depth + 1);
        } else {
            rec(p, a, m, depth + 1);
            rec(p, m, b, depth + 1);
        }
    }
};

Rational cauchy_bound_pow2(const QVec& p) {
    Rational m(0);
    for (size_t k = 0; k + 1 < p.size(); ++k) {
        Rational a = abs(p[k]);
        if (a > m) m = a;
    }
    Rational b = 1 + m / abs(p.back());
    Rational pw(1);
    while (pw < b) pw *= 2;
    return pw;
}

// Snap an isolating open interval to a rational root if it holds one.
void snap_rational(const QVec& p, const Integer& lead_abs, IntervalQ& iv) {
    if (iv.degenerate()) return;
    Rational thresh(1, lead_abs);
    thresh.canonicalize();
    int slo = usign(p, iv.lo);
    while (iv.width() >= thresh) {
        Rational m = (iv.lo + iv.hi) / 2;
        int sm = usign(p, m);
        if (sm == 0) {
            iv = IntervalQ(m, m);
            return;
        }
        if (sm == slo) iv.lo = m; else iv.hi = m;
    }
    // at most one candidate k/lead in the open interval
    Rational a = iv.lo * lead_abs;
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    k += 1;
    Rational cand(k, lead_abs);
    cand.canonicalize();
    if (iv.lo < cand && cand < iv.hi && usign(p, cand) == 0) iv = IntervalQ(cand, cand);
}

} // namespace

namespace {

// Replace root endpoints of a non-degenerate isolating interval; the unique
// interior root decides which side a bisection point falls on.
void tighten_endpoints(const QVec& p, IntervalQ& iv) {
    for (;;) {
        if (iv.degenerate()) return;
        bool lo0 = usign(p, iv.lo) == 0, hi0 = usign(p, iv.hi) == 0;
        if (!lo0 && !hi0) return;
        Rational m = (iv.lo + iv.hi) / 2;
        if (usign(p, m) == 0) {
            iv = IntervalQ(m, m);
            return;
        }
        // 0 or 1 roots on each side: parity of the bound is exact
        if (descartes_bound(p, m, iv.hi) % 2 == 1)
            iv.lo = m;
        else
            iv.hi = m;
    }
}

// Strictly separate sorted isolating intervals that touch at an endpoint.
void separate_neighbors(const QVec& p, std::vector<IntervalQ>& out) {
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        IntervalQ& a = out[i];
        IntervalQ& b = out[i + 1];
        while (!(a.hi < b.lo)) {
            IntervalQ& t = !a.degenerate() ? a : b;
            if (t.degenerate()) throw std::logic_error("isolate: duplicate root");
            int slo = usign(p, t.lo);
            Rational m = (t.lo + t.hi) / 2;
            int sm = usign(p, m);
            if (sm == 0) {
                t = IntervalQ(m, m);
            } else if (sm == slo) {
                t.lo = m;
            } else {
                t.hi = m;
            }
        }
    }
}

} // namespace

std::vector<IntervalQ> isolate_squarefree_upoly(const QVec& p0) {
    QVec p = uprim(p0);
    if (p.empty()) throw std::domain_error("isolate: zero polynomial");
    std::vector<IntervalQ> out;
    if (udeg(p) == 0) return out;
    if (sgn(p[0]) == 0) {  // root at 0; squarefree => exactly once
        out.emplace_back(Rational(0), Rational(0));
        p.erase(p.begin());
        p = utrim(std::move(p));
    }
    if (udeg(p) >= 1) {
        if (udeg(p) == 1) {
            Rational r = -p[0] / p[1];
            out.emplace_back(r, r);
        } else {
            Rational B = cauchy_bound_pow2(p);
            Isolator iso{p, {}};
            iso.rec(p, -B, B, 0);
            Integer lead = abs(p.back().get_num());  // p integer-primitive
            for (auto& iv : iso.out) snap_rational(p, lead, iv);
            for (auto& iv : iso.out) out.push_back(iv);
        }
    }
    // back to the full polynomial (with any root at 0): closed intervals
    // must hold exactly one root each and be pairwise disjoint
    QVec full = uprim(p0);
    for (auto& iv : out) tighten_endpoints(full, iv);
    std::sort(out.begin(), out.end(),
              [](const IntervalQ& x, const IntervalQ& y) {
                  return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
              });
    separate_neighbors(full, out);
    return out;
}

void refine_root_interval(const QVec& p, IntervalQ& iv, const Rational& width) {
    if (sgn(width) <= 0) throw std::domain_error("refine: width must be positive");
    if (iv.degenerate()) return;
    int slo = usign(p, iv.lo);
    int shi = usign(p, iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::domain_error("refine: interval lacks a sign-change certificate");
    while (iv.width() > width) {
        Rational m = (iv.lo + iv.hi) / 2;
        int sm = usign(p, m);
        if (sm == 0) {
            iv = IntervalQ(m, m);
            return;
        }
        if (sm == slo) iv.lo = m; else iv.hi = m;
    }
}

std::vector<Rational> rational_roots(const QVec& p) {
    std::vector<Rational> roots;
    QVec s = usqfree_part(p);
    if (s.empty() || udeg(s) == 0) return roots;
    for (const auto& iv : isolate_squarefree_upoly(s))
        if (iv.degenerate()) roots.push_back(iv.lo);
    return roots;
}

std::optional<std::pair<MPoly, MPoly>> rational_block_split(const MPoly& F) {
    if (F.is_constant()) return std::nullopt;
    const int var = F.top_var();
    QVec p = uprim(to_uvec(F));
    std::vector<Rational> roots = rational_roots(p);
    if (roots.empty()) return std::nullopt;
    QVec block = {Rational(1)};
    QVec rest = p;
    for (const auto& r : roots) {
        QVec lin = {Rational(-r.get_num()), Rational(r.get_den())};
        for (;;) {
            if (udeg(rest) < 1) break;
            QVec rem = urem(rest, lin);
            if (!rem.empty()) break;
            rest = udiv_exact(rest, lin);
            // block *= lin
            QVec nb(block.size() + 1, Rational(0));
            for (size_t i = 0; i < block.size(); ++i) {
                nb[i] += block[i] * lin[0];
                nb[i + 1] += block[i] * lin[1];
            }
            block = std::move(nb);
        }
    }
    if (udeg(rest) == 0) return std::nullopt;  // all roots rational: keep whole
    return std::make_pair(primitive_normalize(from_uvec(var, block)),
                          primitive_normalize(from_uvec(var, rest)));
}

} // namespace trichain::detail

namespace trichain::detail {

QVec uquo(const QVec& a0, const QVec& b0) {
    QVec a = utrim(a0), b = utrim(b0);
    if (b.empty()) throw std::domain_error("uquo: division by zero polynomial");
    if (a.size() < b.size()) return {};
    QVec q(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && udeg(a) >= udeg(b)) {
        Rational f = a.back() / b.back();
        size_t sh = a.size() - b.size();
        q[sh] = f;
        for (size_t k = 0; k < b.size(); ++k) a[k + sh] -= f * b[k];
        a.pop_back();
        a = utrim(std::move(a));
    }
    return utrim(std::move(q));
}

std::pair<QVec, QVec> uhalfxgcd(const QVec& a, const QVec& b) {
    QVec r0 = utrim(a), r1 = utrim(b);
    QVec u0 = {Rational(1)}, u1 = {};
    while (!r1.empty()) {
        QVec q = uquo(r0, r1);
        // r2 = r0 - q*r1 ; u2 = u0 - q*u1
        QVec r2 = r0;
        QVec qr(q.size() + r1.size(), Rational(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < r1.size(); ++j) qr[i + j] += q[i] * r1[j];
        if (r2.size() < qr.size()) r2.resize(qr.size(), Rational(0));
        for (size_t i = 0; i < qr.size(); ++i) r2[i] -= qr[i];
        r2 = utrim(std::move(r2));
        QVec u2 = u0;
        QVec qu(q.size() + (u1.empty() ? 1 : u1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < u1.size(); ++j) qu[i + j] += q[i] * u1[j];
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        u2 = utrim(std::move(u2));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

} // namespace trichain::detail
