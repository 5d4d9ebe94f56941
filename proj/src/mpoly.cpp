#include "trichain/mpoly.hpp"

#include <algorithm>
#include <optional>

namespace trichain {

MPoly MPoly::variable(int var) {
    if (var < 0) throw std::invalid_argument("MPoly::variable: negative index");
    MPoly p;
    p.var_ = var;
    p.coeffs_ = {MPoly(0), MPoly(1)};
    return p;
}

MPoly MPoly::from_coeffs(int var, std::vector<MPoly> cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    if (cs.empty()) return MPoly(0);
    if (cs.size() == 1) return cs[0];
    MPoly p;
    p.var_ = var;
    p.coeffs_ = std::move(cs);
    return p;
}

const Rational& MPoly::constant_value() const {
    if (var_ >= 0) throw std::domain_error("MPoly: not a constant");
    return cst_;
}

const MPoly& MPoly::coeff(int k) const {
    if (var_ < 0) throw std::domain_error("MPoly::coeff on constant");
    return coeffs_.at(static_cast<size_t>(k));
}

int MPoly::degree_in(int v) const {
    if (var_ < 0 || var_ < v) return 0;
    if (var_ == v) return main_degree();
    int d = 0;
    for (const auto& c : coeffs_) d = std::max(d, c.degree_in(v));
    return d;
}

bool MPoly::operator==(const MPoly& o) const {
    if (var_ != o.var_) return false;
    if (var_ < 0) return cst_ == o.cst_;
    return coeffs_ == o.coeffs_;
}

static MPoly scale(const MPoly& a, const Rational& c) {
    if (sgn(c) == 0) return MPoly(0);
    if (a.is_constant()) return MPoly(a.constant_value() * c);
    std::vector<MPoly> cs;
    cs.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) cs.push_back(scale(x, c));
    return MPoly::from_coeffs(a.top_var(), std::move(cs));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.is_constant() && b.is_constant()) return MPoly(a.constant_value() + b.constant_value());
    if (a.top_var() == b.top_var()) {
        std::vector<MPoly> cs;
        size_t n = std::max(a.coeffs().size(), b.coeffs().size());
        cs.reserve(n);
        for (size_t k = 0; k < n; ++k) {
            if (k < a.coeffs().size() && k < b.coeffs().size())
                cs.push_back(a.coeffs()[k] + b.coeffs()[k]);
            else if (k < a.coeffs().size())
                cs.push_back(a.coeffs()[k]);
            else
                cs.push_back(b.coeffs()[k]);
        }
        return MPoly::from_coeffs(a.top_var(), std::move(cs));
    }
    const MPoly& hi = a.top_var() > b.top_var() ? a : b;
    const MPoly& lo = a.top_var() > b.top_var() ? b : a;
    std::vector<MPoly> cs = hi.coeffs();
    cs[0] = cs[0] + lo;
    return MPoly::from_coeffs(hi.top_var(), std::move(cs));
}

MPoly operator-(const MPoly& a) { return scale(a, Rational(-1)); }
MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(0);
    if (a.is_constant()) return scale(b, a.constant_value());
    if (b.is_constant()) return scale(a, b.constant_value());
    if (a.top_var() == b.top_var()) {
        std::vector<MPoly> cs(a.coeffs().size() + b.coeffs().size() - 1, MPoly(0));
        for (size_t i = 0; i < a.coeffs().size(); ++i) {
            if (a.coeffs()[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs().size(); ++j) {
                if (b.coeffs()[j].is_zero()) continue;
                cs[i + j] = cs[i + j] + a.coeffs()[i] * b.coeffs()[j];
            }
        }
        return MPoly::from_coeffs(a.top_var(), std::move(cs));
    }
    const MPoly& hi = a.top_var() > b.top_var() ? a : b;
    const MPoly& lo = a.top_var() > b.top_var() ? b : a;
    std::vector<MPoly> cs;
    cs.reserve(hi.coeffs().size());
    for (const auto& c : hi.coeffs()) cs.push_back(c * lo);
    return MPoly::from_coeffs(hi.top_var(), std::move(cs));
}

MPoly pow(const MPoly& a, long e) {
    if (e < 0) throw std::domain_error("pow: negative exponent");
    MPoly r(1), base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

LeadingData leading_data(const MPoly& F) {
    if (F.is_constant()) throw std::domain_error("leading_data: constant polynomial");
    return {F.top_var(), F.main_degree(), F.coeff(F.main_degree())};
}

MPoly coeff_in(const MPoly& F, int v, int k) {
    if (F.is_constant() || F.top_var() < v) return k == 0 ? F : MPoly(0);
    if (F.top_var() == v) return k <= F.main_degree() ? F.coeff(k) : MPoly(0);
    std::vector<MPoly> cs;
    cs.reserve(F.coeffs().size());
    for (const auto& c : F.coeffs()) cs.push_back(coeff_in(c, v, k));
    return MPoly::from_coeffs(F.top_var(), std::move(cs));
}

PseudoDiv pseudo_divide(const MPoly& F, const MPoly& G, int v) {
    if (G.is_constant() || G.top_var() != v || G.main_degree() == 0)
        throw std::domain_error("pseudo_divide: divisor must have leading variable v");
    const int dG = G.main_degree();
    const MPoly& iniG = G.coeff(dG);
    const bool monic = iniG.is_one();
    MPoly q(0), r = F;
    int e = 0;
    while (!r.is_zero()) {
        int dR = r.degree_in(v);
        if (dR < dG) break;
        MPoly lcR = coeff_in(r, v, dR);
        MPoly term = lcR * pow(MPoly::variable(v), dR - dG);
        if (monic) {
            q = q + term;
            r = r - term * G;
        } else {
            q = iniG * q + term;
            r = iniG * r - term * G;
            ++e;
        }
    }
    return {std::move(q), std::move(r), e};
}

MPoly derivative(const MPoly& F, int v) {
    if (F.is_constant() || F.top_var() < v) return MPoly(0);
    if (F.top_var() == v) {
        std::vector<MPoly> cs;
        for (size_t k = 1; k < F.coeffs().size(); ++k)
            cs.push_back(scale(F.coeffs()[k], Rational(static_cast<long>(k))));
        return MPoly::from_coeffs(v, std::move(cs));
    }
    std::vector<MPoly> cs;
    cs.reserve(F.coeffs().size());
    for (const auto& c : F.coeffs()) cs.push_back(derivative(c, v));
    return MPoly::from_coeffs(F.top_var(), std::move(cs));
}

GaussianRational eval(const MPoly& F, const std::vector<GaussianRational>& point) {
    if (F.is_constant()) return GaussianRational(F.constant_value());
    if (static_cast<size_t>(F.top_var()) >= point.size())
        throw std::domain_error("eval: assignment does not cover all variables");
    const GaussianRational& x = point[static_cast<size_t>(F.top_var())];
    GaussianRational acc = eval(F.coeffs().back(), point);
    for (int k = F.main_degree() - 1; k >= 0; --k)
        acc = acc * x + eval(F.coeffs()[static_cast<size_t>(k)], point);
    return acc;
}

Rational eval_rational(const MPoly& F, const std::vector<Rational>& point) {
    if (F.is_constant()) return F.constant_value();
    if (static_cast<size_t>(F.top_var()) >= point.size())
        throw std::domain_error("eval: assignment does not cover all variables");
    const Rational& x = point[static_cast<size_t>(F.top_var())];
    Rational acc = eval_rational(F.coeffs().back(), point);
    for (int k = F.main_degree() - 1; k >= 0; --k)
        acc = acc * x + eval_rational(F.coeffs()[static_cast<size_t>(k)], point);
    return acc;
}

MPoly substitute(const MPoly& F, int v, const Rational& a) {
    if (F.is_constant() || F.top_var() < v) return F;
    if (F.top_var() == v) {
        MPoly acc = F.coeffs().back();
        for (int k = F.main_degree() - 1; k >= 0; --k)
            acc = scale(acc, a) + F.coeffs()[static_cast<size_t>(k)];
        return acc;
    }
    std::vector<MPoly> cs;
    cs.reserve(F.coeffs().size());
    for (const auto& c : F.coeffs()) cs.push_back(substitute(c, v, a));
    return MPoly::from_coeffs(F.top_var(), std::move(cs));
}

MPoly shift(const MPoly& F, const std::vector<Rational>& a) {
    if (F.is_constant()) return F;
    if (static_cast<size_t>(F.top_var()) >= a.size())
        throw std::domain_error("shift: translation does not cover all variables");
    MPoly x_plus = MPoly::variable(F.top_var()) + MPoly(a[static_cast<size_t>(F.top_var())]);
    MPoly acc = shift(F.coeffs().back(), a);
    for (int k = F.main_degree() - 1; k >= 0; --k)
        acc = acc * x_plus + shift(F.coeffs()[static_cast<size_t>(k)], a);
    return acc;
}

static void content_walk(const MPoly& F, Integer& g, Integer& l) {
    if (F.is_constant()) {
        if (sgn(F.constant_value()) != 0) {
            Integer num = abs(F.constant_value().get_num());
            g = g == 0 ? num : gcd(g, num);
            l = lcm(l, F.constant_value().get_den());
        }
        return;
    }
    for (const auto& c : F.coeffs()) content_walk(c, g, l);
}

static int leading_sign(const MPoly& F) {
    const MPoly* p = &F;
    while (!p->is_constant()) p = &p->coeffs().back();
    return sgn(p->constant_value());
}

Rational rational_content(const MPoly& F) {
    if (F.is_zero()) return Rational(0);
    Integer g(0), l(1);
    content_walk(F, g, l);
    Rational c(g, l);
    c.canonicalize();
    if (leading_sign(F) < 0) c = -c;
    return c;
}

MPoly primitive_normalize(const MPoly& F) {
    if (F.is_zero()) throw std::domain_error("primitive_normalize: zero polynomial");
    Rational c = rational_content(F);
    return scale(F, 1 / c);
}

// ---- printing ----

namespace {

struct Term {
    int sign;          // +1 / -1
    std::string body;  // without sign
};

// single monomial c * prod vars^k -> (|c| textual parts)
std::optional<std::pair<Rational, std::string>> try_monomial(const MPoly& F, const VarOrder& ord) {
    if (F.is_constant()) return std::make_pair(F.constant_value(), std::string());
    int nonzero = -1;
    for (size_t k = 0; k < F.coeffs().size(); ++k)
        if (!F.coeffs()[k].is_zero()) {
            if (nonzero >= 0) return std::nullopt;
            nonzero = static_cast<int>(k);
        }
    auto inner = try_monomial(F.coeffs()[static_cast<size_t>(nonzero)], ord);
    if (!inner) return std::nullopt;
    std::string vp = ord.name(F.top_var());
    if (nonzero != 1) vp += "^" + std::to_string(nonzero);
    if (nonzero == 0) vp.clear();
    std::string part = inner->second.empty() ? vp : (vp.empty() ? inner->second : inner->second + "*" + vp);
    return std::make_pair(inner->first, part);
}

void collect_terms(const MPoly& F, const VarOrder& ord, std::vector<Term>& out);

std::string render(const MPoly& F, const VarOrder& ord) {
    std::vector<Term> ts;
    collect_terms(F, ord, ts);
    if (ts.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i == 0)
            s += (ts[i].sign < 0 ? "-" : "") + ts[i].body;
        else
            s += (ts[i].sign < 0 ? " - " : " + ") + ts[i].body;
    }
    return s;
}

std::string monomial_body(const Rational& q, const std::string& vars, const std::string& vp) {
    std::string varpart = vars.empty() ? vp : (vp.empty() ? vars : vars + "*" + vp);
    Rational a = abs(q);
    if (varpart.empty()) return to_string(a);
    if (a == 1) return varpart;
    return to_string(a) + "*" + varpart;
}

void collect_terms(const MPoly& F, const VarOrder& ord, std::vector<Term>& out) {
    if (F.is_zero()) return;
    if (F.is_constant()) {
        out.push_back({sgn(F.constant_value()) < 0 ? -1 : 1, to_string(abs(F.constant_value()))});
        return;
    }
    const std::string name = ord.name(F.top_var());
    for (int k = F.main_degree(); k >= 0; --k) {
        const MPoly& c = F.coeffs()[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        std::string vp = k == 0 ? "" : (k == 1 ? name : name + "^" + std::to_string(k));
        if (auto m = try_monomial(c, ord)) {
            out.push_back({sgn(m->first) < 0 ? -1 : 1, monomial_body(m->first, m->second, vp)});
        } else if (k == 0) {
            collect_terms(c, ord, out);
        } else {
            out.push_back({1, "(" + render(c, ord) + ")*" + vp});
        }
    }
}

} // namespace

std::string to_string(const MPoly& F, const VarOrder& order) { return render(F, order); }

bool canonical_less(const MPoly& a, const MPoly& b) {
    if (a.is_constant() != b.is_constant()) return a.is_constant();
    if (a.is_constant()) return a.constant_value() < b.constant_value();
    if (a.top_var() != b.top_var()) return a.top_var() < b.top_var();
    if (a.main_degree() != b.main_degree()) return a.main_degree() < b.main_degree();
    for (int k = a.main_degree(); k >= 0; --k) {
        const MPoly& ca = a.coeffs()[static_cast<size_t>(k)];
        const MPoly& cb = b.coeffs()[static_cast<size_t>(k)];
        if (ca != cb) return canonical_less(ca, cb);
    }
    return false;
}

} // namespace trichain
