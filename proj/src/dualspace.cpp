#include "trichain/dualspace.hpp"

#include <map>

namespace trichain {

namespace {

using Exp = std::vector<int>;

void collect_coeffs(const MPoly& F, Exp& cur, std::map<Exp, Rational>& out) {
    if (F.is_constant()) {
        if (!F.is_zero()) out[cur] = F.constant_value();
        return;
    }
    for (int k = 0; k <= F.main_degree(); ++k) {
        if (F.coeff(k).is_zero()) continue;
        cur[static_cast<size_t>(F.top_var())] = k;
        collect_coeffs(F.coeff(k), cur, out);
        cur[static_cast<size_t>(F.top_var())] = 0;
    }
}

void enum_exps(size_t r, int total, Exp& cur, size_t pos, std::vector<Exp>& out) {
    if (pos == r) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur[pos] = k;
        enum_exps(r, total - k, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

std::vector<Exp> exponents_upto(size_t r, int k) {
    std::vector<Exp> out;
    Exp cur(r, 0);
    enum_exps(r, k, cur, 0, out);
    return out;
}

// Fraction-free (Bareiss) rank of an integer matrix.
int bareiss_rank(std::vector<std::vector<Integer>> M) {
    if (M.empty()) return 0;
    const size_t rows = M.size(), cols = M[0].size();
    size_t r = 0;
    Integer prev(1);
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && sgn(M[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Integer t = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int dual_space_dim(const std::vector<MPoly>& gens, const std::vector<Rational>& a, int cap) {
    if (gens.empty()) throw std::domain_error("dual_space_dim: no generators");
    const size_t r = a.size();
    for (const auto& g : gens)
        if (sgn(eval_rational(g, a)) != 0)
            throw std::domain_error("dual_space_dim: point is not a common zero");

    // translate so the zero sits at the origin; shifted coefficients are
    // exactly the functional values (the 1/j! in the operators cancels the
    // Taylor factorials)
    std::vector<std::map<Exp, Rational>> coeffs;
    for (const auto& g : gens) {
        MPoly t = shift(g, a);
        std::map<Exp, Rational> m;
        Exp cur(r, 0);
        collect_coeffs(t, cur, m);
        coeffs.push_back(std::move(m));
    }

    auto leq = [](const Exp& a_, const Exp& b_) {
        for (size_t i = 0; i < a_.size(); ++i)
            if (a_[i] > b_[i]) return false;
        return true;
    };

    int prev_nullity = 1;  // order 0: only the evaluation functional
    for (int k = 1; k <= cap; ++k) {
        std::vector<Exp> cols = exponents_upto(r, k);
        std::vector<std::vector<Integer>> M;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            for (const Exp& beta : cols) {  // shifts x^beta * g, |beta| <= k
                std::vector<Rational> row(cols.size(), Rational(0));
                bool nonzero = false;
                for (size_t cj = 0; cj < cols.size(); ++cj) {
                    if (!leq(beta, cols[cj])) continue;
                    Exp diff(r);
                    for (size_t i = 0; i < r; ++i) diff[i] = cols[cj][i] - beta[i];
                    auto it = coeffs[gi].find(diff);
                    if (it != coeffs[gi].end() && sgn(it->second) != 0) {
                        row[cj] = it->second;
                        nonzero = true;
                    }
                }
                if (!nonzero) continue;
                Integer l(1);
                for (const auto& q : row)
                    if (sgn(q) != 0) l = lcm(l, q.get_den());
                std::vector<Integer> irow(cols.size());
                for (size_t cj = 0; cj < cols.size(); ++cj) {
                    Rational t = row[cj] * l;
                    irow[cj] = t.get_num();
                }
                M.push_back(std::move(irow));
            }
        }
        int nullity = static_cast<int>(cols.size()) - bareiss_rank(std::move(M));
        if (nullity == prev_nullity) return nullity;
        prev_nullity = nullity;
    }
    throw DualSpaceCapError(
        "dual_space_dim: nullity did not stabilize within cap (last nullity " +
            std::to_string(prev_nullity) + "); input may not be zero-dimensional at the point",
        prev_nullity);
}

} // namespace trichain
