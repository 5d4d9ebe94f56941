/*
 * mpoly.hpp
 * Exact multivariate polynomials over Q, recursive dense by main variable.
 *
 * An MPoly is either a rational constant or a dense coefficient vector in
 * its main (highest) variable, each coefficient an MPoly in strictly lower
 * variables. The representation is always canonical: top coefficient
 * nonzero, a degree-0 vector collapses to the coefficient itself. All
 * values are immutable after construction and every operation is a pure
 * function, so sharing across threads is safe.
 */
#ifndef TRICHAIN_MPOLY_HPP
#define TRICHAIN_MPOLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "trichain/rational.hpp"
#include "trichain/varorder.hpp"

namespace trichain {

class MPoly {
public:
    MPoly() : cst_(0) {}
    MPoly(long c) : cst_(c) {}
    MPoly(int c) : cst_(c) {}
    MPoly(Rational c) : cst_(std::move(c)) {}

    static MPoly variable(int var);
    /// Sum of cs[k]*x_var^k; trims top zeros, collapses degree 0.
    /// Coefficients must involve only variables < var.
    static MPoly from_coeffs(int var, std::vector<MPoly> cs);

    bool is_zero() const { return var_ < 0 && sgn(cst_) == 0; }
    bool is_constant() const { return var_ < 0; }
    bool is_one() const { return var_ < 0 && cst_ == 1; }
    const Rational& constant_value() const;

    /// Index of the leading variable; -1 for constants.
    int top_var() const { return var_; }
    /// Degree in the main variable (0 for constants).
    int main_degree() const { return var_ < 0 ? 0 : static_cast<int>(coeffs_.size()) - 1; }
    const MPoly& coeff(int k) const;             // coefficient of main_var^k
    const std::vector<MPoly>& coeffs() const { return coeffs_; }

    int degree_in(int v) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

private:
    int var_ = -1;
    Rational cst_;
    std::vector<MPoly> coeffs_;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a);
MPoly pow(const MPoly& a, long e);               // e < 0 -> domain error

struct LeadingData {
    int var;        // lv(F)
    int degree;     // deg(F, lv)
    MPoly initial;  // ini(F)
};
/// lv / deg / ini of a non-constant polynomial; constants -> domain error.
LeadingData leading_data(const MPoly& F);

/// Coefficient of v^k in F, for any variable v (F may have higher ones).
MPoly coeff_in(const MPoly& F, int v, int k);

struct PseudoDiv {
    MPoly quo, rem;
    int e;  // ini(G)^e * F = quo*G + rem, lazy minimal e
};
/// Pseudo-division of F by G in variable v = lv(G); deg(G, v) = 0 -> domain error.
PseudoDiv pseudo_divide(const MPoly& F, const MPoly& G, int v);

MPoly derivative(const MPoly& F, int v);

/// Exact evaluation over Q(i); point indexed by variable, must cover all
/// variables of F (shorter vector -> domain error).
GaussianRational eval(const MPoly& F, const std::vector<GaussianRational>& point);
Rational eval_rational(const MPoly& F, const std::vector<Rational>& point);

/// Partial evaluation x_v := a.
MPoly substitute(const MPoly& F, int v, const Rational& a);
/// Translation x_i := x_i + a_i for all variables.
MPoly shift(const MPoly& F, const std::vector<Rational>& a);

/// Scale F by a nonzero rational so coefficients are coprime integers and
/// the recursively-leading coefficient is positive. F = 0 -> domain error.
MPoly primitive_normalize(const MPoly& F);
/// The rational c with F = c * primitive_normalize(F).
Rational rational_content(const MPoly& F);

std::string to_string(const MPoly& F, const VarOrder& order);

/// Deterministic total order (used only for stable sorting).
bool canonical_less(const MPoly& a, const MPoly& b);

} // namespace trichain

#endif
