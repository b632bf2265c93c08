#pragma once

#include "hsubdiv/poly.hpp"
#include "hsubdiv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hsubdiv {

/// The product polynomial prod_{r=0}^{k-1} (2x + 2*shift - r); k = 0 gives
/// the constant 1. An integer grid offset i corresponds to shift = i/2, and
/// the parametrization tau enters as shift = tau (grid offset 2*tau).
Poly q_poly(int k, const Rational& shift);

/// Coefficients of q_poly(k, shift) composed with -x: values[n] is the
/// x^n coefficient. Computed by the three-case recursion over k.
struct GammaTable {
    int k = 0;
    Rational shift;
    Vec values; // size k + 1
};

GammaTable gamma_table(int k, const Rational& shift);

/// Shifted coefficient as a binomial sum over the shift-free table:
/// sum_{r=n}^{k} (-1)^{r+n} gamma_r^k C(r,n) shift^{r-n}.
/// Must agree with gamma_table(k, shift).values[n].
Rational gamma_shift_identity(int k, int n, const Rational& shift);

/// Triangular coefficient ladder. Family 1 rows run k = 1..kmax with entries
/// l = 1..k; family 2 rows run k = 2..kmax with entries l = 2..k.
struct AlphaTable {
    int family = 1;
    int kmax = 0;
    std::vector<Vec> rows;

    int first_k() const { return family; }
    const Rational& at(int k, int l) const;

    /// True when every entry has denominator 1; otherwise fills `offender`
    /// with a description of the first non-integer entry.
    bool all_integers(std::string* offender = nullptr) const;
};

/// Family-1 ladder from the defining recursion (the route the reproduction
/// checker uses).
AlphaTable alpha1(int kmax);

/// Family-1 ladder from the direct closed-form rules. Kept separate from
/// alpha1() and never fed into the checker; tests compare the two routes.
AlphaTable alpha1_closed(int kmax);

/// Family-2 ladder from its defining recursion (third component, d = 3).
AlphaTable alpha2(int kmax);

/// sum_{n=1}^{k} (-1)^n alpha1_{k,n} q_poly(k-n, shift); zero for k = 0.
Poly qtilde_poly(int k, const Rational& shift);

/// sum_{n=2}^{k} (-1)^n alpha2_{k,n} q_poly(k-n, shift); zero for k <= 1.
Poly qhat_poly(int k, const Rational& shift);

/// Right-hand side of the z = +1 reproduction condition at degree k.
struct RhsVector {
    int d = 2;
    int k = 1;
    Rational tau;
    Vec entries; // size d
};

/// Entry 1 is evaluated both as 2 q_{k,2tau}(-tau/2) and as the product
/// 2 prod_{r=0}^{k-1}(tau - r); a disagreement raises InternalError.
RhsVector rhs_vector(int d, int k, const Rational& tau);

} // namespace hsubdiv
