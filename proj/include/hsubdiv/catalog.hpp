#pragma once

#include "hsubdiv/mask.hpp"
#include "hsubdiv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hsubdiv {

/// Interpolatory two-component Hermite scheme of Merrien type; support
/// [-1, 1], primal (tau hint 0). Reproduces degree 1 for every (lambda, mu),
/// degree 2 iff lambda = -1/8, degree 3 when additionally mu = -1/2.
HermiteMask merrien(const Rational& lambda, const Rational& mu);

/// de Rham transform of the Merrien scheme; support [-2, 1], dual
/// (tau hint -1/2).
HermiteMask derham(const Rational& lambda, const Rational& mu);

/// Interpolatory scheme on support {-3,-1,0,1,3} whose mirror-symmetric
/// coefficients are resolved from the two free parameters (b2, b3) so that
/// polynomials up to degree 5 are reproduced.
HermiteMask extended_interpolatory(const Rational& b2, const Rational& b3);

struct Primal3Params {
    Rational lambda1, lambda2, lambda3;
    Rational mu1, mu2, mu3;
    Rational eps1, eps2, eps3;
};

/// Primal interpolatory three-component scheme; support [-1, 1], A_0 = D.
HermiteMask primal3(const Primal3Params& p);

/// Resolves the six dependent parameters of the primal d=3 scheme from the
/// free triple (mu1, eps2, lambda2), giving degree-3 reproduction:
///   lambda1 = 1/2, eps1 = 0, mu2 = (1-mu1)/2, eps3 = (1-eps2)/2,
///   lambda3 = (-1-8 lambda2)/16, mu3 = (2 mu1 - 3)/24.
/// Two variants of the mu3 rule circulate (mu1-based vs mu2-based); they
/// agree only at mu1 = 1/3. Only the mu1-based rule passes the degree-3
/// certificate, so that is the one applied here.
Primal3Params degree3_constraints(const Rational& mu1, const Rational& eps2,
                                  const Rational& lambda2);

/// Variant with mu3 = (2 mu2 - 3)/24, kept so tests can demonstrate that it
/// fails the degree-3 certificate whenever mu1 != 1/3.
Primal3Params degree3_constraints_mu2_variant(const Rational& mu1, const Rational& eps2,
                                              const Rational& lambda2);

/// Families known to `catalog emit`.
std::vector<std::string> catalog_families();

/// Builds a catalog mask from a family name and named rational parameters.
/// Missing parameters fall back to the family's canonical instance; unknown
/// parameter names are rejected.
HermiteMask make_scheme(const std::string& family,
                        const std::map<std::string, Rational>& params);

} // namespace hsubdiv
