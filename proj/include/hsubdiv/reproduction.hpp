#pragma once

#include "hsubdiv/linalg.hpp"
#include "hsubdiv/mask.hpp"
#include "hsubdiv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hsubdiv {

/// Constant-reproduction test: A(-1) e1 = 0 and A(1) e1 = 2 e1.
struct ConstantsCheck {
    bool ok = false;
    Vec residual_minus; // A(-1) e1
    Vec residual_plus;  // A(1) e1 - 2 e1
};

ConstantsCheck check_constants(const HermiteMask& mask);

/// Residuals of the degree-k conditions. The degree passes iff both vectors
/// are exactly zero; no tolerances exist anywhere.
struct DegreeResidual {
    int k = 0;
    Vec minus; // left side of the z = -1 condition
    Vec plus;  // left side of the z = +1 condition minus the rhs vector

    bool passed() const { return vec_is_zero(minus) && vec_is_zero(plus); }
};

DegreeResidual degree_residual(const HermiteMask& mask, const Rational& tau, int k);

/// Parametrization from the first component of the degree-1 condition at
/// z = +1: 2 tau = (A'(1))_{11} - 2 (A(1))_{12}.
/// Throws InputError when the mask does not reproduce constants.
Rational infer_tau(const HermiteMask& mask);

struct ReproductionReport {
    int d = 2;
    Rational tau;
    bool tau_inferred = false;
    ConstantsCheck constants;
    std::vector<DegreeResidual> residuals;       // k = 1..kmax, even past failures
    std::optional<int> certified_degree;         // nullopt when constants fail
    std::optional<std::string> tau_hint_note;    // set when tau_hint disagrees
};

/// Runs the reproduction conditions for k = 1..kmax. When tau is omitted it
/// is inferred (and that error path propagates). certified_degree is the
/// longest passing prefix; residuals past the first failure are still
/// recorded for diagnostics.
ReproductionReport certify(const HermiteMask& mask,
                           std::optional<Rational> tau = std::nullopt,
                           int kmax = 8);

std::string report_to_text(const ReproductionReport& report);
std::string report_to_json(const ReproductionReport& report);

} // namespace hsubdiv
