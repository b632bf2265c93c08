#pragma once

#include "hsubdiv/linalg.hpp"
#include "hsubdiv/mask.hpp"
#include "hsubdiv/poly.hpp"
#include "hsubdiv/rational.hpp"

#include <optional>
#include <vector>

namespace hsubdiv {

/// Window of Hermite data f(j) for j = base .. base + size - 1 at a
/// refinement level; each value is a d-vector (function value followed by
/// derivative values).
struct HermiteSequence {
    int d = 2;
    int level = 0;
    int base = 0;
    std::vector<Vec> values;

    int size() const { return static_cast<int>(values.size()); }
    int last() const { return base + size() - 1; }
    const Vec& at(int j) const { return values[static_cast<std::size_t>(j - base)]; }
    Vec& at(int j) { return values[static_cast<std::size_t>(j - base)]; }
};

/// Diagonal scaling entry for 1-based component s: 2^{-(s-1)}.
Rational diag_scale_entry(int s);

/// One exact refinement step D^{n+1} f_{n+1}(i) = sum_j A_{i-2j} D^n f_n(j).
/// The output window shrinks so every computed index only reads data inside
/// the input window; nothing is ever zero-padded. Throws InputError naming
/// the required width when no output index survives.
HermiteSequence refine(const HermiteMask& mask, const HermiteSequence& seq);

/// Level-0 Hermite samples of p attached at j + tau:
/// f(j) = [p(j+tau), p'(j+tau), (p''(j+tau) when d = 3)].
HermiteSequence sample_poly(const Poly& p, int d, const Rational& tau, int lo, int hi);

struct OracleFailure {
    int degree = 0; // monomial degree that failed
    int level = 0;
    int index = 0;
    Vec expected;
    Vec got;
};

struct OracleResult {
    bool pass = false;
    std::optional<OracleFailure> failure;
};

/// Brute-force reproduction check: refines Hermite samples of each monomial
/// 1, x, ..., x^m through `levels` steps and compares every surviving entry
/// against the exact samples at (j+tau)/2^level. Fully independent of the
/// symbol-condition checker.
OracleResult oracle_reproduces(const HermiteMask& mask, const Rational& tau, int degree,
                               int levels, int lo, int hi);

struct LimitSample {
    Rational t;
    Vec value;
};

/// Cascade samples of the basic limit function for initial data e_s at index
/// 0 and zero elsewhere: pairs ((i+tau)/2^levels, f_levels(i)). component is
/// 1-based. tau defaults to the mask's tau hint, then 0.
std::vector<LimitSample> basic_limit_samples(const HermiteMask& mask, int component, int levels,
                                             std::optional<Rational> tau = std::nullopt);

} // namespace hsubdiv
