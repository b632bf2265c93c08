#pragma once

#include "hsubdiv/linalg.hpp"
#include "hsubdiv/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace hsubdiv {

/// Finitely supported sequence of d x d rational matrices indexed by integer
/// offsets. Offsets absent from the map are zero matrices.
struct HermiteMask {
    int d = 2;
    std::map<int, Matrix> matrices;
    std::string name;
    std::optional<Rational> tau_hint;

    int lo() const;
    int hi() const;
    Matrix coeff(int l) const; // stored matrix or zero

    /// Checks d in {2,3}, square d x d matrices and nonempty support.
    /// Throws InputError.
    void validate_shape() const;

    /// validate_shape plus the requirement of at least one nonzero matrix
    /// (the document invariant; the refinement step needs a support too).
    void validate() const;
};

enum class Parity { Even, Odd };

/// k-th symbol derivative sum_l (l)(l-1)...(l-k+1) A_l z^{l-k}, evaluated
/// exactly. z is restricted to +1 or -1; the reproduction conditions need
/// nothing else.
Matrix symbol_deriv(const HermiteMask& mask, int k, int z);

/// Same sum restricted to even or odd offsets.
Matrix subsymbol_deriv(const HermiteMask& mask, Parity parity, int k, int z);

/// Mask JSON document:
///   { "d": 2, "name": "merrien", "tau": "0",
///     "matrices": { "-1": [["1/2","-1/8"],["3/4","-1/8"]], ... } }
/// "name" and "tau" are optional; entries are rational literals; keys are
/// decimal integer offsets; unknown fields are rejected.
HermiteMask load_mask(const std::string& json_text);
std::string save_mask(const HermiteMask& mask);

/// Shifts the whole support: result has B_l = A_{l-offset}.
HermiteMask shift_mask(const HermiteMask& mask, int offset);

} // namespace hsubdiv
