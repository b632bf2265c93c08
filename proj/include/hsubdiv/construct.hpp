#pragma once

#include "hsubdiv/linalg.hpp"
#include "hsubdiv/mask.hpp"
#include "hsubdiv/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hsubdiv {

/// One matrix entry of a template: a fixed rational, or a signed reference
/// to a named unknown ("?name" / "-?name" in the JSON form).
struct TemplateEntry {
    Rational value;   // used when name is empty
    std::string name; // unknown reference when nonempty
    int sign = 1;
};

/// Mask with unknown entries. Unknown names are ordered by first appearance
/// scanning offsets ascending, rows then columns; a repeated name ties
/// entries together (mirrored coefficients).
struct MaskTemplate {
    int d = 2;
    std::map<int, std::vector<TemplateEntry>> entries; // row-major d*d per offset
    std::string name;
    std::optional<Rational> tau_hint;

    std::vector<std::string> unknown_names() const;
};

/// Template JSON mirrors the mask document; entries are "p/q", "?name" or
/// "-?name".
MaskTemplate load_template(const std::string& json_text);

HermiteMask instantiate(const MaskTemplate& tpl,
                        const std::map<std::string, Rational>& values);

/// The reproduction conditions through degree m as one linear system over
/// the template unknowns. Row order: constants at z=-1 then z=+1, then for
/// each k = 1..m the z=-1 block before the z=+1 block, components ascending.
struct LinearSystem {
    Matrix A;
    Vec b;
    std::vector<std::string> names;      // column order
    std::vector<std::string> row_labels; // one label per row
};

LinearSystem build_system(const MaskTemplate& tpl, const Rational& tau, int m);

struct ConstructionResult {
    enum class Status { Solved, Parametric, Infeasible };
    Status status = Status::Infeasible;
    std::optional<HermiteMask> mask;
    std::map<std::string, Rational> solution; // full name -> value binding
    std::vector<std::string> free_names;      // free unknowns before binding
    int constraints_used = 0;
    std::string infeasible_row; // label of the offending condition
};

/// Solves the degree-m system, applies the caller's bindings as extra
/// equations, defaults any remaining free unknowns to 0 and emits the mask.
/// Every emitted mask is re-checked with the certificate and the cascade
/// oracle; a failure there raises InternalError.
ConstructionResult construct(const MaskTemplate& tpl, const Rational& tau, int m,
                             const std::map<std::string, Rational>& bindings = {});

} // namespace hsubdiv
