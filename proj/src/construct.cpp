#include "hsubdiv/construct.hpp"

#include "hsubdiv/cascade.hpp"
#include "hsubdiv/errors.hpp"
#include "hsubdiv/reproduction.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>

namespace hsubdiv {

std::vector<std::string> MaskTemplate::unknown_names() const {
    std::vector<std::string> names;
    for (const auto& [offset, cells] : entries) {
        (void)offset;
        for (const TemplateEntry& cell : cells) {
            if (!cell.name.empty() &&
                std::find(names.begin(), names.end(), cell.name) == names.end()) {
                names.push_back(cell.name);
            }
        }
    }
    return names;
}

namespace {

using json = nlohmann::ordered_json;

int parse_offset(const std::string& key) {
    int value = 0;
    const auto res = std::from_chars(key.data(), key.data() + key.size(), value);
    if (res.ec != std::errc() || res.ptr != key.data() + key.size()) {
        throw InputError("template offset key '" + key + "' is not a decimal integer");
    }
    return value;
}

TemplateEntry parse_entry(const std::string& text, int offset) {
    TemplateEntry e;
    std::string body = text;
    if (!body.empty() && body[0] == '-' && body.size() > 1 && body[1] == '?') {
        e.sign = -1;
        body = body.substr(1);
    }
    if (!body.empty() && body[0] == '?') {
        e.name = body.substr(1);
        if (e.name.empty()) {
            throw InputError("template entry at offset " + std::to_string(offset) +
                             " references an empty unknown name");
        }
        return e;
    }
    try {
        e.value = parse_rational(text);
    } catch (const InputError& err) {
        throw InputError("template entry at offset " + std::to_string(offset) + ": " +
                         err.what());
    }
    return e;
}

} // namespace

MaskTemplate load_template(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("template document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("template document must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "d" && key != "name" && key != "tau" && key != "matrices") {
            throw InputError("unknown field '" + key + "' in template document");
        }
    }
    if (!doc.contains("d") || !doc["d"].is_number_integer()) {
        throw InputError("template document needs an integer field \"d\"");
    }
    MaskTemplate tpl;
    tpl.d = doc["d"].get<int>();
    if (tpl.d != 2 && tpl.d != 3) {
        throw InputError("template order d must be 2 or 3, got " + std::to_string(tpl.d));
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw InputError("template field \"name\" must be a string");
        }
        tpl.name = doc["name"].get<std::string>();
    }
    if (doc.contains("tau")) {
        if (!doc["tau"].is_string()) {
            throw InputError("template field \"tau\" must be a rational string");
        }
        tpl.tau_hint = parse_rational(doc["tau"].get<std::string>());
    }
    if (!doc.contains("matrices") || !doc["matrices"].is_object()) {
        throw InputError("template document needs an object field \"matrices\"");
    }
    for (const auto& [key, rows] : doc["matrices"].items()) {
        const int offset = parse_offset(key);
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(tpl.d)) {
            throw InputError("template matrix at offset " + std::to_string(offset) +
                             " must have " + std::to_string(tpl.d) + " rows");
        }
        std::vector<TemplateEntry> cells;
        cells.reserve(static_cast<std::size_t>(tpl.d) * tpl.d);
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(tpl.d)) {
                throw InputError("template matrix at offset " + std::to_string(offset) +
                                 " must have " + std::to_string(tpl.d) + " columns per row");
            }
            for (const auto& cell : row) {
                if (!cell.is_string()) {
                    throw InputError("template entry at offset " + std::to_string(offset) +
                                     " must be a string");
                }
                cells.push_back(parse_entry(cell.get<std::string>(), offset));
            }
        }
        tpl.entries.emplace(offset, std::move(cells));
    }
    if (tpl.entries.empty()) {
        throw InputError("template has empty support");
    }
    return tpl;
}

HermiteMask instantiate(const MaskTemplate& tpl,
                        const std::map<std::string, Rational>& values) {
    HermiteMask mask;
    mask.d = tpl.d;
    mask.name = tpl.name;
    mask.tau_hint = tpl.tau_hint;
    for (const auto& [offset, cells] : tpl.entries) {
        Matrix m(tpl.d, tpl.d);
        for (int i = 0; i < tpl.d; ++i) {
            for (int j = 0; j < tpl.d; ++j) {
                const TemplateEntry& cell = cells[static_cast<std::size_t>(i) * tpl.d + j];
                if (cell.name.empty()) {
                    m(i, j) = cell.value;
                } else {
                    const auto it = values.find(cell.name);
                    if (it == values.end()) {
                        throw InputError("no value for template unknown '" + cell.name + "'");
                    }
                    m(i, j) = cell.sign * it->second;
                }
            }
        }
        mask.matrices.emplace(offset, std::move(m));
    }
    return mask;
}

namespace {

// All condition rows for one concrete mask, in the fixed row order. The
// conditions are linear in the mask entries, so build_system recovers the
// full system from evaluations at the zero point and at each unit vector.
struct ResidualRows {
    Vec values;
    std::vector<std::string> labels;
};

ResidualRows residual_rows(const HermiteMask& mask, const Rational& tau, int m) {
    ResidualRows out;
    const auto push = [&out](const Vec& v, const std::string& prefix) {
        for (std::size_t s = 0; s < v.size(); ++s) {
            out.values.push_back(v[s]);
            out.labels.push_back(prefix + ", component " + std::to_string(s + 1));
        }
    };
    const ConstantsCheck cc = check_constants(mask);
    push(cc.residual_minus, "constants z=-1");
    push(cc.residual_plus, "constants z=+1");
    for (int k = 1; k <= m; ++k) {
        const DegreeResidual r = degree_residual(mask, tau, k);
        push(r.minus, "degree " + std::to_string(k) + " z=-1");
        push(r.plus, "degree " + std::to_string(k) + " z=+1");
    }
    return out;
}

std::map<std::string, Rational> name_values(const std::vector<std::string>& names,
                                            const Vec& coords) {
    std::map<std::string, Rational> v;
    for (std::size_t i = 0; i < names.size(); ++i) {
        v[names[i]] = coords[i];
    }
    return v;
}

} // namespace

LinearSystem build_system(const MaskTemplate& tpl, const Rational& tau, int m) {
    if (m < 0) {
        throw InputError("build_system: target degree must be >= 0");
    }
    LinearSystem sys;
    sys.names = tpl.unknown_names();
    const std::size_t n = sys.names.size();

    const ResidualRows at_zero =
        residual_rows(instantiate(tpl, name_values(sys.names, zero_vec(static_cast<int>(n)))),
                      tau, m);
    sys.row_labels = at_zero.labels;
    const std::size_t rows = at_zero.values.size();

    sys.A = Matrix(static_cast<int>(rows), static_cast<int>(n));
    for (std::size_t c = 0; c < n; ++c) {
        Vec coords = zero_vec(static_cast<int>(n));
        coords[c] = 1;
        const ResidualRows at_unit =
            residual_rows(instantiate(tpl, name_values(sys.names, coords)), tau, m);
        for (std::size_t r = 0; r < rows; ++r) {
            sys.A(static_cast<int>(r), static_cast<int>(c)) =
                at_unit.values[r] - at_zero.values[r];
        }
    }
    sys.b = Vec(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        sys.b[r] = -at_zero.values[r];
    }
    return sys;
}

ConstructionResult construct(const MaskTemplate& tpl, const Rational& tau, int m,
                             const std::map<std::string, Rational>& bindings) {
    LinearSystem sys = build_system(tpl, tau, m);
    ConstructionResult res;
    res.constraints_used = sys.A.rows();

    for (const auto& [name, value] : bindings) {
        (void)value;
        if (std::find(sys.names.begin(), sys.names.end(), name) == sys.names.end()) {
            throw InputError("binding '" + name + "' does not name a template unknown");
        }
    }

    const LinearSolution unbound = solve_linear(sys.A, sys.b);
    if (unbound.kind == LinearSolution::Kind::Infeasible) {
        res.status = ConstructionResult::Status::Infeasible;
        res.infeasible_row = sys.row_labels[static_cast<std::size_t>(unbound.inconsistent_row)];
        return res;
    }
    for (int f : unbound.free_cols) {
        res.free_names.push_back(sys.names[static_cast<std::size_t>(f)]);
    }

    // Bindings enter as extra rows so that any unknown lying on the solution
    // manifold can be pinned, not just the elimination's free columns.
    Vec coords;
    if (bindings.empty()) {
        coords = unbound.particular; // free unknowns default to 0
    } else {
        const int n = sys.A.cols();
        Matrix A2(sys.A.rows() + static_cast<int>(bindings.size()), n);
        Vec b2 = sys.b;
        std::vector<std::string> labels2 = sys.row_labels;
        for (int r = 0; r < sys.A.rows(); ++r) {
            for (int c = 0; c < n; ++c) {
                A2(r, c) = sys.A(r, c);
            }
        }
        int r = sys.A.rows();
        for (const auto& [name, value] : bindings) {
            const auto it = std::find(sys.names.begin(), sys.names.end(), name);
            A2(r, static_cast<int>(it - sys.names.begin())) = 1;
            b2.push_back(value);
            labels2.push_back("binding " + name + " = " + to_string(value));
            ++r;
        }
        const LinearSolution bound = solve_linear(A2, b2);
        if (bound.kind == LinearSolution::Kind::Infeasible) {
            res.status = ConstructionResult::Status::Infeasible;
            res.infeasible_row = labels2[static_cast<std::size_t>(bound.inconsistent_row)];
            return res;
        }
        coords = bound.particular; // any unknowns still free default to 0
    }

    res.status = unbound.kind == LinearSolution::Kind::Unique
                     ? ConstructionResult::Status::Solved
                     : ConstructionResult::Status::Parametric;
    res.solution = name_values(sys.names, coords);
    HermiteMask mask = instantiate(tpl, res.solution);
    mask.tau_hint = tau;

    // Self-verification: the emitted mask must certify at least degree m and
    // survive the cascade oracle. Failure here is a bug, never a result.
    const ReproductionReport rep = certify(mask, tau, std::max(m, 1));
    if (!rep.certified_degree || *rep.certified_degree < m) {
        throw InternalError("constructed mask fails its own certificate at degree " +
                            std::to_string(m));
    }
    const int halfwidth = 4 * (mask.hi() - mask.lo() + 2);
    const OracleResult oracle = oracle_reproduces(mask, tau, m, 2, -halfwidth, halfwidth);
    if (!oracle.pass) {
        throw InternalError("constructed mask fails the cascade oracle at degree " +
                            std::to_string(m));
    }
    res.mask = std::move(mask);
    return res;
}

} // namespace hsubdiv
