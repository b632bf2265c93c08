#include "hsubdiv/reproduction.hpp"

#include "hsubdiv/errors.hpp"
#include "hsubdiv/families.hpp"

#include <json.hpp>

#include <sstream>

namespace hsubdiv {

ConstantsCheck check_constants(const HermiteMask& mask) {
    mask.validate_shape();
    ConstantsCheck c;
    c.residual_minus = symbol_deriv(mask, 0, -1).column(0);
    Vec plus = symbol_deriv(mask, 0, 1).column(0);
    plus[0] -= 2;
    c.residual_plus = std::move(plus);
    c.ok = vec_is_zero(c.residual_minus) && vec_is_zero(c.residual_plus);
    return c;
}

DegreeResidual degree_residual(const HermiteMask& mask, const Rational& tau, int k) {
    if (k < 1) {
        throw InputError("degree_residual: k must be >= 1");
    }
    mask.validate_shape();
    const int d = mask.d;
    const AlphaTable a1 = alpha1(k);
    // alpha2 rows exist from k = 2 on; for k = 1 the third-component sum is empty.
    std::optional<AlphaTable> a2;
    if (d == 3 && k >= 2) {
        a2 = alpha2(k);
    }

    DegreeResidual r;
    r.k = k;
    r.minus = symbol_deriv(mask, k, -1).column(0);
    r.plus = symbol_deriv(mask, k, 1).column(0);
    for (int l = 1; l <= k; ++l) {
        const Rational& a = a1.at(k, l);
        const int sign = (l % 2 == 0) ? 1 : -1;
        r.minus = vec_add(r.minus, vec_scale(a, symbol_deriv(mask, k - l, -1).column(1)));
        r.plus = vec_add(r.plus, vec_scale(sign * a, symbol_deriv(mask, k - l, 1).column(1)));
    }
    if (a2) {
        for (int l = 2; l <= k; ++l) {
            const Rational& a = a2->at(k, l);
            const int sign = (l % 2 == 0) ? 1 : -1;
            r.minus = vec_add(r.minus, vec_scale(a, symbol_deriv(mask, k - l, -1).column(2)));
            r.plus = vec_add(r.plus, vec_scale(sign * a, symbol_deriv(mask, k - l, 1).column(2)));
        }
    }
    r.plus = vec_sub(r.plus, rhs_vector(d, k, tau).entries);
    return r;
}

Rational infer_tau(const HermiteMask& mask) {
    if (!check_constants(mask).ok) {
        throw InputError("cannot infer tau: the mask does not reproduce constants");
    }
    const Matrix a1 = symbol_deriv(mask, 1, 1);
    const Matrix a0 = symbol_deriv(mask, 0, 1);
    return (a1(0, 0) - 2 * a0(0, 1)) / 2;
}

ReproductionReport certify(const HermiteMask& mask, std::optional<Rational> tau, int kmax) {
    if (kmax < 0) {
        throw InputError("certify: kmax must be >= 0");
    }
    mask.validate_shape();
    ReproductionReport rep;
    rep.d = mask.d;
    rep.constants = check_constants(mask);
    if (tau) {
        rep.tau = *tau;
    } else {
        rep.tau = infer_tau(mask); // throws when constants fail
        rep.tau_inferred = true;
    }
    if (mask.tau_hint && *mask.tau_hint != rep.tau) {
        rep.tau_hint_note = "mask tau hint " + to_string(*mask.tau_hint) + " differs from " +
                            (rep.tau_inferred ? "inferred" : "given") + " tau " +
                            to_string(rep.tau);
    }
    for (int k = 1; k <= kmax; ++k) {
        rep.residuals.push_back(degree_residual(mask, rep.tau, k));
    }
    if (rep.constants.ok) {
        int certified = 0;
        for (const DegreeResidual& r : rep.residuals) {
            if (!r.passed()) {
                break;
            }
            certified = r.k;
        }
        rep.certified_degree = certified;
    }
    return rep;
}

namespace {

std::string vec_to_text(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += to_string(v[i]);
    }
    return out + "]";
}

nlohmann::ordered_json vec_to_json(const Vec& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const Rational& x : v) {
        arr.push_back(to_string(x));
    }
    return arr;
}

} // namespace

std::string report_to_text(const ReproductionReport& report) {
    std::ostringstream os;
    os << "d: " << report.d << "\n";
    os << "tau: " << to_string(report.tau) << (report.tau_inferred ? " (inferred)" : "") << "\n";
    if (report.tau_hint_note) {
        os << "note: " << *report.tau_hint_note << "\n";
    }
    os << "constants: " << (report.constants.ok ? "ok" : "FAIL") << "  residual z=-1 "
       << vec_to_text(report.constants.residual_minus) << ", z=+1 "
       << vec_to_text(report.constants.residual_plus) << "\n";
    for (const DegreeResidual& r : report.residuals) {
        os << "k=" << r.k << "  z=-1 " << vec_to_text(r.minus) << "  z=+1 " << vec_to_text(r.plus)
           << "  " << (r.passed() ? "pass" : "fail") << "\n";
    }
    if (report.certified_degree) {
        os << "certified degree: " << *report.certified_degree << "\n";
    } else {
        os << "certified degree: none (constants not reproduced)\n";
    }
    return os.str();
}

std::string report_to_json(const ReproductionReport& report) {
    nlohmann::ordered_json doc;
    doc["d"] = report.d;
    doc["tau"] = to_string(report.tau);
    doc["tau_inferred"] = report.tau_inferred;
    if (report.tau_hint_note) {
        doc["tau_hint_note"] = *report.tau_hint_note;
    }
    doc["constants"] = {{"ok", report.constants.ok},
                        {"residual_minus", vec_to_json(report.constants.residual_minus)},
                        {"residual_plus", vec_to_json(report.constants.residual_plus)}};
    auto rows = nlohmann::ordered_json::array();
    for (const DegreeResidual& r : report.residuals) {
        rows.push_back({{"k", r.k},
                        {"minus", vec_to_json(r.minus)},
                        {"plus", vec_to_json(r.plus)},
                        {"passed", r.passed()}});
    }
    doc["residuals"] = std::move(rows);
    if (report.certified_degree) {
        doc["certified_degree"] = *report.certified_degree;
    } else {
        doc["certified_degree"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

} // namespace hsubdiv
