#include "hsubdiv/cascade.hpp"
#include "hsubdiv/catalog.hpp"
#include "hsubdiv/construct.hpp"
#include "hsubdiv/errors.hpp"
#include "hsubdiv/families.hpp"
#include "hsubdiv/mask.hpp"
#include "hsubdiv/reproduction.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using hsubdiv::HermiteMask;
using hsubdiv::Rational;

// Rationals cross the boundary as "p/q" strings so exactness survives;
// Python callers can wrap them in fractions.Fraction.
Rational to_rat(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) {
        return hsubdiv::parse_rational(py::str(obj).cast<std::string>());
    }
    return hsubdiv::parse_rational(obj.cast<std::string>());
}

std::optional<Rational> to_opt_rat(const py::object& obj) {
    if (obj.is_none()) {
        return std::nullopt;
    }
    return to_rat(obj);
}

py::list vec_to_list(const hsubdiv::Vec& v) {
    py::list out;
    for (const Rational& x : v) {
        out.append(hsubdiv::to_string(x));
    }
    return out;
}

py::list matrix_to_list(const hsubdiv::Matrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) {
            row.append(hsubdiv::to_string(m(i, j)));
        }
        rows.append(row);
    }
    return rows;
}

py::list alpha_to_list(const hsubdiv::AlphaTable& t) {
    py::list rows;
    for (int k = t.first_k(); k <= t.kmax; ++k) {
        py::list row;
        for (int l = t.family; l <= k; ++l) {
            row.append(hsubdiv::to_string(t.at(k, l)));
        }
        rows.append(row);
    }
    return rows;
}

py::dict report_to_dict(const hsubdiv::ReproductionReport& rep) {
    py::dict d;
    d["d"] = rep.d;
    d["tau"] = hsubdiv::to_string(rep.tau);
    d["tau_inferred"] = rep.tau_inferred;
    py::dict constants;
    constants["ok"] = rep.constants.ok;
    constants["residual_minus"] = vec_to_list(rep.constants.residual_minus);
    constants["residual_plus"] = vec_to_list(rep.constants.residual_plus);
    d["constants"] = constants;
    py::list residuals;
    for (const auto& r : rep.residuals) {
        py::dict row;
        row["k"] = r.k;
        row["minus"] = vec_to_list(r.minus);
        row["plus"] = vec_to_list(r.plus);
        row["passed"] = r.passed();
        residuals.append(row);
    }
    d["residuals"] = residuals;
    if (rep.certified_degree) {
        d["certified_degree"] = *rep.certified_degree;
    } else {
        d["certified_degree"] = py::none();
    }
    if (rep.tau_hint_note) {
        d["tau_hint_note"] = *rep.tau_hint_note;
    }
    return d;
}

std::map<std::string, Rational> to_rat_map(const py::dict& d) {
    std::map<std::string, Rational> out;
    for (const auto& item : d) {
        out[item.first.cast<std::string>()] = to_rat(py::reinterpret_borrow<py::object>(item.second));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(hsubdiv, m) {
    m.doc() = "Exact polynomial-reproduction certificates for binary Hermite subdivision "
              "schemes (orders d=2,3)";

    py::register_exception<hsubdiv::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<hsubdiv::InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<HermiteMask>(m, "Mask")
        .def_readonly("d", &HermiteMask::d)
        .def_readonly("name", &HermiteMask::name)
        .def_property_readonly("lo", &HermiteMask::lo)
        .def_property_readonly("hi", &HermiteMask::hi)
        .def_property_readonly("tau_hint",
                               [](const HermiteMask& mask) -> py::object {
                                   if (!mask.tau_hint) {
                                       return py::none();
                                   }
                                   return py::str(hsubdiv::to_string(*mask.tau_hint));
                               })
        .def("coeff", [](const HermiteMask& mask, int l) { return matrix_to_list(mask.coeff(l)); },
             py::arg("offset"))
        .def("to_json", &hsubdiv::save_mask)
        .def("__repr__", [](const HermiteMask& mask) {
            return "<Mask " + (mask.name.empty() ? std::string("unnamed") : mask.name) +
                   " d=" + std::to_string(mask.d) + " support=[" + std::to_string(mask.lo()) +
                   "," + std::to_string(mask.hi()) + "]>";
        });

    m.def("load_mask", &hsubdiv::load_mask, py::arg("json_text"));
    m.def("save_mask", &hsubdiv::save_mask, py::arg("mask"));

    m.def(
        "merrien",
        [](const py::object& lam, const py::object& mu) {
            return hsubdiv::merrien(to_rat(lam), to_rat(mu));
        },
        py::arg("lam") = "-1/8", py::arg("mu") = "-1/2");
    m.def(
        "derham",
        [](const py::object& lam, const py::object& mu) {
            return hsubdiv::derham(to_rat(lam), to_rat(mu));
        },
        py::arg("lam") = "-1/8", py::arg("mu") = "-1/2");
    m.def(
        "extended",
        [](const py::object& b2, const py::object& b3) {
            return hsubdiv::extended_interpolatory(to_rat(b2), to_rat(b3));
        },
        py::arg("b2") = "1/384", py::arg("b3") = "0");
    m.def(
        "primal3",
        [](const py::object& mu1, const py::object& eps2, const py::object& lambda2) {
            return hsubdiv::primal3(
                hsubdiv::degree3_constraints(to_rat(mu1), to_rat(eps2), to_rat(lambda2)));
        },
        py::arg("mu1") = "1/3", py::arg("eps2") = "1/5", py::arg("lambda2") = "1/7",
        "Primal order-3 scheme with the dependent parameters resolved for degree-3 "
        "reproduction");
    m.def("make_scheme",
          [](const std::string& family, const py::dict& params) {
              return hsubdiv::make_scheme(family, to_rat_map(params));
          },
          py::arg("family"), py::arg("params") = py::dict());

    m.def(
        "symbol_deriv",
        [](const HermiteMask& mask, int k, int z) {
            return matrix_to_list(hsubdiv::symbol_deriv(mask, k, z));
        },
        py::arg("mask"), py::arg("k"), py::arg("z"));

    m.def("infer_tau",
          [](const HermiteMask& mask) { return hsubdiv::to_string(hsubdiv::infer_tau(mask)); });

    m.def(
        "certify",
        [](const HermiteMask& mask, const py::object& tau, int kmax) {
            return report_to_dict(hsubdiv::certify(mask, to_opt_rat(tau), kmax));
        },
        py::arg("mask"), py::arg("tau") = py::none(), py::arg("kmax") = 8);

    m.def(
        "oracle_reproduces",
        [](const HermiteMask& mask, const py::object& tau, int degree, int levels, int lo,
           int hi) {
            const auto res =
                hsubdiv::oracle_reproduces(mask, to_rat(tau), degree, levels, lo, hi);
            py::dict out;
            out["pass"] = res.pass;
            if (res.failure) {
                py::dict f;
                f["monomial_degree"] = res.failure->degree;
                f["level"] = res.failure->level;
                f["index"] = res.failure->index;
                f["expected"] = vec_to_list(res.failure->expected);
                f["got"] = vec_to_list(res.failure->got);
                out["failure"] = f;
            }
            return out;
        },
        py::arg("mask"), py::arg("tau"), py::arg("degree"), py::arg("levels"), py::arg("lo"),
        py::arg("hi"));

    m.def(
        "basic_limit_samples",
        [](const HermiteMask& mask, int component, int levels, const py::object& tau) {
            py::list out;
            for (const auto& s :
                 hsubdiv::basic_limit_samples(mask, component, levels, to_opt_rat(tau))) {
                out.append(py::make_tuple(hsubdiv::to_string(s.t), vec_to_list(s.value)));
            }
            return out;
        },
        py::arg("mask"), py::arg("component"), py::arg("levels"), py::arg("tau") = py::none());

    m.def("alpha1", [](int kmax) { return alpha_to_list(hsubdiv::alpha1(kmax)); }, py::arg("kmax"));
    m.def("alpha1_closed", [](int kmax) { return alpha_to_list(hsubdiv::alpha1_closed(kmax)); },
          py::arg("kmax"));
    m.def("alpha2", [](int kmax) { return alpha_to_list(hsubdiv::alpha2(kmax)); }, py::arg("kmax"));
    m.def(
        "gamma_table",
        [](int k, const py::object& shift) {
            return vec_to_list(hsubdiv::gamma_table(k, to_rat(shift)).values);
        },
        py::arg("k"), py::arg("shift") = 0);
    m.def(
        "rhs_vector",
        [](int d, int k, const py::object& tau) {
            return vec_to_list(hsubdiv::rhs_vector(d, k, to_rat(tau)).entries);
        },
        py::arg("d"), py::arg("k"), py::arg("tau"));

    m.def(
        "construct",
        [](const std::string& template_json, const py::object& tau, int degree,
           const py::dict& bindings) {
            const auto tpl = hsubdiv::load_template(template_json);
            const auto res =
                hsubdiv::construct(tpl, to_rat(tau), degree, to_rat_map(bindings));
            py::dict out;
            out["status"] = res.status == hsubdiv::ConstructionResult::Status::Solved
                                ? "solved"
                                : res.status == hsubdiv::ConstructionResult::Status::Parametric
                                      ? "parametric"
                                      : "infeasible";
            out["free_names"] = res.free_names;
            out["constraints_used"] = res.constraints_used;
            if (res.status == hsubdiv::ConstructionResult::Status::Infeasible) {
                out["inconsistent_row"] = res.infeasible_row;
            } else {
                py::dict sol;
                for (const auto& [name, value] : res.solution) {
                    sol[py::str(name)] = hsubdiv::to_string(value);
                }
                out["solution"] = sol;
                out["mask"] = *res.mask;
            }
            return out;
        },
        py::arg("template_json"), py::arg("tau"), py::arg("degree"),
        py::arg("bindings") = py::dict());
}
