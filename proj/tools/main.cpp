#include "hsubdiv/cascade.hpp"
#include "hsubdiv/catalog.hpp"
#include "hsubdiv/construct.hpp"
#include "hsubdiv/errors.hpp"
#include "hsubdiv/families.hpp"
#include "hsubdiv/mask.hpp"
#include "hsubdiv/reproduction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using hsubdiv::InputError;
using hsubdiv::InternalError;
using hsubdiv::Rational;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write file: " + path);
    }
    out << content;
}

json vec_json(const hsubdiv::Vec& v) {
    json arr = json::array();
    for (const Rational& x : v) {
        arr.push_back(hsubdiv::to_string(x));
    }
    return arr;
}

std::string vec_text(const hsubdiv::Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += hsubdiv::to_string(v[i]);
    }
    return out + "]";
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> params;
    for (const std::string& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InputError("parameter '" + item + "' is not of the form name=p/q");
        }
        params[item.substr(0, eq)] = hsubdiv::parse_rational(item.substr(eq + 1));
    }
    return params;
}

std::string decimal17(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", hsubdiv::to_double(r));
    return buf;
}

struct CheckArgs {
    std::string mask_file;
    std::string tau;
    int max_degree = 8;
    bool as_json = false;
};

int run_check(const CheckArgs& a) {
    const hsubdiv::HermiteMask mask = hsubdiv::load_mask(read_file(a.mask_file));
    std::optional<Rational> tau;
    if (!a.tau.empty()) {
        tau = hsubdiv::parse_rational(a.tau);
    }
    const auto report = hsubdiv::certify(mask, tau, a.max_degree);
    std::cout << (a.as_json ? hsubdiv::report_to_json(report)
                            : hsubdiv::report_to_text(report));
    return 0;
}

struct OracleArgs {
    std::string mask_file;
    int degree = 0;
    int levels = 3;
    std::vector<int> window;
    std::string tau;
    bool as_json = false;
};

int run_oracle(const OracleArgs& a) {
    const hsubdiv::HermiteMask mask = hsubdiv::load_mask(read_file(a.mask_file));
    const Rational tau = a.tau.empty() ? hsubdiv::infer_tau(mask) : hsubdiv::parse_rational(a.tau);
    const auto res =
        hsubdiv::oracle_reproduces(mask, tau, a.degree, a.levels, a.window[0], a.window[1]);
    if (a.as_json) {
        json doc;
        doc["pass"] = res.pass;
        doc["degree"] = a.degree;
        doc["levels"] = a.levels;
        doc["tau"] = hsubdiv::to_string(tau);
        if (res.failure) {
            doc["failure"] = {{"monomial_degree", res.failure->degree},
                              {"level", res.failure->level},
                              {"index", res.failure->index},
                              {"expected", vec_json(res.failure->expected)},
                              {"got", vec_json(res.failure->got)}};
        }
        std::cout << doc.dump(2) << "\n";
    } else if (res.pass) {
        std::cout << "PASS: degree " << a.degree << " reproduced through " << a.levels
                  << " levels (tau " << hsubdiv::to_string(tau) << ")\n";
    } else {
        const auto& f = *res.failure;
        std::cout << "FAIL at level " << f.level << ", index " << f.index << ", monomial x^"
                  << f.degree << ": expected " << vec_text(f.expected) << ", got "
                  << vec_text(f.got) << "\n";
    }
    return 0;
}

struct LimitArgs {
    std::string mask_file;
    int component = 1;
    int levels = 5;
    std::string out_file;
    std::string tau;
    bool decimal = false;
};

int run_limit(const LimitArgs& a) {
    const hsubdiv::HermiteMask mask = hsubdiv::load_mask(read_file(a.mask_file));
    std::optional<Rational> tau;
    if (!a.tau.empty()) {
        tau = hsubdiv::parse_rational(a.tau);
    }
    const auto samples = hsubdiv::basic_limit_samples(mask, a.component, a.levels, tau);
    std::ostringstream os;
    os << "t,f,f1";
    if (mask.d == 3) {
        os << ",f2";
    }
    os << "\n";
    for (const auto& s : samples) {
        if (a.decimal) {
            os << decimal17(s.t);
            for (const Rational& x : s.value) {
                os << "," << decimal17(x);
            }
        } else {
            os << hsubdiv::to_string(s.t);
            for (const Rational& x : s.value) {
                os << "," << hsubdiv::to_string(x);
            }
        }
        os << "\n";
    }
    write_file(a.out_file, os.str());
    std::cout << "wrote " << samples.size() << " samples to " << a.out_file << "\n";
    return 0;
}

struct ConstructArgs {
    std::string template_file;
    std::string tau = "0";
    int degree = 0;
    std::vector<std::string> bindings;
    std::string out_file;
    bool as_json = false;
};

int run_construct(const ConstructArgs& a) {
    const auto tpl = hsubdiv::load_template(read_file(a.template_file));
    const Rational tau = hsubdiv::parse_rational(a.tau);
    const auto bindings = parse_params(a.bindings);
    const auto res = hsubdiv::construct(tpl, tau, a.degree, bindings);

    if (a.as_json) {
        json doc;
        doc["status"] = res.status == hsubdiv::ConstructionResult::Status::Solved ? "solved"
                        : res.status == hsubdiv::ConstructionResult::Status::Parametric
                            ? "parametric"
                            : "infeasible";
        doc["constraints_used"] = res.constraints_used;
        json frees = json::array();
        for (const std::string& f : res.free_names) {
            frees.push_back(f);
        }
        doc["free_names"] = std::move(frees);
        if (res.status == hsubdiv::ConstructionResult::Status::Infeasible) {
            doc["inconsistent_row"] = res.infeasible_row;
        } else {
            json sol = json::object();
            for (const auto& [name, value] : res.solution) {
                sol[name] = hsubdiv::to_string(value);
            }
            doc["solution"] = std::move(sol);
            doc["mask"] = json::parse(hsubdiv::save_mask(*res.mask));
        }
        std::cout << doc.dump(2) << "\n";
    } else if (res.status == hsubdiv::ConstructionResult::Status::Infeasible) {
        std::cout << "infeasible: condition '" << res.infeasible_row
                  << "' is inconsistent with the preceding ones\n";
    } else {
        std::cout << (res.status == hsubdiv::ConstructionResult::Status::Solved ? "solved"
                                                                                : "parametric")
                  << " (" << res.constraints_used << " conditions)\n";
        if (!res.free_names.empty()) {
            std::cout << "free:";
            for (const std::string& f : res.free_names) {
                std::cout << " " << f;
            }
            std::cout << "\n";
        }
        for (const auto& [name, value] : res.solution) {
            std::cout << name << " = " << hsubdiv::to_string(value) << "\n";
        }
    }
    if (!a.out_file.empty() && res.mask) {
        write_file(a.out_file, hsubdiv::save_mask(*res.mask));
        std::cout << "wrote mask to " << a.out_file << "\n";
    }
    return 0;
}

struct CoeffsArgs {
    int alpha1_k = 0;
    int alpha2_k = 0;
    std::vector<std::string> gamma; // k, shift
    bool as_json = false;
};

void print_alpha(const hsubdiv::AlphaTable& t, bool as_json) {
    if (as_json) {
        json rows = json::array();
        for (int k = t.first_k(); k <= t.kmax; ++k) {
            json row = json::array();
            for (int l = t.family; l <= k; ++l) {
                row.push_back(hsubdiv::to_string(t.at(k, l)));
            }
            rows.push_back(std::move(row));
        }
        json doc;
        doc["family"] = t.family;
        doc["rows"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // Column-aligned triangular table.
    std::size_t width = 1;
    for (int k = t.first_k(); k <= t.kmax; ++k) {
        for (int l = t.family; l <= k; ++l) {
            width = std::max(width, hsubdiv::to_string(t.at(k, l)).size());
        }
    }
    for (int k = t.first_k(); k <= t.kmax; ++k) {
        std::printf("k=%-3d", k);
        for (int l = t.family; l <= k; ++l) {
            std::printf(" %*s", static_cast<int>(width), hsubdiv::to_string(t.at(k, l)).c_str());
        }
        std::printf("\n");
    }
}

int run_coeffs(const CoeffsArgs& a) {
    const int chosen = (a.alpha1_k > 0) + (a.alpha2_k > 0) + !a.gamma.empty();
    if (chosen != 1) {
        throw InputError("coeffs: choose exactly one of --alpha1 K, --alpha2 K, --gamma K SHIFT");
    }
    if (a.alpha1_k > 0) {
        print_alpha(hsubdiv::alpha1(a.alpha1_k), a.as_json);
    } else if (a.alpha2_k > 0) {
        print_alpha(hsubdiv::alpha2(a.alpha2_k), a.as_json);
    } else {
        int k = 0;
        try {
            k = std::stoi(a.gamma[0]);
        } catch (const std::exception&) {
            throw InputError("coeffs --gamma: K must be an integer, got '" + a.gamma[0] + "'");
        }
        if (k < 0) {
            throw InputError("coeffs --gamma: K must be >= 0");
        }
        const Rational shift = hsubdiv::parse_rational(a.gamma[1]);
        const auto table = hsubdiv::gamma_table(k, shift);
        if (a.as_json) {
            json doc;
            doc["k"] = k;
            doc["shift"] = hsubdiv::to_string(shift);
            doc["values"] = vec_json(table.values);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "gamma(k=" << k << ", shift=" << hsubdiv::to_string(shift)
                      << "): " << vec_text(table.values) << "\n";
        }
    }
    return 0;
}

struct EmitArgs {
    std::string family;
    std::vector<std::string> params;
    std::string out_file;
};

int run_emit(const EmitArgs& a) {
    const auto mask = hsubdiv::make_scheme(a.family, parse_params(a.params));
    const std::string text = hsubdiv::save_mask(mask);
    if (a.out_file.empty()) {
        std::cout << text;
    } else {
        write_file(a.out_file, text);
        std::cout << "wrote " << a.family << " mask to " << a.out_file << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polynomial-reproduction certificates for binary Hermite subdivision "
                 "schemes (orders d=2,3)"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Certify the reproduction degree of a mask");
    check->add_option("mask", check_args.mask_file, "mask JSON file")->required();
    check->add_option("--tau", check_args.tau, "parametrization p/q (default: inferred)");
    check->add_option("--max-degree", check_args.max_degree, "highest degree to test")
        ->check(CLI::NonNegativeNumber);
    check->add_flag("--json", check_args.as_json, "machine-readable output");

    std::string tau_mask_file;
    auto* tau_cmd = app.add_subcommand("tau", "Infer the parametrization of a mask");
    tau_cmd->add_option("mask", tau_mask_file, "mask JSON file")->required();
    bool tau_json = false;
    tau_cmd->add_flag("--json", tau_json, "machine-readable output");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Run the cascade reproduction oracle");
    oracle->add_option("mask", oracle_args.mask_file, "mask JSON file")->required();
    oracle->add_option("--degree", oracle_args.degree, "polynomial degree to test")->required();
    oracle->add_option("--levels", oracle_args.levels, "refinement steps")
        ->check(CLI::NonNegativeNumber);
    oracle->add_option("--window", oracle_args.window, "initial index window: lo hi")
        ->expected(2)
        ->required();
    oracle->add_option("--tau", oracle_args.tau, "parametrization p/q (default: inferred)");
    oracle->add_flag("--json", oracle_args.as_json, "machine-readable output");

    LimitArgs limit_args;
    auto* limit = app.add_subcommand("limit", "Sample a basic limit function to CSV");
    limit->add_option("mask", limit_args.mask_file, "mask JSON file")->required();
    limit->add_option("--component", limit_args.component, "unit-vector component (1-based)")
        ->required();
    limit->add_option("--levels", limit_args.levels, "refinement steps")
        ->check(CLI::NonNegativeNumber);
    limit->add_option("--out", limit_args.out_file, "output CSV file")->required();
    limit->add_option("--tau", limit_args.tau, "parametrization p/q (default: mask hint)");
    limit->add_flag("--decimal", limit_args.decimal, "print 17-digit decimals instead of p/q");

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "Solve a mask template for a target degree");
    construct->add_option("--template", construct_args.template_file, "template JSON file")
        ->required();
    construct->add_option("--tau", construct_args.tau, "parametrization p/q")->required();
    construct->add_option("--degree", construct_args.degree, "target reproduction degree")
        ->required();
    construct->add_option("--bind", construct_args.bindings, "free-name binding name=p/q");
    construct->add_option("--out", construct_args.out_file, "write the constructed mask here");
    construct->add_flag("--json", construct_args.as_json, "machine-readable output");

    CoeffsArgs coeffs_args;
    auto* coeffs = app.add_subcommand("coeffs", "Print coefficient tables");
    coeffs->add_option("--alpha1", coeffs_args.alpha1_k, "family-1 ladder rows 1..K");
    coeffs->add_option("--alpha2", coeffs_args.alpha2_k, "family-2 ladder rows 2..K");
    coeffs->add_option("--gamma", coeffs_args.gamma, "gamma coefficients: K SHIFT")->expected(2);
    coeffs->add_flag("--json", coeffs_args.as_json, "machine-readable output");

    EmitArgs emit_args;
    auto* catalog = app.add_subcommand("catalog", "Built-in scheme families");
    auto* emit = catalog->add_subcommand("emit", "Write a catalog mask as JSON");
    emit->add_option("family", emit_args.family, "merrien | derham | extended | primal3")
        ->required();
    emit->add_option("--param", emit_args.params, "parameter name=p/q (repeatable)");
    emit->add_option("--out", emit_args.out_file, "output file (default: stdout)");
    catalog->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            return run_check(check_args);
        }
        if (*tau_cmd) {
            const auto mask = hsubdiv::load_mask(read_file(tau_mask_file));
            const Rational tau = hsubdiv::infer_tau(mask);
            if (tau_json) {
                json doc;
                doc["tau"] = hsubdiv::to_string(tau);
                if (mask.tau_hint && *mask.tau_hint != tau) {
                    doc["tau_hint"] = hsubdiv::to_string(*mask.tau_hint);
                }
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "tau: " << hsubdiv::to_string(tau) << "\n";
                if (mask.tau_hint && *mask.tau_hint != tau) {
                    std::cout << "note: mask tau hint " << hsubdiv::to_string(*mask.tau_hint)
                              << " differs from inferred tau\n";
                }
            }
            return 0;
        }
        if (*oracle) {
            return run_oracle(oracle_args);
        }
        if (*limit) {
            return run_limit(limit_args);
        }
        if (*construct) {
            return run_construct(construct_args);
        }
        if (*coeffs) {
            return run_coeffs(coeffs_args);
        }
        if (*emit) {
            return run_emit(emit_args);
        }
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
