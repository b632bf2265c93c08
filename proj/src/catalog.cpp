#include "hsubdiv/catalog.hpp"

#include "hsubdiv/errors.hpp"

#include <set>

namespace hsubdiv {

namespace {

Matrix mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Matrix mat3(const Vec& r0, const Vec& r1, const Vec& r2) {
    Matrix m(3, 3);
    for (int j = 0; j < 3; ++j) {
        m(0, j) = r0[static_cast<std::size_t>(j)];
        m(1, j) = r1[static_cast<std::size_t>(j)];
        m(2, j) = r2[static_cast<std::size_t>(j)];
    }
    return m;
}

const Rational kHalf = rat(1, 2);

} // namespace

HermiteMask merrien(const Rational& lambda, const Rational& mu) {
    HermiteMask m;
    m.d = 2;
    m.name = "merrien";
    m.tau_hint = Rational(0);
    m.matrices[-1] = mat2(kHalf, lambda, (1 - mu) / 2, mu / 4);
    m.matrices[0] = mat2(1, 0, 0, kHalf);
    m.matrices[1] = mat2(kHalf, -lambda, (mu - 1) / 2, mu / 4);
    return m;
}

HermiteMask derham(const Rational& lambda, const Rational& mu) {
    HermiteMask m;
    m.d = 2;
    m.name = "derham";
    m.tau_hint = rat(-1, 2);
    const Rational eighth = rat(1, 8);
    m.matrices[-2] = eighth * mat2(2 + 4 * lambda * (1 - mu), 4 * lambda + 2 * lambda * mu,
                                   4 - 2 * mu - 2 * mu * mu, mu * mu + 8 * lambda * (1 - mu));
    m.matrices[-1] =
        eighth * mat2(6 - 4 * lambda * (1 - mu), 8 * lambda - 2 * lambda * mu,
                      4 - 2 * mu - 2 * mu * mu, mu * mu - 8 * lambda * (1 - mu) + 2 * mu);
    m.matrices[0] =
        eighth * mat2(6 - 4 * lambda * (1 - mu), -8 * lambda + 2 * lambda * mu,
                      -4 + 2 * mu + 2 * mu * mu, mu * mu - 8 * lambda * (1 - mu) + 2 * mu);
    m.matrices[1] = eighth * mat2(2 + 4 * lambda * (1 - mu), -4 * lambda - 2 * lambda * mu,
                                  -4 + 2 * mu + 2 * mu * mu, mu * mu + 8 * lambda * (1 - mu));
    return m;
}

HermiteMask extended_interpolatory(const Rational& b2, const Rational& b3) {
    // Dependent coefficients, resolved in order.
    const Rational b1 = rat(1, 128) - 3 * b2;
    const Rational b4 = rat(1, 1408) - rat(384, 1408) * b3;
    const Rational a1 = kHalf - b1;
    const Rational a3 = 24 * b4 + 9 * b3 + rat(3, 4);
    const Rational a4 = rat(1, 4) - b4 - a3 / 2 - rat(3, 2) * b3;
    const Rational a2 = rat(-1, 8) - 3 * b2 - 2 * b1;

    HermiteMask m;
    m.d = 2;
    m.name = "extended";
    m.tau_hint = Rational(0);
    m.matrices[-3] = mat2(b1, b2, b3, b4);
    m.matrices[-1] = mat2(a1, a2, a3, a4);
    m.matrices[0] = mat2(1, 0, 0, kHalf);
    m.matrices[1] = mat2(a1, -a2, -a3, a4);
    m.matrices[3] = mat2(b1, -b2, -b3, b4);
    return m;
}

HermiteMask primal3(const Primal3Params& p) {
    const Matrix D = Matrix::diagonal(Vec{Rational(1), kHalf, rat(1, 4)});
    HermiteMask m;
    m.d = 3;
    m.name = "primal3";
    m.tau_hint = Rational(0);
    m.matrices[-1] = D * mat3({p.lambda1, p.lambda2, p.lambda3}, {p.mu1, p.mu2, p.mu3},
                              {p.eps1, p.eps2, p.eps3});
    m.matrices[0] = D;
    m.matrices[1] = D * mat3({p.lambda1, -p.lambda2, p.lambda3}, {-p.mu1, p.mu2, -p.mu3},
                             {p.eps1, -p.eps2, p.eps3});
    return m;
}

namespace {

Primal3Params base_constraints(const Rational& mu1, const Rational& eps2,
                               const Rational& lambda2) {
    Primal3Params p;
    p.lambda1 = kHalf;
    p.lambda2 = lambda2;
    p.lambda3 = (Rational(-1) - 8 * lambda2) / 16;
    p.mu1 = mu1;
    p.mu2 = (1 - mu1) / 2;
    p.eps1 = 0;
    p.eps2 = eps2;
    p.eps3 = (1 - eps2) / 2;
    return p;
}

} // namespace

Primal3Params degree3_constraints(const Rational& mu1, const Rational& eps2,
                                  const Rational& lambda2) {
    Primal3Params p = base_constraints(mu1, eps2, lambda2);
    p.mu3 = (2 * mu1 - 3) / 24;
    return p;
}

Primal3Params degree3_constraints_mu2_variant(const Rational& mu1, const Rational& eps2,
                                              const Rational& lambda2) {
    Primal3Params p = base_constraints(mu1, eps2, lambda2);
    p.mu3 = (2 * p.mu2 - 3) / 24;
    return p;
}

std::vector<std::string> catalog_families() {
    return {"merrien", "derham", "extended", "primal3"};
}

namespace {

Rational param_or(const std::map<std::string, Rational>& params, const std::string& name,
                  const Rational& fallback) {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, Rational>& params,
                    const std::set<std::string>& known, const std::string& family) {
    for (const auto& [name, value] : params) {
        (void)value;
        if (!known.count(name)) {
            throw InputError("unknown parameter '" + name + "' for scheme family '" + family +
                             "'");
        }
    }
}

} // namespace

HermiteMask make_scheme(const std::string& family,
                        const std::map<std::string, Rational>& params) {
    if (family == "merrien" || family == "derham") {
        reject_unknown(params, {"lambda", "mu"}, family);
        const Rational lambda = param_or(params, "lambda", rat(-1, 8));
        const Rational mu = param_or(params, "mu", rat(-1, 2));
        return family == "merrien" ? merrien(lambda, mu) : derham(lambda, mu);
    }
    if (family == "extended") {
        reject_unknown(params, {"b2", "b3"}, family);
        return extended_interpolatory(param_or(params, "b2", rat(1, 384)),
                                      param_or(params, "b3", Rational(0)));
    }
    if (family == "primal3") {
        const std::set<std::string> full = {"lambda1", "lambda2", "lambda3", "mu1", "mu2",
                                            "mu3",     "eps1",    "eps2",    "eps3"};
        const std::set<std::string> free = {"mu1", "eps2", "lambda2"};
        bool any_dependent = false;
        for (const auto& [name, value] : params) {
            (void)value;
            if (full.count(name) && !free.count(name)) {
                any_dependent = true;
            }
        }
        reject_unknown(params, full, family);
        if (any_dependent) {
            // Full parameter set: all nine must be given.
            for (const std::string& name : full) {
                if (!params.count(name)) {
                    throw InputError("primal3 with explicit parameters needs all nine; missing '" +
                                     name + "'");
                }
            }
            Primal3Params p;
            p.lambda1 = params.at("lambda1");
            p.lambda2 = params.at("lambda2");
            p.lambda3 = params.at("lambda3");
            p.mu1 = params.at("mu1");
            p.mu2 = params.at("mu2");
            p.mu3 = params.at("mu3");
            p.eps1 = params.at("eps1");
            p.eps2 = params.at("eps2");
            p.eps3 = params.at("eps3");
            return primal3(p);
        }
        // Free triple, remaining parameters resolved for degree-3 reproduction.
        return primal3(degree3_constraints(param_or(params, "mu1", rat(1, 3)),
                                           param_or(params, "eps2", rat(1, 5)),
                                           param_or(params, "lambda2", rat(1, 7))));
    }
    throw InputError("unknown scheme family '" + family + "' (known: merrien, derham, extended, "
                     "primal3)");
}

} // namespace hsubdiv
