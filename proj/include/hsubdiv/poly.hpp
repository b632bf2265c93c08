#pragma once

#include "hsubdiv/linalg.hpp"
#include "hsubdiv/rational.hpp"

#include <optional>
#include <string>

namespace hsubdiv {

/// Univariate polynomial with rational coefficients, coeffs()[n] belonging to
/// x^n. The zero polynomial is the empty coefficient list and reports degree
/// nullopt (never -1 arithmetic).
class Poly {
public:
    Poly() = default;
    explicit Poly(Vec coeffs); // strips trailing zeros

    static Poly constant(const Rational& c);
    static Poly monomial(int n, const Rational& c = Rational(1));

    const Vec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const;
    Rational coeff(int n) const; // 0 beyond storage

    Rational eval(const Rational& x) const;
    Poly derivative() const;

    /// p(a x + b)
    Poly compose_affine(const Rational& a, const Rational& b) const;

    std::string str() const; // e.g. "4x^2 - 2x" for debugging and CLI output

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

private:
    Vec c_;
    void normalize();
};

} // namespace hsubdiv
