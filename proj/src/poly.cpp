#include "hsubdiv/poly.hpp"

#include <sstream>
#include <utility>

namespace hsubdiv {

Poly::Poly(Vec coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Poly Poly::constant(const Rational& c) {
    return Poly(Vec{c});
}

Poly Poly::monomial(int n, const Rational& c) {
    Vec v(static_cast<std::size_t>(n) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

std::optional<int> Poly::degree() const {
    if (c_.empty()) {
        return std::nullopt;
    }
    return static_cast<int>(c_.size()) - 1;
}

Rational Poly::coeff(int n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= c_.size()) {
        return Rational(0);
    }
    return c_[static_cast<std::size_t>(n)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) {
        return Poly();
    }
    Vec d(c_.size() - 1);
    for (std::size_t n = 1; n < c_.size(); ++n) {
        d[n - 1] = Rational(static_cast<long long>(n)) * c_[n];
    }
    return Poly(std::move(d));
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
    // Horner over the affine argument.
    const Poly arg(Vec{b, a});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * arg + Poly::constant(*it);
    }
    return acc;
}

std::string Poly::str() const {
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int n = static_cast<int>(c_.size()) - 1; n >= 0; --n) {
        const Rational& c = c_[static_cast<std::size_t>(n)];
        if (c == 0) {
            continue;
        }
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) {
                os << "-";
            }
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1 || n == 0) {
            os << to_string(mag);
        }
        if (n >= 1) {
            os << "x";
            if (n > 1) {
                os << "^" << n;
            }
        }
    }
    return os.str();
}

Poly operator+(const Poly& p, const Poly& q) {
    Vec out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < p.c_.size()) {
            out[i] += p.c_[i];
        }
        if (i < q.c_.size()) {
            out[i] += q.c_[i];
        }
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) {
    return p + Rational(-1) * q;
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) {
        return Poly();
    }
    Vec out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            out[i + j] += p.c_[i] * q.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
    Vec out(p.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = s * p.c_[i];
    }
    return Poly(std::move(out));
}

} // namespace hsubdiv
