#include "hsubdiv/rational.hpp"

#include "hsubdiv/errors.hpp"

#include <cctype>

namespace hsubdiv {

Rational rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw InputError("rational with zero denominator: " + num.str() + "/0");
    }
    // cpp_rational reduces to lowest terms but insists on den > 0 up front.
    if (den < 0) {
        return Rational(-num, -den);
    }
    return Rational(num, den);
}

Rational rat(long long num, long long den) {
    return rat(Int(num), Int(den));
}

std::string to_string(const Rational& r) {
    const Int& n = boost::multiprecision::numerator(r);
    const Int& d = boost::multiprecision::denominator(r);
    if (d == 1) {
        return n.str();
    }
    return n.str() + "/" + d.str();
}

namespace {

bool parse_integer(std::string_view text, Int& out) {
    if (text.empty()) {
        return false;
    }
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        text.remove_prefix(1); // cpp_int accepts "-" but not "+"
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    out = Int(std::string(text));
    if (negative) {
        out = -out;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    Int num;
    Int den = 1;
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_integer(text, num);
    } else {
        ok = parse_integer(text.substr(0, slash), num) &&
             parse_integer(text.substr(slash + 1), den);
    }
    if (!ok) {
        throw InputError("not a rational literal: '" + std::string(text) + "'");
    }
    if (den == 0) {
        throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    }
    return rat(num, den);
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Rational pow2(int exp) {
    if (exp >= 0) {
        return Rational(Int(1) << exp);
    }
    return Rational(Int(1), Int(1) << (-exp));
}

Rational pow_rat(const Rational& base, int exp) {
    if (exp == 0) {
        return Rational(1);
    }
    if (base == 0 && exp < 0) {
        throw InputError("negative power of zero");
    }
    Rational acc(1);
    Rational b = exp > 0 ? base : Rational(1) / base;
    for (int n = exp > 0 ? exp : -exp; n > 0; n >>= 1) {
        if (n & 1) {
            acc *= b;
        }
        b *= b;
    }
    return acc;
}

Int factorial(int n) {
    Int acc = 1;
    for (int i = 2; i <= n; ++i) {
        acc *= i;
    }
    return acc;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    Int acc = 1;
    for (int i = 0; i < k; ++i) {
        acc = acc * (n - i) / (i + 1);
    }
    return acc;
}

Int falling_factorial(const Int& l, int k) {
    Int acc = 1;
    for (int r = 0; r < k; ++r) {
        acc *= (l - r);
    }
    return acc;
}

} // namespace hsubdiv
