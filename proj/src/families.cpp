#include "hsubdiv/families.hpp"

#include "hsubdiv/errors.hpp"

#include <mutex>
#include <utility>

namespace hsubdiv {

Poly q_poly(int k, const Rational& shift) {
    if (k < 0) {
        throw InternalError("q_poly: negative degree index");
    }
    Poly p = Poly::constant(Rational(1));
    for (int r = 0; r < k; ++r) {
        // 2x + 2*shift - r
        p = p * Poly(Vec{2 * shift - r, Rational(2)});
    }
    return p;
}

GammaTable gamma_table(int k, const Rational& shift) {
    if (k < 0) {
        throw InternalError("gamma_table: negative degree index");
    }
    const Rational i = 2 * shift;
    Vec g{Rational(1)}; // k = 0 table
    for (int kk = 1; kk <= k; ++kk) {
        Vec next(static_cast<std::size_t>(kk) + 1);
        const Rational c = i - (kk - 1);
        next[0] = c * g[0];
        for (int n = 1; n < kk; ++n) {
            next[static_cast<std::size_t>(n)] =
                -2 * g[static_cast<std::size_t>(n - 1)] + c * g[static_cast<std::size_t>(n)];
        }
        next[static_cast<std::size_t>(kk)] = -2 * g[static_cast<std::size_t>(kk - 1)];
        g = std::move(next);
    }
    return GammaTable{k, shift, std::move(g)};
}

Rational gamma_shift_identity(int k, int n, const Rational& shift) {
    if (n < 0 || n > k) {
        throw InternalError("gamma_shift_identity: need 0 <= n <= k");
    }
    const Vec base = gamma_table(k, Rational(0)).values;
    Rational acc = 0;
    for (int r = n; r <= k; ++r) {
        const int sign = ((r + n) % 2 == 0) ? 1 : -1;
        acc += sign * base[static_cast<std::size_t>(r)] * Rational(binomial(r, n)) *
               pow_rat(shift, r - n);
    }
    return acc;
}

const Rational& AlphaTable::at(int k, int l) const {
    if (k < first_k() || k > kmax || l < family || l > k) {
        throw InternalError("alpha table index (k=" + std::to_string(k) +
                            ", l=" + std::to_string(l) + ") out of range");
    }
    return rows[static_cast<std::size_t>(k - first_k())][static_cast<std::size_t>(l - family)];
}

bool AlphaTable::all_integers(std::string* offender) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (boost::multiprecision::denominator(rows[i][j]) != 1) {
                if (offender) {
                    *offender = "alpha" + std::to_string(family) + "[k=" +
                                std::to_string(static_cast<int>(i) + first_k()) +
                                ", l=" + std::to_string(static_cast<int>(j) + family) +
                                "] = " + to_string(rows[i][j]) + " is not an integer";
                }
                return false;
            }
        }
    }
    return true;
}

namespace {

// The ladders are pure functions of kmax; keep the largest table built so
// far and slice it, guarded for concurrent readers.
struct AlphaCache {
    std::mutex mu;
    AlphaTable table;
};

AlphaTable slice(const AlphaTable& full, int kmax) {
    AlphaTable out;
    out.family = full.family;
    out.kmax = kmax;
    out.rows.assign(full.rows.begin(),
                    full.rows.begin() + (kmax - full.first_k() + 1));
    return out;
}

AlphaTable compute_alpha1(int kmax) {
    std::vector<Vec> gamma; // gamma[k] = shift-free table for degree k
    gamma.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        gamma.push_back(gamma_table(k, Rational(0)).values);
    }
    AlphaTable t;
    t.family = 1;
    t.kmax = kmax;
    for (int k = 1; k <= kmax; ++k) {
        Vec row(static_cast<std::size_t>(k));
        row[0] = Rational(2 * k); // l = 1
        const int sign_k = (k % 2 == 0) ? 1 : -1;
        for (int n = k - 1; n >= 1; --n) {
            const int l = k - n + 1;
            Rational sum = 0;
            for (int j = 1; j <= k - n; ++j) {
                const int sj = (j % 2 == 0) ? 1 : -1;
                sum += sj * row[static_cast<std::size_t>(j - 1)] *
                       gamma[static_cast<std::size_t>(k - j)][static_cast<std::size_t>(n - 1)];
            }
            row[static_cast<std::size_t>(l - 1)] =
                sign_k * pow2(-n + 1) *
                (n * gamma[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] - sum);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

AlphaTable compute_alpha1_closed(int kmax) {
    AlphaTable t;
    t.family = 1;
    t.kmax = kmax;
    for (int k = 1; k <= kmax; ++k) {
        Vec row(static_cast<std::size_t>(k));
        row[0] = Rational(2 * k);
        if (k >= 2) {
            row[static_cast<std::size_t>(k - 1)] = Rational(2 * factorial(k - 1));
        }
        for (int l = 2; l <= k - 1; ++l) {
            Rational sum = 0;
            // empty by convention when l = k - 1
            for (int i = l; i <= k - 2; ++i) {
                sum += t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l - 2)];
            }
            row[static_cast<std::size_t>(l - 1)] =
                Rational(2 * (l + 1) * factorial(l - 1)) + (l - 1) * sum;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

AlphaTable compute_alpha2(int kmax) {
    std::vector<Vec> gamma;
    gamma.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        gamma.push_back(gamma_table(k, Rational(0)).values);
    }
    AlphaTable t;
    t.family = 2;
    t.kmax = kmax;
    for (int k = 2; k <= kmax; ++k) {
        Vec row(static_cast<std::size_t>(k - 1));
        row[0] = Rational(4 * k * (k - 1)); // l = 2
        const int sign_k = (k % 2 == 0) ? 1 : -1;
        for (int n = k - 1; n >= 2; --n) {
            const int l = k - n + 2;
            Rational sum = 0;
            for (int j = 2; j <= k - n + 1; ++j) {
                const int sj = (j % 2 == 0) ? 1 : -1;
                sum += sj * row[static_cast<std::size_t>(j - 2)] *
                       gamma[static_cast<std::size_t>(k - j)][static_cast<std::size_t>(n - 2)];
            }
            row[static_cast<std::size_t>(l - 2)] =
                sign_k * pow2(-n + 2) *
                (Rational(n) * (n - 1) * gamma[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] -
                 sum);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

template <typename Compute>
AlphaTable cached(AlphaCache& cache, int kmax, Compute compute) {
    std::lock_guard<std::mutex> lock(cache.mu);
    if (cache.table.kmax < kmax) {
        cache.table = compute(kmax);
    }
    if (cache.table.kmax == kmax) {
        return cache.table;
    }
    return slice(cache.table, kmax);
}

} // namespace

AlphaTable alpha1(int kmax) {
    if (kmax < 1) {
        throw InputError("alpha1: kmax must be >= 1");
    }
    static AlphaCache cache;
    return cached(cache, kmax, compute_alpha1);
}

AlphaTable alpha1_closed(int kmax) {
    if (kmax < 1) {
        throw InputError("alpha1_closed: kmax must be >= 1");
    }
    static AlphaCache cache;
    return cached(cache, kmax, compute_alpha1_closed);
}

AlphaTable alpha2(int kmax) {
    if (kmax < 2) {
        throw InputError("alpha2: kmax must be >= 2");
    }
    static AlphaCache cache;
    return cached(cache, kmax, compute_alpha2);
}

Poly qtilde_poly(int k, const Rational& shift) {
    if (k <= 0) {
        return Poly();
    }
    const AlphaTable a = alpha1(k);
    Poly acc;
    for (int n = 1; n <= k; ++n) {
        const int sign = (n % 2 == 0) ? 1 : -1;
        acc = acc + (sign * a.at(k, n)) * q_poly(k - n, shift);
    }
    return acc;
}

Poly qhat_poly(int k, const Rational& shift) {
    if (k <= 1) {
        return Poly();
    }
    const AlphaTable a = alpha2(k);
    Poly acc;
    for (int n = 2; n <= k; ++n) {
        const int sign = (n % 2 == 0) ? 1 : -1;
        acc = acc + (sign * a.at(k, n)) * q_poly(k - n, shift);
    }
    return acc;
}

RhsVector rhs_vector(int d, int k, const Rational& tau) {
    if (d != 2 && d != 3) {
        throw InputError("rhs_vector: order d must be 2 or 3, got " + std::to_string(d));
    }
    if (k < 1) {
        throw InputError("rhs_vector: degree k must be >= 1");
    }
    const Rational at = -tau / 2;
    const Rational via_poly = 2 * q_poly(k, tau).eval(at);
    Rational via_product = 2;
    for (int r = 0; r < k; ++r) {
        via_product *= (tau - r);
    }
    if (via_poly != via_product) {
        throw InternalError("rhs_vector: polynomial evaluation " + to_string(via_poly) +
                            " disagrees with product formula " + to_string(via_product));
    }
    Vec entries{via_poly, qtilde_poly(k, tau).eval(at)};
    if (d == 3) {
        entries.push_back(qhat_poly(k, tau).eval(at) / 2);
    }
    return RhsVector{d, k, tau, std::move(entries)};
}

} // namespace hsubdiv
