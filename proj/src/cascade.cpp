#include "hsubdiv/cascade.hpp"

#include "hsubdiv/errors.hpp"

#include <algorithm>
#include <utility>

namespace hsubdiv {

Rational diag_scale_entry(int s) {
    return pow2(-(s - 1));
}

namespace {

std::vector<int> support_offsets(const HermiteMask& mask) {
    std::vector<int> s;
    for (const auto& [l, m] : mask.matrices) {
        if (!m.is_zero()) {
            s.push_back(l);
        }
    }
    return s; // ascending (map order)
}

// The stencil of output index i reads {(i-s)/2 : s in support, i-s even};
// the admissibility test below only needs the per-parity support extremes.
struct ParityBounds {
    bool present = false;
    int min = 0;
    int max = 0;
};

} // namespace

HermiteSequence refine(const HermiteMask& mask, const HermiteSequence& seq) {
    mask.validate();
    if (seq.d != mask.d) {
        throw InputError("sequence order " + std::to_string(seq.d) + " does not match mask order " +
                         std::to_string(mask.d));
    }
    if (seq.values.empty()) {
        throw InputError("cannot refine an empty window");
    }
    const std::vector<int> support = support_offsets(mask);
    ParityBounds even, odd;
    for (int s : support) {
        ParityBounds& p = (s % 2 == 0) ? even : odd;
        if (!p.present) {
            p = {true, s, s};
        } else {
            p.min = std::min(p.min, s);
            p.max = std::max(p.max, s);
        }
    }

    const int b = seq.base;
    const int e = seq.last();
    // Output index i of parity p is admissible when every stencil read
    // (i-s)/2 for matching-parity s lies inside [b, e]:
    //   2b + max(S_p) <= i <= 2e + min(S_p).
    // Indices of a parity absent from the support are exact zeros (the sum
    // in the refinement rule is empty) and are kept to preserve a contiguous
    // window. The window is the longest contiguous run of usable indices.
    const auto usable = [&](int i) -> bool {
        const ParityBounds& p = (((i % 2) + 2) % 2 == 0) ? even : odd;
        if (!p.present) {
            return true; // empty stencil, exact zero row
        }
        return i >= 2 * b + p.max && i <= 2 * e + p.min;
    };
    const auto nonempty = [&](int i) -> bool {
        const ParityBounds& p = (((i % 2) + 2) % 2 == 0) ? even : odd;
        return p.present;
    };

    const int cand_lo = 2 * b + support.front();
    const int cand_hi = 2 * e + support.back();
    int best_lo = 0, best_hi = -1;
    int run_lo = 0;
    bool in_run = false;
    bool run_has_data = false;
    for (int i = cand_lo; i <= cand_hi + 1; ++i) {
        const bool ok = i <= cand_hi && usable(i);
        if (ok) {
            if (!in_run) {
                in_run = true;
                run_lo = i;
                run_has_data = false;
            }
            run_has_data = run_has_data || nonempty(i);
        } else if (in_run) {
            in_run = false;
            if (run_has_data && (i - 1) - run_lo > best_hi - best_lo) {
                best_lo = run_lo;
                best_hi = i - 1;
            }
        }
    }
    if (best_hi < best_lo) {
        const int need = (mask.hi() - mask.lo()) / 2 + 1;
        throw InputError("input window [" + std::to_string(b) + ", " + std::to_string(e) +
                         "] is too narrow for mask support [" + std::to_string(mask.lo()) + ", " +
                         std::to_string(mask.hi()) + "]; need at least " + std::to_string(need) +
                         " entries");
    }

    const int n = seq.level;
    Vec scale_in(static_cast<std::size_t>(seq.d));
    Vec scale_out(static_cast<std::size_t>(seq.d));
    for (int s = 1; s <= seq.d; ++s) {
        scale_in[static_cast<std::size_t>(s - 1)] = pow_rat(diag_scale_entry(s), n);
        scale_out[static_cast<std::size_t>(s - 1)] = pow_rat(diag_scale_entry(s), -(n + 1));
    }

    HermiteSequence out;
    out.d = seq.d;
    out.level = n + 1;
    out.base = best_lo;
    out.values.reserve(static_cast<std::size_t>(best_hi - best_lo + 1));
    for (int i = best_lo; i <= best_hi; ++i) {
        Vec acc = zero_vec(seq.d);
        for (int s : support) {
            if (((i - s) % 2 + 2) % 2 != 0) {
                continue;
            }
            const int j = (i - s) / 2;
            Vec scaled(static_cast<std::size_t>(seq.d));
            const Vec& v = seq.at(j);
            for (std::size_t c = 0; c < scaled.size(); ++c) {
                scaled[c] = scale_in[c] * v[c];
            }
            acc = vec_add(acc, mask.matrices.at(s) * scaled);
        }
        for (std::size_t c = 0; c < acc.size(); ++c) {
            acc[c] *= scale_out[c];
        }
        out.values.push_back(std::move(acc));
    }
    return out;
}

HermiteSequence sample_poly(const Poly& p, int d, const Rational& tau, int lo, int hi) {
    if (d != 2 && d != 3) {
        throw InputError("sample_poly: order d must be 2 or 3");
    }
    if (lo > hi) {
        throw InputError("sample_poly: empty window");
    }
    std::vector<Poly> derivs{p};
    for (int s = 1; s < d; ++s) {
        derivs.push_back(derivs.back().derivative());
    }
    HermiteSequence seq;
    seq.d = d;
    seq.level = 0;
    seq.base = lo;
    seq.values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int j = lo; j <= hi; ++j) {
        Vec v(static_cast<std::size_t>(d));
        for (int s = 0; s < d; ++s) {
            v[static_cast<std::size_t>(s)] = derivs[static_cast<std::size_t>(s)].eval(j + tau);
        }
        seq.values.push_back(std::move(v));
    }
    return seq;
}

OracleResult oracle_reproduces(const HermiteMask& mask, const Rational& tau, int degree,
                               int levels, int lo, int hi) {
    mask.validate();
    if (degree < 0 || levels < 0) {
        throw InputError("oracle_reproduces: degree and levels must be >= 0");
    }
    if (levels > 32) {
        throw InputError("oracle_reproduces: refusing more than 32 levels");
    }
    for (int t = 0; t <= degree; ++t) {
        const Poly p = Poly::monomial(t);
        std::vector<Poly> derivs{p};
        for (int s = 1; s < mask.d; ++s) {
            derivs.push_back(derivs.back().derivative());
        }
        HermiteSequence seq = sample_poly(p, mask.d, tau, lo, hi);
        for (int level = 0; level <= levels; ++level) {
            if (level > 0) {
                seq = refine(mask, seq); // InputError on window exhaustion
            }
            const Rational scale = pow2(-level);
            for (int j = seq.base; j <= seq.last(); ++j) {
                const Rational x = (j + tau) * scale;
                Vec expected(static_cast<std::size_t>(mask.d));
                for (int s = 0; s < mask.d; ++s) {
                    expected[static_cast<std::size_t>(s)] =
                        derivs[static_cast<std::size_t>(s)].eval(x);
                }
                if (expected != seq.at(j)) {
                    OracleResult res;
                    res.pass = false;
                    res.failure = OracleFailure{t, level, j, std::move(expected), seq.at(j)};
                    return res;
                }
            }
        }
    }
    return OracleResult{true, std::nullopt};
}

std::vector<LimitSample> basic_limit_samples(const HermiteMask& mask, int component, int levels,
                                             std::optional<Rational> tau) {
    mask.validate();
    if (component < 1 || component > mask.d) {
        throw InputError("basic limit component must be between 1 and " + std::to_string(mask.d));
    }
    if (levels < 0 || levels > 32) {
        throw InputError("levels must be between 0 and 32");
    }
    const Rational t0 = tau ? *tau : mask.tau_hint.value_or(Rational(0));

    // Delta data on a window wide enough that the surviving window after
    // `levels` steps still covers the whole nonzero spread
    // [lo (2^n - 1), hi (2^n - 1)].
    const int width = mask.hi() - mask.lo();
    const int radius = width + std::max(std::abs(mask.lo()), std::abs(mask.hi())) + 2;
    HermiteSequence seq;
    seq.d = mask.d;
    seq.level = 0;
    seq.base = -radius;
    seq.values.assign(static_cast<std::size_t>(2 * radius + 1), zero_vec(mask.d));
    seq.at(0) = unit_vec(mask.d, component - 1);

    for (int level = 0; level < levels; ++level) {
        seq = refine(mask, seq);
    }

    const long long grow = (1LL << levels) - 1;
    const long long spread_lo = static_cast<long long>(mask.lo()) * grow;
    const long long spread_hi = static_cast<long long>(mask.hi()) * grow;
    const Rational scale = pow2(-levels);
    std::vector<LimitSample> out;
    for (int i = seq.base; i <= seq.last(); ++i) {
        if (i < spread_lo || i > spread_hi) {
            continue;
        }
        out.push_back(LimitSample{(i + t0) * scale, seq.at(i)});
    }
    return out;
}

} // namespace hsubdiv
