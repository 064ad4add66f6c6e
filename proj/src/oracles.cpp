#include "regain/oracles.hpp"

#include <algorithm>

namespace regain::oracle {

FinSet enum_prefix(const std::vector<std::uint64_t>& codes, std::uint64_t t) {
    std::vector<std::uint64_t> elems;
    for (std::uint64_t k = 0; k < t && k < codes.size(); ++k)
        if (codes[k] > 0) elems.push_back(codes[k] - 1);
    return FinSet(std::move(elems));
}

SplitOracle split_stream(const std::vector<std::uint64_t>& codes, std::uint64_t horizon,
                         std::uint64_t rows, bool keep_history) {
    SplitOracle out;
    std::vector<std::uint64_t> s(rows);
    for (std::uint64_t i = 0; i < rows; ++i) s[i] = i;
    if (keep_history) out.history.push_back(s);

    for (std::uint64_t t = 0; t < horizon; ++t) {
        std::uint64_t code = t < codes.size() ? codes[t] : 0;
        if (code == 0) {
            out.g.push_back(0);
            out.h.push_back(0);
        } else {
            std::uint64_t n = code - 1;
            std::uint64_t k = 0;
            while (k < rows && s[k] <= n) ++k;
            if (k == rows) throw invariant_error("split oracle: row range too small");
            if (k % 2 == 0) {
                out.g.push_back(0);
                out.h.push_back(n + 1);
            } else {
                out.g.push_back(n + 1);
                out.h.push_back(0);
            }
            for (std::uint64_t i = k + 1; i < rows; ++i) s[i] += t + 1;
        }
        if (keep_history) out.history.push_back(s);
    }
    out.final_column = std::move(s);
    return out;
}

DegreeOracle degree_build(const std::vector<std::uint64_t>& values, std::uint64_t horizon,
                          std::uint64_t rows, bool keep_history) {
    DegreeOracle out;
    std::vector<BigInt> s(rows);
    for (std::uint64_t i = 0; i < rows; ++i) s[i] = i;
    if (keep_history) out.history.push_back(s);

    BigInt max_seen = 0;
    for (std::uint64_t t = 0; t < horizon; ++t) {
        std::uint64_t v = values[t];
        if (v >= rows) throw invariant_error("degree oracle: row range too small");
        BigInt g = s[v];
        out.g.push_back(g);
        if (BigInt(t) > max_seen) max_seen = t;
        if (g > max_seen) max_seen = g;
        BigInt jump = max_seen + 1;
        for (std::uint64_t i = v + 1; i < rows; ++i) s[i] += jump;
        if (keep_history) out.history.push_back(s);
    }
    out.final_column = std::move(s);
    return out;
}

OmegaRun omega_weighting(const PrefixMachine& m, std::uint64_t horizon) {
    OmegaRun run;
    run.horizon = horizon;
    run.rows = horizon;
    if (horizon == 0) return run;
    const std::uint64_t rows = run.rows;

    run.ell.assign(horizon, std::vector<std::uint64_t>(rows, 0));
    run.r.assign(horizon, std::vector<std::uint64_t>(rows, 0));
    run.w.assign(horizon, std::vector<std::uint64_t>(rows, kInfWeight));
    run.a.assign(horizon, Dyadic::zero());
    run.i_t.assign(horizon, kInfWeight);
    for (std::uint64_t n = 0; n < rows; ++n) run.r[0][n] = n;

    for (std::uint64_t t = 1; t < horizon; ++t) {
        const Dyadic& prev_a = run.a[t - 1];
        // l(n)[t] by the literal min-search, one fresh K query per length.
        for (std::uint64_t n = 1; n < rows; ++n) {
            std::uint64_t cand = run.ell[t][n - 1] + 1;
            while (true) {
                if (cand > m.max_output_length()) break;  // K = infinity beyond outputs
                Dyadic base = prev_a.is_zero() ? Dyadic::one() : prev_a;
                auto k = k_approx(m, real_prefix(base, cand), t);
                if (!k || *k > cand) break;
                ++cand;
            }
            run.ell[t][n] = cand;
        }

        std::uint64_t min_changed = kInfWeight;
        for (std::uint64_t i = 0; i < std::min<std::uint64_t>(t, rows); ++i)
            if (run.ell[t][i] != run.ell[t - 1][i]) {
                min_changed = i;
                break;
            }
        run.i_t[t] = min_changed;

        if (min_changed == kInfWeight) {
            run.r[t] = run.r[t - 1];
            run.w[t] = run.w[t - 1];
        } else {
            for (std::uint64_t n = 0; n < rows; ++n)
                run.r[t][n] = run.r[t - 1][n] + (n > min_changed ? t : 0);
            for (std::uint64_t n = 0; n < rows; ++n)
                run.w[t][n] =
                    n < t ? std::min(run.w[t - 1][n], run.r[t][min_changed]) : kInfWeight;
        }

        // a_t summed from scratch.
        Dyadic a;
        for (std::uint64_t n = 0; n < std::min<std::uint64_t>(t, m.size()); ++n)
            if (run.w[t][n] != kInfWeight)
                a += Dyadic::pow2_neg(run.w[t][n] + m.program(n).length());
        run.a[t] = a;
    }
    return run;
}

std::vector<std::uint64_t> exact_witnesses(const std::vector<Dyadic>& values,
                                           const Dyadic& limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n < values.size(); ++n)
        if (limit < values[n] + Dyadic::pow2_neg(n)) out.push_back(n);
    return out;
}

}  // namespace regain::oracle
