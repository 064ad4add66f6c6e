#include "regain/omega.hpp"

#include "regain/errors.hpp"

#include <algorithm>

namespace regain {

namespace {

// Prefix of a_{t-1} under the all-ones-tail convention; a value of 0
// stands for the integer below 1, so its prefix is all ones.
BitString stage_prefix(const Dyadic& a, std::uint64_t len) {
    if (a.is_zero()) return real_prefix(Dyadic::one(), len);
    return real_prefix(a, len);
}

}  // namespace

OmegaRun omega_weighting(const PrefixMachine& m, std::uint64_t horizon) {
    OmegaRun run;
    run.horizon = horizon;
    run.rows = horizon;
    if (horizon == 0) return run;

    const std::uint64_t rows = run.rows;
    const std::uint64_t out_len = m.max_output_length();

    run.ell.assign(horizon, std::vector<std::uint64_t>(rows, 0));
    run.r.assign(horizon, std::vector<std::uint64_t>(rows, 0));
    run.w.assign(horizon, std::vector<std::uint64_t>(rows, kInfWeight));
    run.a.assign(horizon, Dyadic::zero());
    run.i_t.assign(horizon, kInfWeight);

    for (std::uint64_t n = 0; n < rows; ++n) run.r[0][n] = n;

    Dyadic acc = Dyadic::zero();
    for (std::uint64_t t = 1; t < horizon; ++t) {
        // Lengths m whose stage-t complexity fails to exceed m; everything
        // longer than any machine output has infinite complexity.
        std::vector<bool> low_k(out_len + 1, false);
        BitString bits = stage_prefix(run.a[t - 1], out_len);
        for (std::uint64_t len = 1; len <= out_len; ++len) {
            auto k = k_approx(m, bits.prefix(len), t);
            low_k[len] = k && *k <= len;
        }

        auto& ell = run.ell[t];
        ell[0] = 0;
        for (std::uint64_t n = 1; n < rows; ++n) {
            std::uint64_t cand = ell[n - 1] + 1;
            while (cand <= out_len && low_k[cand]) ++cand;
            ell[n] = cand;
        }

        std::uint64_t min_changed = kInfWeight;
        for (std::uint64_t i = 0; i < std::min<std::uint64_t>(t, rows); ++i) {
            if (run.ell[t][i] != run.ell[t - 1][i]) {
                min_changed = i;
                break;
            }
        }
        run.i_t[t] = min_changed;

        if (min_changed == kInfWeight) {
            run.r[t] = run.r[t - 1];
            run.w[t] = run.w[t - 1];
        } else {
            for (std::uint64_t n = 0; n < rows; ++n)
                run.r[t][n] = run.r[t - 1][n] + (n > min_changed ? t : 0);
            std::uint64_t cap = run.r[t][min_changed];
            for (std::uint64_t n = 0; n < rows; ++n) {
                if (n >= t) {
                    run.w[t][n] = kInfWeight;
                    continue;
                }
                std::uint64_t prev = run.w[t - 1][n];
                std::uint64_t cur = std::min(prev, cap);
                run.w[t][n] = cur;
                // Only machine-domain indices contribute to the sum.
                if (cur != prev && n < m.size()) {
                    Dyadic fresh = Dyadic::pow2_neg(cur + m.program(n).length());
                    if (prev != kInfWeight)
                        fresh -= Dyadic::pow2_neg(prev + m.program(n).length());
                    acc += fresh;
                }
            }
        }
        run.a[t] = acc;
    }
    return run;
}

OmegaClaims check_omega_claims(const OmegaRun& run) {
    OmegaClaims out;
    out.r_increasing_in_n = true;
    out.r_nondecreasing_in_t = true;
    out.w_nondecreasing_in_n = true;
    out.w_nonincreasing_in_t = true;
    out.a_below_one = true;
    for (std::uint64_t t = 0; t < run.horizon; ++t) {
        for (std::uint64_t n = 0; n < run.rows; ++n) {
            if (n + 1 < run.rows && !(run.r[t][n] < run.r[t][n + 1]))
                out.r_increasing_in_n = false;
            if (n + 1 < run.rows && run.w[t][n] > run.w[t][n + 1])
                out.w_nondecreasing_in_n = false;
            if (n >= t && run.w[t][n] != kInfWeight) out.w_nondecreasing_in_n = false;
            if (t > 0) {
                if (run.r[t][n] < run.r[t - 1][n]) out.r_nondecreasing_in_t = false;
                if (run.w[t][n] > run.w[t - 1][n]) out.w_nonincreasing_in_t = false;
            }
        }
        if (!(run.a[t] < Dyadic::one())) out.a_below_one = false;
    }
    return out;
}

std::uint64_t drop_stage(const OmegaRun& run, std::uint64_t m) {
    // s_m = last stage whose minimal changed row lies below m.
    std::uint64_t best = 0;
    for (std::uint64_t s = 1; s < run.horizon; ++s)
        if (run.i_t[s] != kInfWeight && run.i_t[s] < m) best = s;
    return best;
}

std::vector<DropCheck> check_drop_stages(const OmegaRun& run, std::uint64_t m_max) {
    std::vector<DropCheck> out;
    std::uint64_t last_sm = kInfWeight;
    for (std::uint64_t m = 0; m <= m_max; ++m) {
        std::uint64_t sm = drop_stage(run, m);
        if (sm == 0 || sm == last_sm) continue;
        last_sm = sm;

        DropCheck dc;
        dc.m = m;
        dc.s_m = sm;
        dc.tail_bound = run.a[run.horizon - 1] - run.a[sm] < Dyadic::pow2_neg(sm);
        dc.weights_frozen = true;
        for (std::uint64_t n = 0; n < std::min(sm, run.rows); ++n)
            if (run.w[run.horizon - 1][n] != run.w[sm][n]) dc.weights_frozen = false;
        dc.weights_large = true;
        for (std::uint64_t n = sm; n < run.rows; ++n) {
            std::uint64_t wn = run.w[run.horizon - 1][n];
            if (wn != kInfWeight && wn < sm) dc.weights_large = false;
        }
        out.push_back(dc);
    }
    return out;
}

}  // namespace regain
