#pragma once

#include "regain/prefix_machine.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace regain {

/// Sentinel for an infinite weight; 2^{-infinity} contributes 0.
inline constexpr std::uint64_t kInfWeight = std::numeric_limits<std::uint64_t>::max();

/// Full state history of the weighted-Omega construction: the length
/// guesses l(n)[t], the weight-reduction counters r(n)[t], the applied
/// weights w(n)[t] and the partial sums a_t. Histories are stored densely
/// (stage-major) so every claim can be re-scanned after the run.
struct OmegaRun {
    std::uint64_t horizon = 0;
    std::uint64_t rows = 0;  // tracked n-range; rows == horizon
    std::vector<std::vector<std::uint64_t>> ell;  // ell[t][n]
    std::vector<std::vector<std::uint64_t>> r;    // r[t][n]
    std::vector<std::vector<std::uint64_t>> w;    // w[t][n], kInfWeight = infinity
    std::vector<Dyadic> a;                        // a[t]
    std::vector<std::uint64_t> i_t;               // minimal changed l-row, kInfWeight = none
};

/// Runs the construction against a toy machine for `horizon` stages.
OmegaRun omega_weighting(const PrefixMachine& m, std::uint64_t horizon);

struct OmegaClaims {
    bool r_increasing_in_n = false;
    bool r_nondecreasing_in_t = false;
    bool w_nondecreasing_in_n = false;  // with infinite tail from n = t on
    bool w_nonincreasing_in_t = false;
    bool a_below_one = false;

    bool all() const {
        return r_increasing_in_n && r_nondecreasing_in_t && w_nondecreasing_in_n &&
               w_nonincreasing_in_t && a_below_one;
    }
};

/// Direct scans of the run invariants at every stage.
OmegaClaims check_omega_claims(const OmegaRun& run);

/// s_m = the last stage where some l-row below m (and below the stage)
/// changed; 0 when none did.
std::uint64_t drop_stage(const OmegaRun& run, std::uint64_t m);

struct DropCheck {
    std::uint64_t m = 0;
    std::uint64_t s_m = 0;
    bool tail_bound = false;      // a_{horizon-1} - a_{s_m} < 2^{-s_m}
    bool weights_frozen = false;  // W(n) = w(n)[s_m] for n < s_m
    bool weights_large = false;   // W(n) >= s_m for n >= s_m
};

/// Evaluates the catch-up checks at every distinct positive drop stage
/// s_m with m <= m_max.
std::vector<DropCheck> check_drop_stages(const OmegaRun& run, std::uint64_t m_max);

}  // namespace regain
