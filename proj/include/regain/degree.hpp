#pragma once

#include "regain/stage_table.hpp"
#include "regain/stream.hpp"

#include <vector>

namespace regain {

/// One run of the degree-preserving builder. The input enumerates a value
/// f(t) > 0 coded as f(t)+1 at every stage (injectivity is validated
/// online); the output values g(t) = s_{f(t)}[t] grow geometrically, so
/// they are kept as exact big integers rather than stream codes.
struct DegreeRun {
    std::vector<std::uint64_t> f_values;  // decoded input values, horizon entries
    std::vector<BigInt> g_values;         // g(t)
    StageTable table;                     // event at every stage: threshold f(t), jump max{t,g(0..t)}+1
    std::uint64_t horizon = 0;

    /// The enumeration t -> g(t)+1 as a code stream; throws
    /// invariant_error when some g(t) does not fit a 64-bit code.
    EnumStreamPtr g_enum() const;
};

DegreeRun degree_preserving_build(const EnumStream& f, std::uint64_t horizon);

struct DegreeClaims {
    bool table_claims = false;       // columns increasing, rows nondecreasing & constant from S_i
    bool f_large_after_limit = false;  // f(t) >= i for t in [S_i, horizon)
    bool g_large_after_limit = false;  // g(t) >= S_i for t in [S_i, horizon)
    bool g_injective = false;
    bool idgood_at_limits = false;   // {0..S_i-1} ∩ B ⊆ Enum(g+1)[S_i] at checkable S_i

    bool all() const {
        return table_claims && f_large_after_limit && g_large_after_limit && g_injective &&
               idgood_at_limits;
    }
};

/// Direct scans of the construction's claims over the given rows.
DegreeClaims check_degree_claims(const DegreeRun& run, const std::vector<std::uint64_t>& rows);

/// Membership of n in the input's set, decided by scanning f strictly
/// below stage S_{n+1} (clipped to the horizon). s_limits[i] must hold
/// S_i; throws if n+1 is out of range.
bool decode_A_from_stage_limits(const DegreeRun& run, const std::vector<BigInt>& s_limits,
                                std::uint64_t n);

/// Membership of n in the output's set via the smallest S_i > n.
bool decode_B_from_stage_limits(const DegreeRun& run, const std::vector<BigInt>& s_limits,
                                std::uint64_t n);

/// S_i recovered by scanning f until everything of the input's set below i
/// has appeared, then reading s_i at that stage.
BigInt recover_S_from_A(const DegreeRun& run, std::uint64_t i);

/// S_{i+1} recovered from S_0..S_i and the output-side case split: either
/// S_i is a g-value whose stage t has f(t) = i and t >= S_i (then
/// s_{i+1}[t+1]), or s_{i+1}[S_i].
BigInt recover_S_from_B(const DegreeRun& run, const std::vector<BigInt>& s_prefix,
                        std::uint64_t i);

}  // namespace regain
