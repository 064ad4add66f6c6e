#pragma once

#include "regain/interpreter.hpp"
#include "regain/stream.hpp"

#include <vector>

namespace regain {

struct DiagonalRun {
    std::vector<std::uint64_t> codes;  // the enumeration g, one code per stage
    std::uint64_t horizon = 0;

    EnumStreamPtr stream() const { return table_enum(codes); }
};

/// Builds the enumeration that defeats every halting-budget requirement:
/// stage t decodes (e, k) from its first pairing component and enumerates
/// <e,k> once interpreter e has produced increasing values up to <e,k+1>
/// within budget t and t has passed phi_e(<e,k+1>). The output enumerates
/// each element at most once.
DiagonalRun diagonalize_non_regaining(const InterpreterFamily& fam, std::uint64_t horizon);

struct RequirementCheck {
    std::uint64_t e = 0;
    std::uint64_t n = 0;
    std::uint64_t witness = 0;  // element of {0..n-1} ∩ A outside Enum(g)[phi_e(n)]
    bool holds = false;
};

/// Literal finite-scale check of requirement R_e against the horizon-stable
/// set: for every total, increasing e and every n in (<e,0>, n_max],
/// {0..n-1} ∩ A ⊄ Enum(g)[phi_e(n)]. Entries that diverge or fail to be
/// increasing on the inspected range are skipped.
std::vector<RequirementCheck> check_requirements(const DiagonalRun& run,
                                                 const InterpreterFamily& fam,
                                                 std::uint64_t n_max);

}  // namespace regain
