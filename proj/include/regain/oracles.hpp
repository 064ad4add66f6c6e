#pragma once

#include "regain/degree.hpp"
#include "regain/omega.hpp"
#include "regain/splitting.hpp"

#include <vector>

namespace regain::oracle {

/// Reference implementations transcribed token by token from the
/// definitions, with no sparse tables, no incremental sums and no search
/// shortcuts. They exist to be compared against the optimized paths and
/// must stay independent of them.

/// Enum(f)[t] by scanning a code table directly.
FinSet enum_prefix(const std::vector<std::uint64_t>& codes, std::uint64_t t);

struct SplitOracle {
    std::vector<std::uint64_t> g;
    std::vector<std::uint64_t> h;
    std::vector<std::uint64_t> final_column;            // s_i[horizon] for i < rows
    std::vector<std::vector<std::uint64_t>> history;    // history[t][i], kept when requested
};

/// The splitting recurrence over a dense column of `rows` rows.
SplitOracle split_stream(const std::vector<std::uint64_t>& codes, std::uint64_t horizon,
                         std::uint64_t rows, bool keep_history = false);

struct DegreeOracle {
    std::vector<BigInt> g;
    std::vector<BigInt> final_column;                   // s_i[horizon] for i < rows
    std::vector<std::vector<BigInt>> history;           // history[t][i], kept when requested
};

/// The degree-construction recurrence over a dense column; `rows` must
/// exceed every input value.
DegreeOracle degree_build(const std::vector<std::uint64_t>& values, std::uint64_t horizon,
                          std::uint64_t rows, bool keep_history = false);

/// The weighted-Omega recurrence with every quantity recomputed from its
/// definition at every stage (fresh K scans, fresh full sums for a_t).
OmegaRun omega_weighting(const PrefixMachine& m, std::uint64_t horizon);

/// Exact-limit witness scan phrased as limit < a_n + 2^{-n}.
std::vector<std::uint64_t> exact_witnesses(const std::vector<Dyadic>& values,
                                           const Dyadic& limit);

}  // namespace regain::oracle
