#pragma once

#include "regain/approx.hpp"
#include "regain/stage_table.hpp"
#include "regain/stream.hpp"

#include <optional>
#include <vector>

namespace regain {

/// Stream of summand codes for a non-negative real: code 0 contributes
/// nothing, code k > 0 contributes 2^{-k}. A multiplicity bound of n makes
/// it a (δ,n)-name; the bound is enforced online wherever the name is
/// consumed.
struct DeltaName {
    EnumStreamPtr stream;
    std::optional<std::uint64_t> multiplicity_bound;

    DeltaName clone() const { return {stream->clone(), multiplicity_bound}; }
};

struct SplitResult {
    std::vector<std::uint64_t> g;  // codes per stage, horizon entries
    std::vector<std::uint64_t> h;
    StageTable table;
};

/// The splitting algorithm: route each incoming code to g or h according
/// to the parity of k_t = min{j : s_j[t] > n}, bumping all rows above k_t
/// by t+1. Conservation (per-code multiset equality) holds stage by stage.
SplitResult split_stream(const EnumStream& f, std::uint64_t horizon);

/// Splitting for c.e. sets: repetitions are stripped first, so both
/// outputs are enumerations without repetitions of disjoint sets whose
/// union is the input's set at every horizon.
SplitResult split_ce_set(const EnumStream& f_c, std::uint64_t horizon);

/// A_t = sum of the first t summands, exactly. The multiplicity bound, if
/// any, is enforced as codes stream by.
ApproxSeqPtr deltaname_partial_sums(const DeltaName& d);

struct RegularSplit {
    DeltaName alpha;
    DeltaName beta;
    StageTable table;
};

/// Splits a δ-name (or (δ,n)-name) into two names of non-negative reals
/// summing exactly to the input; both inherit the multiplicity bound.
RegularSplit split_regular(const DeltaName& d, std::uint64_t horizon);

/// Per-code occurrence counts within a horizon.
std::vector<std::uint64_t> code_counts(const std::vector<std::uint64_t>& codes,
                                       std::uint64_t max_code);

struct CatchupStage {
    std::uint64_t row = 0;       // certified row index i
    std::uint64_t t = 0;         // the stage S_i
    bool inclusion = true;       // codes <= S_i appear only before stage S_i
};

/// Certified catch-up stages of one side of a split: even rows check g,
/// odd rows check h.
std::vector<CatchupStage> certified_catchups(const StageTable& table,
                                             const std::vector<std::uint64_t>& codes,
                                             bool even_rows, std::uint64_t max_row);

}  // namespace regain
