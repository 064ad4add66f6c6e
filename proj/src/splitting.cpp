#include "regain/splitting.hpp"

#include "regain/enum_ops.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace regain {

namespace {

constexpr std::uint64_t kMaxDenseRows = std::uint64_t{1} << 24;

// Dense view of the low rows of the stage table, which are the only rows
// the k_t search can ever select. Rows are materialized lazily: a row
// above every threshold so far has value i + (sum of all jumps).
class LowRows {
public:
    void ensure(std::uint64_t top_row) {
        if (top_row + 1 > kMaxDenseRows)
            throw horizon_exhausted("split_stream: code too large for dense row tracking");
        while (col_.size() <= top_row) {
            std::uint64_t i = col_.size();
            col_.push_back(i + total_jump_);
        }
    }

    // min{j : s_j > n}; the column is increasing, so binary search works.
    std::uint64_t first_above(std::uint64_t n) const {
        auto it = std::upper_bound(col_.begin(), col_.end(), n);
        return static_cast<std::uint64_t>(it - col_.begin());
    }

    void bump_above(std::uint64_t threshold, std::uint64_t jump) {
        for (std::size_t i = threshold + 1; i < col_.size(); ++i) col_[i] += jump;
        total_jump_ += jump;
    }

private:
    std::vector<std::uint64_t> col_;
    std::uint64_t total_jump_ = 0;
};

}  // namespace

SplitResult split_stream(const EnumStream& f, std::uint64_t horizon) {
    auto src = f.clone();
    SplitResult out;
    out.g.reserve(horizon);
    out.h.reserve(horizon);
    out.table.set_horizon(horizon);

    LowRows rows;
    for (std::uint64_t t = 0; t < horizon; ++t) {
        std::uint64_t code = src->next();
        if (code == 0) {
            out.g.push_back(0);
            out.h.push_back(0);
            continue;
        }
        std::uint64_t n = code - 1;
        rows.ensure(n + 1);
        std::uint64_t k = rows.first_above(n);
        if (k % 2 == 0) {
            out.g.push_back(0);
            out.h.push_back(n + 1);
        } else {
            out.g.push_back(n + 1);
            out.h.push_back(0);
        }
        rows.bump_above(k, t + 1);
        out.table.record(t, k, BigInt(t + 1));
    }
    return out;
}

SplitResult split_ce_set(const EnumStream& f_c, std::uint64_t horizon) {
    auto stripped = without_repetitions(f_c.clone());
    return split_stream(*stripped, horizon);
}

namespace {

class PartialSums final : public ApproxSeq {
public:
    PartialSums(EnumStreamPtr d, std::optional<std::uint64_t> bound)
        : ApproxSeq(Monotone::nondecreasing), d_(std::move(d)), bound_(bound) {}

    ApproxSeqPtr clone() const override {
        return std::make_unique<PartialSums>(d_->clone(), bound_);
    }

protected:
    Dyadic do_next() override {
        Dyadic out = acc_;  // sum of the codes strictly before this stage
        std::uint64_t code = d_->next();
        if (code > 0) {
            if (bound_) {
                std::uint64_t c = ++counts_[code];
                if (c > *bound_)
                    throw invariant_error("delta name: code " + std::to_string(code) +
                                          " exceeded multiplicity bound " +
                                          std::to_string(*bound_));
            }
            acc_ += Dyadic::pow2_neg(code);
        }
        return out;
    }

private:
    EnumStreamPtr d_;
    std::optional<std::uint64_t> bound_;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;
    Dyadic acc_;
};

}  // namespace

ApproxSeqPtr deltaname_partial_sums(const DeltaName& d) {
    return std::make_unique<PartialSums>(d.stream->clone(), d.multiplicity_bound);
}

RegularSplit split_regular(const DeltaName& d, std::uint64_t horizon) {
    if (d.multiplicity_bound) {
        // Enforce the input's bound over the run before splitting.
        auto probe = d.stream->clone();
        std::unordered_map<std::uint64_t, std::uint64_t> counts;
        for (std::uint64_t t = 0; t < horizon; ++t) {
            std::uint64_t code = probe->next();
            if (code > 0 && ++counts[code] > *d.multiplicity_bound)
                throw invariant_error("split_regular: input violates its multiplicity bound at t=" +
                                      std::to_string(t));
        }
    }
    SplitResult sr = split_stream(*d.stream, horizon);
    RegularSplit out;
    out.alpha = DeltaName{table_enum(std::move(sr.g)), d.multiplicity_bound};
    out.beta = DeltaName{table_enum(std::move(sr.h)), d.multiplicity_bound};
    out.table = std::move(sr.table);
    return out;
}

std::vector<std::uint64_t> code_counts(const std::vector<std::uint64_t>& codes,
                                       std::uint64_t max_code) {
    std::vector<std::uint64_t> counts(max_code + 1, 0);
    for (std::uint64_t c : codes)
        if (c > 0 && c <= max_code) ++counts[c];
    return counts;
}

std::vector<CatchupStage> certified_catchups(const StageTable& table,
                                             const std::vector<std::uint64_t>& codes,
                                             bool even_rows, std::uint64_t max_row) {
    // Smallest positive code at or after each stage; sentinel past the end.
    constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> suffix_min(codes.size() + 1, inf);
    for (std::size_t t = codes.size(); t-- > 0;)
        suffix_min[t] = std::min(suffix_min[t + 1], codes[t] == 0 ? inf : codes[t]);

    std::vector<CatchupStage> out;
    for (std::uint64_t i = even_rows ? 0 : 1; i <= max_row; i += 2) {
        StageTable::RowStatus st = table.row_status(i);
        if (!st.certified) continue;
        CatchupStage cs;
        cs.row = i;
        cs.t = static_cast<std::uint64_t>(st.limit);
        std::uint64_t from = std::min<std::uint64_t>(cs.t, codes.size());
        // Inclusion fails iff some code <= S_i is still emitted at stage >= S_i.
        cs.inclusion = suffix_min[from] > cs.t;
        out.push_back(cs);
    }
    return out;
}

}  // namespace regain
