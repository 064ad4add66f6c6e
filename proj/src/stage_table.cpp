#include "regain/stage_table.hpp"

#include <string>

namespace regain {

void StageTable::record(std::uint64_t stage, std::uint64_t threshold, BigInt jump) {
    if (jump <= 0) throw invariant_error("StageTable: nonpositive jump recorded");
    if (!events_.empty() && events_.back().stage >= stage)
        throw invariant_error("StageTable: events out of stage order");
    events_.push_back(Event{stage, threshold, std::move(jump)});
}

BigInt StageTable::at(std::uint64_t i, std::uint64_t t) const {
    BigInt v = i;
    for (const Event& e : events_) {
        if (e.stage + 1 > t) break;
        if (i > e.threshold) v += e.jump;
    }
    return v;
}

StageTable::RowStatus StageTable::row_status(std::uint64_t i) const {
    RowStatus st;
    st.limit = i;
    st.stabilized_at = 0;
    for (const Event& e : events_) {
        if (e.stage + 1 > horizon_) break;
        if (i > e.threshold) {
            st.limit += e.jump;
            st.stabilized_at = e.stage + 1;
        }
    }
    st.certified = BigInt(st.stabilized_at) <= st.limit && st.limit * 2 <= BigInt(horizon_);
    return st;
}

void StageTable::check_claims_direct(const std::vector<std::uint64_t>& rows) const {
    if (rows.empty()) return;
    std::vector<BigInt> col;
    col.reserve(rows.size());
    for (std::uint64_t i : rows) col.push_back(BigInt(i));

    std::vector<RowStatus> status;
    status.reserve(rows.size());
    for (std::uint64_t i : rows) status.push_back(row_status(i));

    std::size_t next_event = 0;
    for (std::uint64_t t = 0; t < horizon_; ++t) {
        // Claim: the column is increasing in i.
        for (std::size_t k = 1; k < rows.size(); ++k)
            if (!(col[k - 1] < col[k]))
                throw invariant_error("stage table claim violated: column not increasing at t=" +
                                      std::to_string(t));
        // Claim: a stabilized row holds its limit from stage S_i on.
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (status[k].limit <= BigInt(horizon_) && BigInt(t) >= status[k].limit &&
                col[k] != status[k].limit)
                throw invariant_error("stage table claim violated: row " +
                                      std::to_string(rows[k]) + " not constant from S_i at t=" +
                                      std::to_string(t));
        }
        if (next_event < events_.size() && events_[next_event].stage == t) {
            const Event& e = events_[next_event++];
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (rows[k] > e.threshold) {
                    // Rows are nondecreasing since jumps are positive.
                    col[k] += e.jump;
                }
            }
        }
    }
}

}  // namespace regain
