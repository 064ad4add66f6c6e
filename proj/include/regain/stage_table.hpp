#pragma once

#include "regain/dyadic.hpp"
#include "regain/errors.hpp"

#include <cstdint>
#include <vector>

namespace regain {

/// Two-argument table s_i[t] with s_i[0] = i, where stage t either leaves
/// the column unchanged or adds a positive jump to every row above a
/// threshold:
///
///     s_i[t+1] = s_i[t] + (i > threshold_t ? jump_t : 0).
///
/// Both constructions that use such tables (the degree-preserving builder
/// and the splitting algorithm) fit this shape, so the table is stored
/// sparsely as the list of (stage, threshold, jump) events; any entry is
/// recovered as i plus the jumps of earlier events whose threshold lies
/// below i. Columns are increasing in i and rows nondecreasing in t by
/// construction; the direct-scan checkers below verify this against the
/// stored representation rather than assuming it.
class StageTable {
public:
    struct Event {
        std::uint64_t stage;      // update happened between columns stage and stage+1
        std::uint64_t threshold;  // rows strictly above this jumped
        BigInt jump;              // > 0
    };

    void record(std::uint64_t stage, std::uint64_t threshold, BigInt jump);
    void set_horizon(std::uint64_t h) { horizon_ = h; }
    std::uint64_t horizon() const { return horizon_; }
    const std::vector<Event>& events() const { return events_; }

    /// s_i[t]; O(#events before t).
    BigInt at(std::uint64_t i, std::uint64_t t) const;
    /// s_i[horizon].
    BigInt final_value(std::uint64_t i) const { return at(i, horizon_); }

    struct RowStatus {
        BigInt limit;                  // final row value within the horizon
        std::uint64_t stabilized_at;   // first stage from which the row is constant
        bool certified;                // limit reached by stage `limit` and horizon >= 2*limit
    };
    /// Certification follows the eventual-constancy claim: the limit must
    /// already hold at stage index equal to its own value, with at least
    /// as much horizon again beyond it as guard.
    RowStatus row_status(std::uint64_t i) const;

    /// Literal per-stage scans over the given rows (sorted ascending):
    /// columns increasing, rows nondecreasing, and rows constant from
    /// stage S_i on for every row whose limit is below the horizon.
    /// Throws invariant_error naming the violated claim.
    void check_claims_direct(const std::vector<std::uint64_t>& rows) const;

private:
    std::vector<Event> events_;
    std::uint64_t horizon_ = 0;
};

}  // namespace regain
