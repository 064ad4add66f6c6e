#include "regain/degree.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace regain {

EnumStreamPtr DegreeRun::g_enum() const {
    std::vector<std::uint64_t> codes;
    codes.reserve(g_values.size());
    for (const BigInt& g : g_values) {
        if (g >= BigInt(std::numeric_limits<std::uint64_t>::max()))
            throw invariant_error("DegreeRun::g_enum: g value too large for a stream code");
        codes.push_back(static_cast<std::uint64_t>(g) + 1);
    }
    return table_enum(std::move(codes));
}

namespace {

// Row reads during the build use three paths: a dense column for low rows,
// a whole-sum shortcut for rows above every threshold seen so far, and a
// generic event scan otherwise.
class ColumnTracker {
public:
    explicit ColumnTracker(std::uint64_t dense_cap) : dense_cap_(dense_cap) {}

    BigInt read(std::uint64_t i, const StageTable& table, std::uint64_t t) {
        if (i >= next_dense_ && i <= dense_cap_) grow_dense(i);
        if (i < next_dense_) return dense_[i];
        if (i > max_threshold_ || events_ == 0) return BigInt(i) + all_jumps_;
        return table.at(i, t);
    }

    void apply(std::uint64_t threshold, const BigInt& jump) {
        for (std::uint64_t i = threshold + 1; i < next_dense_; ++i) dense_[i] += jump;
        all_jumps_ += jump;
        if (events_ == 0 || threshold > max_threshold_) max_threshold_ = threshold;
        ++events_;
    }

private:
    void grow_dense(std::uint64_t upto) {
        // A fresh row above every threshold so far has taken all jumps.
        while (next_dense_ <= upto) {
            if (next_dense_ > max_threshold_ || events_ == 0)
                dense_.push_back(BigInt(next_dense_) + all_jumps_);
            else
                return;  // cannot extend cheaply; generic reads handle it
            ++next_dense_;
        }
    }

    std::uint64_t dense_cap_;
    std::vector<BigInt> dense_;
    std::uint64_t next_dense_ = 0;
    BigInt all_jumps_ = 0;
    std::uint64_t max_threshold_ = 0;
    std::uint64_t events_ = 0;
};

}  // namespace

DegreeRun degree_preserving_build(const EnumStream& f, std::uint64_t horizon) {
    auto src = f.clone();
    DegreeRun run;
    run.horizon = horizon;
    run.f_values.reserve(horizon);
    run.g_values.reserve(horizon);
    run.table.set_horizon(horizon);

    ColumnTracker col(512);
    std::unordered_set<std::uint64_t> seen;
    BigInt run_max = 0;  // max{t, g(0), ..., g(t)} maintained incrementally

    for (std::uint64_t t = 0; t < horizon; ++t) {
        std::uint64_t code = src->next();
        if (code == 0)
            throw invariant_error("degree_preserving_build: input emitted 0 at stage " +
                                  std::to_string(t));
        std::uint64_t value = code - 1;
        if (!seen.insert(value).second)
            throw invariant_error("degree_preserving_build: input repeated value " +
                                  std::to_string(value));
        run.f_values.push_back(value);

        BigInt g = col.read(value, run.table, t);
        if (BigInt(t) > run_max) run_max = t;
        if (g > run_max) run_max = g;
        run.g_values.push_back(g);

        BigInt jump = run_max + 1;
        col.apply(value, jump);
        run.table.record(t, value, std::move(jump));
    }
    return run;
}

DegreeClaims check_degree_claims(const DegreeRun& run, const std::vector<std::uint64_t>& rows) {
    DegreeClaims out;
    const std::uint64_t horizon = run.horizon;

    out.table_claims = true;
    try {
        run.table.check_claims_direct(rows);
    } catch (const invariant_error&) {
        out.table_claims = false;
    }

    // Suffix minima of f-values and g-values over stages.
    std::vector<std::uint64_t> f_sufmin(horizon + 1, std::numeric_limits<std::uint64_t>::max());
    for (std::uint64_t t = horizon; t-- > 0;)
        f_sufmin[t] = std::min(f_sufmin[t + 1], run.f_values[t]);
    std::vector<const BigInt*> g_sufmin(horizon, nullptr);
    for (std::uint64_t t = horizon; t-- > 0;) {
        g_sufmin[t] = &run.g_values[t];
        if (t + 1 < horizon && *g_sufmin[t + 1] < *g_sufmin[t]) g_sufmin[t] = g_sufmin[t + 1];
    }

    out.f_large_after_limit = true;
    out.g_large_after_limit = true;
    out.idgood_at_limits = true;
    for (std::uint64_t i : rows) {
        StageTable::RowStatus st = run.table.row_status(i);
        if (st.limit >= BigInt(horizon)) continue;  // no window inside the horizon
        std::uint64_t s = static_cast<std::uint64_t>(st.limit);
        if (f_sufmin[s] < i) out.f_large_after_limit = false;
        if (s < horizon && *g_sufmin[s] < st.limit) out.g_large_after_limit = false;

        // Id-goodness of t -> g(t)+1 at n = S_i, as a literal inclusion:
        // every output value below S_i appears strictly before stage S_i.
        std::unordered_set<std::uint64_t> early;
        for (std::uint64_t t = 0; t < s; ++t)
            if (run.g_values[t] < st.limit)
                early.insert(static_cast<std::uint64_t>(run.g_values[t]));
        for (std::uint64_t t = 0; t < horizon; ++t)
            if (run.g_values[t] < st.limit &&
                !early.count(static_cast<std::uint64_t>(run.g_values[t])))
                out.idgood_at_limits = false;
    }

    std::vector<BigInt> sorted = run.g_values;
    std::sort(sorted.begin(), sorted.end());
    out.g_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return out;
}

bool decode_A_from_stage_limits(const DegreeRun& run, const std::vector<BigInt>& s_limits,
                                std::uint64_t n) {
    if (n + 1 >= s_limits.size())
        throw horizon_exhausted("decode_A: S_" + std::to_string(n + 1) + " not supplied");
    const BigInt& bound = s_limits[n + 1];
    std::uint64_t t_max = bound > BigInt(run.horizon) ? run.horizon
                                                      : static_cast<std::uint64_t>(bound);
    for (std::uint64_t t = 0; t < t_max; ++t)
        if (run.f_values[t] == n) return true;
    return false;
}

bool decode_B_from_stage_limits(const DegreeRun& run, const std::vector<BigInt>& s_limits,
                                std::uint64_t n) {
    std::size_t i = 0;
    while (i < s_limits.size() && s_limits[i] <= BigInt(n)) ++i;
    if (i == s_limits.size())
        throw horizon_exhausted("decode_B: no supplied S_i exceeds n=" + std::to_string(n));
    const BigInt& bound = s_limits[i];
    std::uint64_t t_max = bound > BigInt(run.horizon) ? run.horizon
                                                      : static_cast<std::uint64_t>(bound);
    for (std::uint64_t t = 0; t < t_max; ++t)
        if (run.g_values[t] == BigInt(n)) return true;
    return false;
}

BigInt recover_S_from_A(const DegreeRun& run, std::uint64_t i) {
    // Everything of the set below i, as known at the horizon.
    std::unordered_set<std::uint64_t> pending;
    for (std::uint64_t v : run.f_values)
        if (v < i) pending.insert(v);
    std::uint64_t t = 0;
    while (!pending.empty()) {
        if (t >= run.horizon)
            throw horizon_exhausted("recover_S_from_A: inclusion not reached within horizon");
        pending.erase(run.f_values[t]);
        ++t;
    }
    return run.table.at(i, t);
}

BigInt recover_S_from_B(const DegreeRun& run, const std::vector<BigInt>& s_prefix,
                        std::uint64_t i) {
    if (i + 1 > s_prefix.size() || s_prefix.size() == 0)
        throw horizon_exhausted("recover_S_from_B: prefix S_0..S_i required");
    const BigInt& s_i = s_prefix[i];

    // Case (i): S_i is a g-value whose stage satisfies f(t) = i, t >= S_i.
    for (std::uint64_t t = 0; t < run.horizon; ++t) {
        if (run.g_values[t] == s_i) {
            if (run.f_values[t] == i && BigInt(t) >= s_i)
                return run.table.at(i + 1, t + 1);
            break;  // g injective: no other stage can match
        }
    }
    // Case (ii).
    if (s_i > BigInt(run.horizon))
        throw horizon_exhausted("recover_S_from_B: S_i beyond the horizon");
    return run.table.at(i + 1, static_cast<std::uint64_t>(s_i));
}

}  // namespace regain
