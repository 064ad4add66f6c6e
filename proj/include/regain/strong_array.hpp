#pragma once

#include "regain/approx.hpp"
#include "regain/finset.hpp"
#include "regain/rate.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace regain {

/// Stage-indexed finite sets A_n ⊆ {0..n-1} whose dyadic values 2^{-A_n}
/// are nondecreasing: a uniformly computable approximation from the left.
class StrongArray {
public:
    explicit StrongArray(std::function<FinSet(std::uint64_t)> at) : at_(std::move(at)) {}

    FinSet at(std::uint64_t n) const { return at_(n); }

    /// Checks both invariants on [0, hi]; throws invariant_error.
    void validate_upto(std::uint64_t hi) const;

    /// From a fully materialized prefix.
    static StrongArray from_table(std::vector<FinSet> table);

private:
    std::function<FinSet(std::uint64_t)> at_;
};

/// a_n = 2^{-A_n}; invariants are enforced as values are pulled.
ApproxSeqPtr array_to_seq(const StrongArray& arr);

struct CatchupWitness {
    std::uint64_t n = 0;
    enum class Outcome { equal, case_iii, case_iv } outcome = Outcome::equal;
};

struct CatchupResult {
    std::vector<std::uint64_t> s;  // increasing index function, one value per n < horizon
    std::uint64_t threshold_n = 0;  // the proof's N
    bool threshold_discovered = false;
    std::vector<std::uint64_t> r_witnesses;       // n with 2^{-A_ref} - 2^{-B_{r(n)}} < 2^{-n}
    std::vector<CatchupWitness> checked;          // outcome per r-witness >= N
    std::vector<std::uint64_t> case_i_reports;    // witnesses where case (i) held (contradiction)
    bool all_equal = true;  // every checked witness produced prefix equality
};

/// Executes the index-function construction literally: below the threshold
/// N the identity is used; from N on, s(n) is the minimal k > s(n-1) whose
/// prefix value has caught up by 2^{-n}. Every r-witness >= N is then
/// checked for B_{s(n)} ∩ {0..n-1} = A_ref ∩ {0..n-1}, and the failing
/// case ((iii) or (iv)) is reported when equality does not hold.
CatchupResult catchup_indices(const StrongArray& b, const RateFunction& r, const FinSet& a_ref,
                              std::uint64_t horizon,
                              std::optional<std::uint64_t> threshold_n = std::nullopt,
                              std::uint64_t search_limit = 1u << 20);

}  // namespace regain
