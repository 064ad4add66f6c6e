#include "regain/strong_array.hpp"

namespace regain {

void StrongArray::validate_upto(std::uint64_t hi) const {
    Dyadic prev = Dyadic::zero();
    for (std::uint64_t n = 0; n <= hi; ++n) {
        FinSet a = at_(n);
        if (!a.empty() && a.max() >= n)
            throw invariant_error("StrongArray: A_" + std::to_string(n) +
                                  " contains an element >= " + std::to_string(n));
        Dyadic v = set_to_real(a);
        if (n > 0 && v < prev)
            throw invariant_error("StrongArray: 2^{-A_n} decreased at n=" + std::to_string(n));
        prev = v;
    }
}

StrongArray StrongArray::from_table(std::vector<FinSet> table) {
    return StrongArray([table = std::move(table)](std::uint64_t n) -> FinSet {
        if (table.empty()) return FinSet();
        return n < table.size() ? table[n] : table.back();
    });
}

ApproxSeqPtr array_to_seq(const StrongArray& arr) {
    class ArraySeq final : public ApproxSeq {
    public:
        explicit ArraySeq(StrongArray a) : ApproxSeq(Monotone::nondecreasing), arr_(std::move(a)) {}
        ApproxSeqPtr clone() const override { return std::make_unique<ArraySeq>(arr_); }

    protected:
        Dyadic do_next() override {
            std::uint64_t n = pos_++;
            FinSet a = arr_.at(n);
            if (!a.empty() && a.max() >= n)
                throw invariant_error("array_to_seq: A_" + std::to_string(n) +
                                      " not a subset of {0..n-1}");
            return set_to_real(a);
        }

    private:
        StrongArray arr_;
        std::uint64_t pos_ = 0;
    };
    return std::make_unique<ArraySeq>(arr);
}

CatchupResult catchup_indices(const StrongArray& b, const RateFunction& r, const FinSet& a_ref,
                              std::uint64_t horizon, std::optional<std::uint64_t> threshold_n,
                              std::uint64_t search_limit) {
    r.require(Monotone::increasing, "catchup_indices");
    CatchupResult out;

    Dyadic a_real = set_to_real(a_ref);

    // r-witnesses and the prefix-equality pattern drive the threshold.
    std::vector<bool> equal_at(horizon, false);
    for (std::uint64_t n = 0; n < horizon; ++n) {
        FinSet brn = b.at(r(n));
        if (a_real - set_to_real(brn) < Dyadic::pow2_neg(n)) out.r_witnesses.push_back(n);
        equal_at[n] = a_ref.below(n) == brn.below(n);
    }

    if (threshold_n) {
        out.threshold_n = *threshold_n;
    } else {
        // Past the last n where the prefixes agree, the construction's
        // case split applies; N is one past that point.
        out.threshold_discovered = true;
        std::uint64_t last_equal = 0;
        bool any = false;
        for (std::uint64_t n = 0; n < horizon; ++n)
            if (equal_at[n]) {
                last_equal = n;
                any = true;
            }
        out.threshold_n = any ? last_equal + 1 : 0;
    }

    out.s.reserve(horizon);
    for (std::uint64_t n = 0; n < horizon; ++n) {
        if (n < out.threshold_n) {
            out.s.push_back(n);
            continue;
        }
        std::uint64_t lower = n == 0 ? 0 : out.s.back() + 1;
        Dyadic target = set_to_real(b.at(r(n)).below(n)) + Dyadic::pow2_neg(n);
        std::uint64_t k = lower;
        while (true) {
            if (k > search_limit)
                throw horizon_exhausted("catchup_indices: min-search for s(" + std::to_string(n) +
                                        ") exceeded the horizon");
            if (set_to_real(b.at(k).below(n)) >= target) break;
            ++k;
        }
        out.s.push_back(k);
    }

    for (std::uint64_t n : out.r_witnesses) {
        if (n < out.threshold_n) continue;
        // Case (i) would contradict coinfiniteness of the reference set.
        if (set_to_real(a_ref.below(n)) + Dyadic::pow2_neg(n) <=
            set_to_real(b.at(r(n)).below(n)))
            out.case_i_reports.push_back(n);

        CatchupWitness w;
        w.n = n;
        FinSet got = b.at(out.s[n]).below(n);
        FinSet want = a_ref.below(n);
        if (got == want) {
            w.outcome = CatchupWitness::Outcome::equal;
        } else {
            out.all_equal = false;
            if (set_to_real(want) + Dyadic::pow2_neg(n) <= set_to_real(got))
                w.outcome = CatchupWitness::Outcome::case_iii;
            else
                w.outcome = CatchupWitness::Outcome::case_iv;
        }
        out.checked.push_back(w);
    }
    return out;
}

}  // namespace regain
