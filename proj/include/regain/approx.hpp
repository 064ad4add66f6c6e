#pragma once

#include "regain/bitstring.hpp"
#include "regain/dyadic.hpp"
#include "regain/rate.hpp"
#include "regain/stream.hpp"

#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace regain {

/// Pull stream of dyadics with a declared monotonicity that is enforced
/// on the fly: emitting a value that breaks the declaration throws
/// invariant_error. Single consumer; clone() restarts from index 0.
class ApproxSeq {
public:
    explicit ApproxSeq(Monotone declared) : declared_(declared) {}
    virtual ~ApproxSeq() = default;

    Dyadic next();

    Monotone declared() const { return declared_; }
    virtual std::unique_ptr<ApproxSeq> clone() const = 0;

protected:
    virtual Dyadic do_next() = 0;

private:
    Monotone declared_;
    std::optional<Dyadic> last_;
};

using ApproxSeqPtr = std::unique_ptr<ApproxSeq>;

class TableSeq final : public ApproxSeq {
public:
    /// Finite table; the last value repeats forever (empty table: constant 0).
    TableSeq(std::vector<Dyadic> vals, Monotone declared)
        : ApproxSeq(declared), vals_(std::move(vals)) {}

    ApproxSeqPtr clone() const override { return std::make_unique<TableSeq>(vals_, declared()); }
    const std::vector<Dyadic>& values() const { return vals_; }

protected:
    Dyadic do_next() override {
        if (vals_.empty()) return Dyadic::zero();
        Dyadic v = pos_ < vals_.size() ? vals_[pos_] : vals_.back();
        ++pos_;
        return v;
    }

private:
    std::vector<Dyadic> vals_;
    std::size_t pos_ = 0;
};

class GeneratorSeq final : public ApproxSeq {
public:
    GeneratorSeq(std::function<Dyadic(std::uint64_t)> fn, Monotone declared)
        : ApproxSeq(declared), fn_(std::move(fn)) {}

    ApproxSeqPtr clone() const override { return std::make_unique<GeneratorSeq>(fn_, declared()); }

protected:
    Dyadic do_next() override { return fn_(pos_++); }

private:
    std::function<Dyadic(std::uint64_t)> fn_;
    std::uint64_t pos_ = 0;
};

/// Random access over a consumed-once sequence. Values live in a deque so
/// growing the cache never invalidates references already handed out.
class SeqCache {
public:
    explicit SeqCache(ApproxSeqPtr src) : src_(std::move(src)) {}

    const Dyadic& at(std::uint64_t i) {
        while (vals_.size() <= i) vals_.push_back(src_->next());
        return vals_[i];
    }

private:
    ApproxSeqPtr src_;
    std::deque<Dyadic> vals_;
};

enum class WitnessMode { exact_limit, horizon_necessary };

struct WitnessReport {
    std::uint64_t horizon = 0;
    std::vector<std::uint64_t> witnesses;
    WitnessMode mode = WitnessMode::horizon_necessary;

    bool has(std::uint64_t n) const;
    std::string str() const;
    static WitnessReport parse(const std::string& text);
};

/// Indices n < horizon where the approximation catches up. With a limit,
/// exact_limit mode tests limit - a_n < 2^{-n} exactly; without one,
/// horizon_necessary tests against the last value seen and only rules
/// witnesses out, never confirms them.
WitnessReport witnesses(const ApproxSeq& seq, const std::optional<Dyadic>& limit,
                        std::uint64_t horizon);

/// Catch-up indices measured against 2^{-f(n)} instead of 2^{-n}.
WitnessReport witnesses_with_rate(const ApproxSeq& seq, const RateFunction& f,
                                  const Dyadic& limit, std::uint64_t horizon);

/// From a nondecreasing catch-up sequence to an increasing one catching up
/// at rate 2^{-f(n)}: a_n = b_{g(n+1)} - 2^{-g(n)} with
/// g(n) = 1 + n + max{f(m) : m <= n}.
ApproxSeqPtr transform_1_to_3(ApproxSeqPtr b, RateFunction f);

/// From a sequence catching up at rate 2^{-f(n)} (f nondecreasing,
/// unbounded) back to the 2^{-n} rate, by sampling right plateau ends:
/// a_n = b_{g(n)}. A plateau longer than plateau_limit throws
/// horizon_exhausted.
ApproxSeqPtr transform_4_to_1(ApproxSeqPtr b, RateFunction f,
                              std::uint64_t plateau_limit = 1u << 22);

/// b_n = a_{r(n)} for increasing r.
ApproxSeqPtr index_compress(ApproxSeqPtr a, RateFunction r);

/// Increasing r with a_{r(n)} >= b_n, found by the minimal search
/// r(n+1) = min{m > r(n) : a_m >= b_{n+1}}. Computed for n < count;
/// scans past search_limit throw horizon_exhausted.
RateFunction index_extract(ApproxSeqPtr a, ApproxSeqPtr b, std::uint64_t count,
                           std::uint64_t search_limit = 1u << 22);

/// Co-enumeration of the non-witness set: stage <m,n> emits n+1 when
/// a_m - a_n >= 2^{-n}, otherwise the filler e+1 (e a known non-witness).
EnumStreamPtr coenumerate_misses(ApproxSeqPtr a, std::uint64_t e);

/// Enumeration of the witness set from a modulus-true companion b:
/// stage <m,n> emits n+1 when b_m - a_n + 2^{-m} < 2^{-n}, else d+1.
EnumStreamPtr enumerate_witnesses_with_modulus(ApproxSeqPtr a, ApproxSeqPtr b, std::uint64_t d);

/// b_n = a_{r(n)} for a rate dominating the witness principal function;
/// when the domination contract holds the output is modulus-true.
ApproxSeqPtr speedup_via_bound(ApproxSeqPtr a, RateFunction r);

/// First n < horizon with limit - a_n >= 2^{-n}, if any: the modulus
/// check used to validate speedup_via_bound's postcondition.
std::optional<std::uint64_t> first_modulus_violation(const ApproxSeq& a, const Dyadic& limit,
                                                     std::uint64_t horizon);

/// Partial rational translation used by Solovay reductions.
using SolovayMap = std::function<std::optional<Dyadic>(const Dyadic&)>;

/// a_n = max{f(b_i) : i <= n}; throws invariant_error when f is undefined
/// on an emitted value.
ApproxSeqPtr solovay_transfer(SolovayMap f, ApproxSeqPtr b);

struct SolovayCheck {
    std::vector<std::uint64_t> premise_witnesses;  // n with beta - b_n < 2^{-n-c}
    std::vector<std::uint64_t> transferred;        // of those, n with alpha - a_n < 2^{-n}
    bool all_transferred = true;
};

/// Exact-limit verification of the witness transfer through a Solovay
/// translation with constant c.
SolovayCheck solovay_check(const SolovayMap& f, std::uint64_t c, const ApproxSeq& b,
                           const Dyadic& alpha, const Dyadic& beta, std::uint64_t horizon);

/// Length-n bracket of a value in [0,1): u with 0.u <= a < 0.u + 2^{-n}
/// and its successor v (v = u when u is all ones).
std::pair<BitString, BitString> bracket_strings(const Dyadic& a, std::uint64_t n);

}  // namespace regain
