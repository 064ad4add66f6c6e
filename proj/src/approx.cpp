#include "regain/approx.hpp"

#include "regain/pairing.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace regain {

Dyadic ApproxSeq::next() {
    Dyadic v = do_next();
    if (last_) {
        bool ok = declared_ == Monotone::increasing ? v > *last_ : v >= *last_;
        if (!ok)
            throw invariant_error("ApproxSeq: declared " +
                                  std::string(declared_ == Monotone::increasing ? "increasing"
                                                                                : "nondecreasing") +
                                  " sequence emitted " + v.str() + " after " + last_->str());
    }
    last_ = v;
    return v;
}

bool WitnessReport::has(std::uint64_t n) const {
    return std::binary_search(witnesses.begin(), witnesses.end(), n);
}

std::string WitnessReport::str() const {
    std::ostringstream os;
    os << "WITNESSES v1 mode="
       << (mode == WitnessMode::exact_limit ? "exact_limit" : "horizon_necessary")
       << " horizon=" << horizon << "\n";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (i) os << ' ';
        os << witnesses[i];
    }
    os << "\n";
    return os.str();
}

WitnessReport WitnessReport::parse(const std::string& text) {
    std::istringstream is(text);
    std::string magic, v1, modetok, hortok;
    is >> magic >> v1 >> modetok >> hortok;
    if (magic != "WITNESSES" || v1 != "v1" || modetok.rfind("mode=", 0) != 0 ||
        hortok.rfind("horizon=", 0) != 0)
        throw io_error("WitnessReport::parse: bad header");
    WitnessReport r;
    std::string m = modetok.substr(5);
    if (m == "exact_limit") r.mode = WitnessMode::exact_limit;
    else if (m == "horizon_necessary") r.mode = WitnessMode::horizon_necessary;
    else throw io_error("WitnessReport::parse: bad mode '" + m + "'");
    r.horizon = std::stoull(hortok.substr(8));
    std::uint64_t w;
    while (is >> w) r.witnesses.push_back(w);
    return r;
}

WitnessReport witnesses(const ApproxSeq& seq, const std::optional<Dyadic>& limit,
                        std::uint64_t horizon) {
    auto s = seq.clone();
    std::vector<Dyadic> vals;
    vals.reserve(horizon);
    for (std::uint64_t n = 0; n < horizon; ++n) vals.push_back(s->next());

    WitnessReport rep;
    rep.horizon = horizon;
    if (limit) {
        rep.mode = WitnessMode::exact_limit;
        for (std::uint64_t n = 0; n < horizon; ++n) {
            if (vals[n] > *limit)
                throw invariant_error("witnesses: limit below a_" + std::to_string(n));
            if (*limit - vals[n] < Dyadic::pow2_neg(n)) rep.witnesses.push_back(n);
        }
    } else {
        rep.mode = WitnessMode::horizon_necessary;
        if (horizon == 0) return rep;
        const Dyadic& top = vals.back();
        for (std::uint64_t n = 0; n < horizon; ++n)
            if (top - vals[n] < Dyadic::pow2_neg(n)) rep.witnesses.push_back(n);
    }
    return rep;
}

WitnessReport witnesses_with_rate(const ApproxSeq& seq, const RateFunction& f,
                                  const Dyadic& limit, std::uint64_t horizon) {
    auto s = seq.clone();
    WitnessReport rep;
    rep.horizon = horizon;
    rep.mode = WitnessMode::exact_limit;
    for (std::uint64_t n = 0; n < horizon; ++n) {
        Dyadic v = s->next();
        if (v > limit) throw invariant_error("witnesses_with_rate: limit below a_" +
                                             std::to_string(n));
        if (limit - v < Dyadic::pow2_neg(f(n))) rep.witnesses.push_back(n);
    }
    return rep;
}

namespace {

class Transform13 final : public ApproxSeq {
public:
    Transform13(ApproxSeqPtr b, RateFunction f)
        : ApproxSeq(Monotone::increasing),
          b_src_(std::move(b)),
          b_(std::make_unique<SeqCache>(b_src_->clone())),
          f_(std::move(f)) {
        if (!f_.unbounded()) throw invariant_error("transform_1_to_3: f must be unbounded");
    }

    ApproxSeqPtr clone() const override {
        return std::make_unique<Transform13>(b_src_->clone(), f_);
    }

protected:
    Dyadic do_next() override {
        std::uint64_t n = pos_++;
        // g(m) = 1 + m + max{f(j) : j <= m}
        return b_->at(g(n + 1)) - Dyadic::pow2_neg(g(n));
    }

private:
    std::uint64_t g(std::uint64_t m) {
        while (max_upto_ <= m) {
            std::uint64_t v = f_(max_upto_);
            if (v > running_max_) running_max_ = v;
            ++max_upto_;
        }
        return 1 + m + running_max_;
    }

    ApproxSeqPtr b_src_;
    std::unique_ptr<SeqCache> b_;
    RateFunction f_;
    std::uint64_t pos_ = 0;
    std::uint64_t running_max_ = 0;
    std::uint64_t max_upto_ = 0;
};

class Transform41 final : public ApproxSeq {
public:
    Transform41(ApproxSeqPtr b, RateFunction f, std::uint64_t plateau_limit)
        : ApproxSeq(Monotone::nondecreasing),
          b_src_(std::move(b)),
          b_(std::make_unique<SeqCache>(b_src_->clone())),
          f_(std::move(f)),
          plateau_limit_(plateau_limit) {
        f_.require(Monotone::nondecreasing, "transform_4_to_1");
        if (!f_.unbounded()) throw invariant_error("transform_4_to_1: f must be unbounded");
    }

    ApproxSeqPtr clone() const override {
        return std::make_unique<Transform41>(b_src_->clone(), f_, plateau_limit_);
    }

protected:
    Dyadic do_next() override {
        if (!have_g_) {
            g_ = plateau_end(0);
            have_g_ = true;
        } else {
            g_ = plateau_end(g_ + 1);
        }
        return b_->at(g_);
    }

private:
    // Right end of the plateau of f containing index `from`.
    std::uint64_t plateau_end(std::uint64_t from) {
        std::uint64_t v = f_(from);
        std::uint64_t m = from;
        while (true) {
            if (m - from > plateau_limit_)
                throw horizon_exhausted("transform_4_to_1: plateau end beyond search limit at f=" +
                                        std::to_string(v));
            std::uint64_t nxt = f_(m + 1);
            if (nxt < v)
                throw invariant_error("transform_4_to_1: f decreased at m=" + std::to_string(m + 1));
            if (nxt > v) return m;
            ++m;
        }
    }

    ApproxSeqPtr b_src_;
    std::unique_ptr<SeqCache> b_;
    RateFunction f_;
    std::uint64_t plateau_limit_;
    std::uint64_t g_ = 0;
    bool have_g_ = false;
};

class IndexCompress final : public ApproxSeq {
public:
    IndexCompress(ApproxSeqPtr a, RateFunction r)
        : ApproxSeq(Monotone::nondecreasing),
          a_src_(std::move(a)),
          a_(std::make_unique<SeqCache>(a_src_->clone())),
          r_(std::move(r)) {
        r_.require(Monotone::increasing, "index_compress");
    }

    ApproxSeqPtr clone() const override {
        return std::make_unique<IndexCompress>(a_src_->clone(), r_);
    }

protected:
    Dyadic do_next() override {
        std::uint64_t n = pos_++;
        std::uint64_t idx = r_(n);
        if (n > 0 && idx <= last_idx_)
            throw invariant_error("index_compress: r not increasing at n=" + std::to_string(n));
        last_idx_ = idx;
        return a_->at(idx);
    }

private:
    ApproxSeqPtr a_src_;
    std::unique_ptr<SeqCache> a_;
    RateFunction r_;
    std::uint64_t pos_ = 0;
    std::uint64_t last_idx_ = 0;
};

class PairStageEnum final : public EnumStream {
public:
    PairStageEnum(ApproxSeqPtr a, ApproxSeqPtr b,
                  std::function<bool(SeqCache&, SeqCache*, std::uint64_t, std::uint64_t)> cond,
                  std::uint64_t filler)
        : a_src_(std::move(a)),
          b_src_(std::move(b)),
          a_(std::make_unique<SeqCache>(a_src_->clone())),
          b_(b_src_ ? std::make_unique<SeqCache>(b_src_->clone()) : nullptr),
          cond_(std::move(cond)),
          filler_(filler) {}

    EnumStreamPtr clone() const override {
        return std::make_unique<PairStageEnum>(a_src_->clone(),
                                               b_src_ ? b_src_->clone() : nullptr, cond_,
                                               filler_);
    }

protected:
    std::uint64_t do_next() override {
        auto [m, n] = unpair(pos_++);
        if (cond_(*a_, b_.get(), m, n)) return n + 1;
        return filler_ + 1;
    }

private:
    ApproxSeqPtr a_src_;
    ApproxSeqPtr b_src_;
    std::unique_ptr<SeqCache> a_;
    std::unique_ptr<SeqCache> b_;
    std::function<bool(SeqCache&, SeqCache*, std::uint64_t, std::uint64_t)> cond_;
    std::uint64_t filler_;
    std::uint64_t pos_ = 0;
};

class RunningMaxSeq final : public ApproxSeq {
public:
    RunningMaxSeq(SolovayMap f, ApproxSeqPtr b)
        : ApproxSeq(Monotone::nondecreasing), f_(std::move(f)), b_(std::move(b)) {}

    ApproxSeqPtr clone() const override {
        return std::make_unique<RunningMaxSeq>(f_, b_->clone());
    }

protected:
    Dyadic do_next() override {
        Dyadic q = b_->next();
        auto v = f_(q);
        if (!v) throw invariant_error("solovay_transfer: translation undefined at " + q.str());
        if (!max_ || *v > *max_) max_ = *v;
        return *max_;
    }

private:
    SolovayMap f_;
    ApproxSeqPtr b_;
    std::optional<Dyadic> max_;
};

}  // namespace

ApproxSeqPtr transform_1_to_3(ApproxSeqPtr b, RateFunction f) {
    return std::make_unique<Transform13>(std::move(b), std::move(f));
}

ApproxSeqPtr transform_4_to_1(ApproxSeqPtr b, RateFunction f, std::uint64_t plateau_limit) {
    return std::make_unique<Transform41>(std::move(b), std::move(f), plateau_limit);
}

ApproxSeqPtr index_compress(ApproxSeqPtr a, RateFunction r) {
    return std::make_unique<IndexCompress>(std::move(a), std::move(r));
}

RateFunction index_extract(ApproxSeqPtr a, ApproxSeqPtr b, std::uint64_t count,
                           std::uint64_t search_limit) {
    SeqCache ac(std::move(a));
    SeqCache bc(std::move(b));
    std::vector<std::uint64_t> r;
    r.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t m = n == 0 ? 0 : r.back() + 1;
        const Dyadic& target = bc.at(n);
        while (ac.at(m) < target) {
            ++m;
            if (m > search_limit)
                throw horizon_exhausted("index_extract: domination not observed by m=" +
                                        std::to_string(search_limit));
        }
        r.push_back(m);
    }
    return RateFunction::table(std::move(r), Monotone::increasing);
}

EnumStreamPtr coenumerate_misses(ApproxSeqPtr a, std::uint64_t e) {
    auto cond = [](SeqCache& ac, SeqCache*, std::uint64_t m, std::uint64_t n) {
        return ac.at(m) - ac.at(n) >= Dyadic::pow2_neg(n);
    };
    return std::make_unique<PairStageEnum>(std::move(a), nullptr, cond, e);
}

EnumStreamPtr enumerate_witnesses_with_modulus(ApproxSeqPtr a, ApproxSeqPtr b, std::uint64_t d) {
    auto cond = [](SeqCache& ac, SeqCache* bc, std::uint64_t m, std::uint64_t n) {
        return bc->at(m) - ac.at(n) + Dyadic::pow2_neg(m) < Dyadic::pow2_neg(n);
    };
    return std::make_unique<PairStageEnum>(std::move(a), std::move(b), cond, d);
}

ApproxSeqPtr speedup_via_bound(ApproxSeqPtr a, RateFunction r) {
    r.require(Monotone::nondecreasing, "speedup_via_bound");
    // Reuse the compress machinery but allow plateaus in r.
    class Speedup final : public ApproxSeq {
    public:
        Speedup(ApproxSeqPtr a, RateFunction r)
            : ApproxSeq(Monotone::nondecreasing),
              a_src_(std::move(a)),
              a_(std::make_unique<SeqCache>(a_src_->clone())),
              r_(std::move(r)) {}
        ApproxSeqPtr clone() const override {
            return std::make_unique<Speedup>(a_src_->clone(), r_);
        }

    protected:
        Dyadic do_next() override {
            std::uint64_t idx = r_(pos_);
            if (pos_ > 0 && idx < last_idx_)
                throw invariant_error("speedup_via_bound: r decreased at n=" +
                                      std::to_string(pos_));
            ++pos_;
            last_idx_ = idx;
            return a_->at(idx);
        }

    private:
        ApproxSeqPtr a_src_;
        std::unique_ptr<SeqCache> a_;
        RateFunction r_;
        std::uint64_t pos_ = 0;
        std::uint64_t last_idx_ = 0;
    };
    return std::make_unique<Speedup>(std::move(a), std::move(r));
}

std::optional<std::uint64_t> first_modulus_violation(const ApproxSeq& a, const Dyadic& limit,
                                                     std::uint64_t horizon) {
    auto s = a.clone();
    for (std::uint64_t n = 0; n < horizon; ++n) {
        Dyadic v = s->next();
        if (!(limit - v < Dyadic::pow2_neg(n))) return n;
    }
    return std::nullopt;
}

ApproxSeqPtr solovay_transfer(SolovayMap f, ApproxSeqPtr b) {
    return std::make_unique<RunningMaxSeq>(std::move(f), std::move(b));
}

SolovayCheck solovay_check(const SolovayMap& f, std::uint64_t c, const ApproxSeq& b,
                           const Dyadic& alpha, const Dyadic& beta, std::uint64_t horizon) {
    SolovayCheck out;
    auto bs = b.clone();
    auto as = solovay_transfer(f, b.clone());
    for (std::uint64_t n = 0; n < horizon; ++n) {
        Dyadic bv = bs->next();
        Dyadic av = as->next();
        if (beta - bv < Dyadic::pow2_neg(n + c)) {
            out.premise_witnesses.push_back(n);
            if (alpha - av < Dyadic::pow2_neg(n)) out.transferred.push_back(n);
            else out.all_transferred = false;
        }
    }
    return out;
}

std::pair<BitString, BitString> bracket_strings(const Dyadic& a, std::uint64_t n) {
    if (a < Dyadic::zero() || a >= Dyadic::one())
        throw std::domain_error("bracket_strings: value outside [0, 1)");
    BitString u = floor_bits(a, n);
    BitString v = u.all_ones() ? u : u.successor();
    return {u, v};
}

}  // namespace regain
