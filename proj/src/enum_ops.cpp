#include "regain/enum_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace regain {

namespace {

class WithoutRepetitions final : public EnumStream {
public:
    explicit WithoutRepetitions(EnumStreamPtr f) : f_(std::move(f)) {}

    EnumStreamPtr clone() const override {
        return std::make_unique<WithoutRepetitions>(f_->clone());
    }

protected:
    std::uint64_t do_next() override {
        std::uint64_t code = f_->next();
        if (code == 0) return 0;
        // seen_ is Enum(f) strictly before this stage; first occurrences pass.
        if (!seen_.insert(code - 1).second) return 0;
        return code;
    }

private:
    EnumStreamPtr f_;
    std::unordered_set<std::uint64_t> seen_;
};

class GoodUpgrade final : public EnumStream {
public:
    GoodUpgrade(EnumStreamPtr f, RateFunction r, std::uint64_t empty_block_limit)
        : source_(std::move(f)),
          cursor_(source_->clone()),
          r_(std::move(r)),
          empty_block_limit_(empty_block_limit) {
        r_.require(Monotone::nondecreasing, "good_upgrade");
    }

    EnumStreamPtr clone() const override {
        return std::make_unique<GoodUpgrade>(source_->clone(), r_, empty_block_limit_);
    }

protected:
    std::uint64_t do_next() override {
        std::uint64_t empty_blocks = 0;
        while (queue_.empty()) {
            if (++empty_blocks > empty_block_limit_)
                throw horizon_exhausted(
                    "good_upgrade: no further elements within the block scan limit "
                    "(finite-support input needs passthrough mode)");
            advance_block();
        }
        std::uint64_t code = queue_.front();
        queue_.pop_front();
        return code;
    }

private:
    void advance_block() {
        ++block_;
        std::uint64_t rn = r_(block_);
        if (rn < last_rate_)
            throw invariant_error("good_upgrade: rate function decreased at n=" +
                                  std::to_string(block_));
        last_rate_ = rn;
        while (pulled_ < rn) {
            std::uint64_t code = cursor_->next();
            ++pulled_;
            if (code > 0) seen_.insert(code - 1);
        }
        // L_n = {0..n-1} ∩ Enum(f)[r(n)]; M_n = L_n \ L_{n-1}, ascending.
        std::vector<std::uint64_t> l_n;
        for (auto it = seen_.begin(); it != seen_.end() && *it < block_; ++it)
            l_n.push_back(*it);
        std::vector<std::uint64_t> m_n;
        std::set_difference(l_n.begin(), l_n.end(), l_prev_.begin(), l_prev_.end(),
                            std::back_inserter(m_n));
        for (std::uint64_t k : m_n) queue_.push_back(k + 1);
        l_prev_ = std::move(l_n);
    }

    EnumStreamPtr source_;
    EnumStreamPtr cursor_;
    RateFunction r_;
    std::uint64_t empty_block_limit_;
    std::uint64_t block_ = 0;
    std::uint64_t pulled_ = 0;
    std::uint64_t last_rate_ = 0;
    std::set<std::uint64_t> seen_;
    std::vector<std::uint64_t> l_prev_;
    std::deque<std::uint64_t> queue_;
};

class UnionWithDecidable final : public EnumStream {
public:
    UnionWithDecidable(EnumStreamPtr g, Decidable chi) : g_(std::move(g)), chi_(std::move(chi)) {}

    EnumStreamPtr clone() const override {
        return std::make_unique<UnionWithDecidable>(g_->clone(), chi_);
    }

protected:
    std::uint64_t do_next() override {
        std::uint64_t k = pos_++;
        if (k % 2 == 0) return g_->next();
        std::uint64_t n = k / 2;
        return chi_.chi(n) ? n + 1 : 0;
    }

private:
    EnumStreamPtr g_;
    Decidable chi_;
    std::uint64_t pos_ = 0;
};

class ImageMonotone final : public EnumStream {
public:
    ImageMonotone(EnumStreamPtr g, RateFunction f) : g_(std::move(g)), f_(std::move(f)) {
        f_.require(Monotone::nondecreasing, "image_monotone");
    }

    EnumStreamPtr clone() const override {
        return std::make_unique<ImageMonotone>(g_->clone(), f_);
    }

protected:
    std::uint64_t do_next() override {
        std::uint64_t code = g_->next();
        if (code == 0) return 0;
        return eval_checked(code - 1) + 1;
    }

private:
    // Evaluations are cached and cross-checked against neighbours so a
    // non-monotone f is caught on exactly the range we inspected.
    std::uint64_t eval_checked(std::uint64_t x) {
        auto it = evals_.find(x);
        if (it != evals_.end()) return it->second;
        std::uint64_t v = f_(x);
        auto [ins, _] = evals_.emplace(x, v);
        if (ins != evals_.begin()) {
            auto prev = std::prev(ins);
            if (prev->second > v)
                throw invariant_error("image_monotone: f not nondecreasing near x=" +
                                      std::to_string(x));
        }
        if (auto nxt = std::next(ins); nxt != evals_.end()) {
            if (v > nxt->second)
                throw invariant_error("image_monotone: f not nondecreasing near x=" +
                                      std::to_string(x));
        }
        return v;
    }

    EnumStreamPtr g_;
    RateFunction f_;
    std::map<std::uint64_t, std::uint64_t> evals_;
};

class Interleave final : public EnumStream {
public:
    Interleave(EnumStreamPtr fx, EnumStreamPtr fy) : fx_(std::move(fx)), fy_(std::move(fy)) {}

    EnumStreamPtr clone() const override {
        return std::make_unique<Interleave>(fx_->clone(), fy_->clone());
    }

protected:
    std::uint64_t do_next() override {
        std::uint64_t k = pos_++;
        return k % 2 == 0 ? fx_->next() : fy_->next();
    }

private:
    EnumStreamPtr fx_;
    EnumStreamPtr fy_;
    std::uint64_t pos_ = 0;
};

}  // namespace

EnumStreamPtr without_repetitions(EnumStreamPtr f) {
    return std::make_unique<WithoutRepetitions>(std::move(f));
}

EnumStreamPtr decidable_to_idgood(Decidable chi) {
    auto fn = [chi = std::move(chi)](std::uint64_t n) -> std::uint64_t {
        return chi.chi(n) ? n + 1 : 0;
    };
    return generator_enum(std::move(fn));
}

bool is_r_good_at(const EnumStream& f, const RateFunction& r, std::uint64_t n,
                  const FinSet& a_ref) {
    if (n == 0) return true;
    return a_ref.below(n).subset_of(enum_prefix(f, r(n)));
}

EnumStreamPtr good_upgrade(EnumStreamPtr f, RateFunction r, UpgradeMode mode,
                           std::uint64_t empty_block_limit) {
    if (mode == UpgradeMode::passthrough) return f;
    return std::make_unique<GoodUpgrade>(std::move(f), std::move(r), empty_block_limit);
}

EnumStreamPtr union_with_decidable(EnumStreamPtr g, Decidable chi) {
    return std::make_unique<UnionWithDecidable>(std::move(g), std::move(chi));
}

ImageMonotoneResult image_monotone(EnumStreamPtr g, RateFunction f, std::uint64_t search_limit) {
    ImageMonotoneResult res;
    if (f.unbounded()) {
        res.companion_rate = RateFunction(
            [f_copy = f, search_limit](std::uint64_t n) -> std::uint64_t {
                // max{m : f(m) <= n}; nondecreasing f means the first m with
                // f(m) > n ends the scan.
                if (f_copy(0) > n)
                    throw invariant_error("image_monotone companion rate: f(0) > n, max empty");
                for (std::uint64_t m = 1; m <= search_limit; ++m)
                    if (f_copy(m) > n) return m - 1;
                throw horizon_exhausted("image_monotone companion rate: search limit hit");
            },
            Monotone::nondecreasing, true, "rate-of(" + f.name() + ")");
    }
    res.stream = std::make_unique<ImageMonotone>(std::move(g), std::move(f));
    return res;
}

EnumStreamPtr affine_embed(EnumStreamPtr g, std::uint64_t a, std::uint64_t b) {
    if (a == 0) throw invariant_error("affine_embed: a must be >= 1");
    RateFunction f = RateFunction::affine(a, b);
    return image_monotone(std::move(g), std::move(f)).stream;
}

EnumStreamPtr interleave(EnumStreamPtr fx, EnumStreamPtr fy) {
    return std::make_unique<Interleave>(std::move(fx), std::move(fy));
}

IntersectionGadget intersection_gadget(EnumStreamPtr ga, EnumStreamPtr gb) {
    IntersectionGadget out;
    out.a_stream = union_with_decidable(affine_embed(ga->clone(), 2, 0), Decidable::odd());
    out.b_stream = union_with_decidable(affine_embed(gb->clone(), 2, 1), Decidable::even());
    // A∩B = (2·A~) ∪ (2·B~+1); halving recovers A~ ∪ B~.
    auto inter = interleave(affine_embed(std::move(ga), 2, 0), affine_embed(std::move(gb), 2, 1));
    RateFunction half([](std::uint64_t n) { return n / 2; }, Monotone::nondecreasing, true,
                      "halve");
    out.recovered = image_monotone(std::move(inter), std::move(half)).stream;
    return out;
}

}  // namespace regain
