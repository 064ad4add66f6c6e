#pragma once

#include "regain/errors.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace regain {

enum class Monotone { none, nondecreasing, increasing };

/// Total map N -> N with declared shape flags. The flags are promises
/// made by the constructor; operations that rely on them spot-check the
/// range they actually inspect and throw invariant_error on a lie.
class RateFunction {
public:
    RateFunction(std::function<std::uint64_t(std::uint64_t)> eval, Monotone m, bool unbounded,
                 std::string name = "rate")
        : eval_(std::move(eval)), monotone_(m), unbounded_(unbounded), name_(std::move(name)) {}

    std::uint64_t operator()(std::uint64_t n) const { return eval_(n); }

    Monotone monotone() const { return monotone_; }
    bool unbounded() const { return unbounded_; }
    const std::string& name() const { return name_; }

    /// Verifies the declared monotonicity on [0, hi]; throws on violation.
    void check_monotone_upto(std::uint64_t hi) const {
        if (monotone_ == Monotone::none) return;
        std::uint64_t prev = eval_(0);
        for (std::uint64_t n = 1; n <= hi; ++n) {
            std::uint64_t cur = eval_(n);
            bool ok = monotone_ == Monotone::increasing ? cur > prev : cur >= prev;
            if (!ok)
                throw invariant_error(name_ + ": declared " +
                                      (monotone_ == Monotone::increasing ? "increasing"
                                                                         : "nondecreasing") +
                                      " but violated at n=" + std::to_string(n));
            prev = cur;
        }
    }

    void require(Monotone need, const std::string& who) const {
        bool ok = monotone_ == need ||
                  (need == Monotone::nondecreasing && monotone_ == Monotone::increasing);
        if (!ok) throw invariant_error(who + ": rate function '" + name_ + "' lacks required flag");
    }

    static RateFunction identity() {
        return RateFunction([](std::uint64_t n) { return n; }, Monotone::increasing, true, "id");
    }

    static RateFunction affine(std::uint64_t a, std::uint64_t b) {
        Monotone m = a == 0 ? Monotone::nondecreasing : Monotone::increasing;
        return RateFunction([a, b](std::uint64_t n) { return a * n + b; }, m, a > 0,
                            "affine(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    /// Table-backed with last value repeated past the end (bounded).
    static RateFunction table(std::vector<std::uint64_t> v, Monotone m) {
        return RateFunction(
            [v = std::move(v)](std::uint64_t n) {
                if (v.empty()) return std::uint64_t{0};
                return n < v.size() ? v[n] : v.back();
            },
            m, false, "table");
    }

private:
    std::function<std::uint64_t(std::uint64_t)> eval_;
    Monotone monotone_;
    bool unbounded_;
    std::string name_;
};

}  // namespace regain
