#pragma once

#include "regain/rate.hpp"
#include "regain/stream.hpp"

#include <functional>
#include <optional>
#include <string>

namespace regain {

/// Total predicate on naturals, used where a decidable set is supplied.
struct Decidable {
    std::function<bool(std::uint64_t)> chi;
    std::string name;

    static Decidable all() { return {[](std::uint64_t) { return true; }, "all"}; }
    static Decidable none() { return {[](std::uint64_t) { return false; }, "none"}; }
    static Decidable even() { return {[](std::uint64_t n) { return n % 2 == 0; }, "even"}; }
    static Decidable odd() { return {[](std::uint64_t n) { return n % 2 == 1; }, "odd"}; }
    static Decidable mod(std::uint64_t k, std::uint64_t r) {
        return {[k, r](std::uint64_t n) { return n % k == r; },
                "mod " + std::to_string(k) + " " + std::to_string(r)};
    }
};

/// Suppresses every repeated enumeration: output agrees with the input on
/// first occurrences and is 0 elsewhere. Enum is preserved at every stage.
EnumStreamPtr without_repetitions(EnumStreamPtr f);

/// The id-good enumeration of a decidable set: stage n emits n+1 or 0.
EnumStreamPtr decidable_to_idgood(Decidable chi);

/// {0,...,n-1} ∩ A_ref ⊆ Enum(f)[r(n)].
bool is_r_good_at(const EnumStream& f, const RateFunction& r, std::uint64_t n,
                  const FinSet& a_ref);

enum class UpgradeMode {
    infinite_support,  // block construction; never emits 0
    passthrough        // finite-support case: the input is returned as is
};

/// Upgrades an r-good enumeration to an id-good one by emitting the blocks
/// M_n = L_n \ L_{n-1}, L_n = {0,...,n-1} ∩ Enum(f)[r(n)], in increasing
/// order. In infinite_support mode the pull blocks until the next element
/// exists; after empty_block_limit consecutive empty blocks it throws
/// horizon_exhausted instead of spinning forever.
EnumStreamPtr good_upgrade(EnumStreamPtr f, RateFunction r,
                           UpgradeMode mode = UpgradeMode::infinite_support,
                           std::uint64_t empty_block_limit = 1u << 20);

/// h(2n) = g(n); h(2n+1) enumerates n iff chi(n). If g is id-good for its
/// set, h is 2n-good for the union.
EnumStreamPtr union_with_decidable(EnumStreamPtr g, Decidable chi);

struct ImageMonotoneResult {
    EnumStreamPtr stream;
    /// max{m : f(m) <= n}, present iff f is unbounded. Evaluating it scans
    /// f upward and throws horizon_exhausted past search_limit.
    std::optional<RateFunction> companion_rate;
};

/// Pushes an enumeration through a nondecreasing f: codes c>0 become
/// f(c-1)+1, so the limit set is the f-image.
ImageMonotoneResult image_monotone(EnumStreamPtr g, RateFunction f,
                                   std::uint64_t search_limit = 1u << 24);

/// Enumerates a·D + b for the input's limit set D (a >= 1).
EnumStreamPtr affine_embed(EnumStreamPtr g, std::uint64_t a, std::uint64_t b);

/// f_Z(2m) = fX(m), f_Z(2m+1) = fY(m).
EnumStreamPtr interleave(EnumStreamPtr fx, EnumStreamPtr fy);

struct IntersectionGadget {
    EnumStreamPtr a_stream;   // enumerates (2·A~) ∪ (2N+1)
    EnumStreamPtr b_stream;   // enumerates (2·B~+1) ∪ (2N)
    EnumStreamPtr recovered;  // enumeration of A∩B pushed through n/2
};

/// The union/intersection gadget: from disjoint A~, B~ builds the two
/// padded sets and recovers A~ ∪ B~ from their intersection.
IntersectionGadget intersection_gadget(EnumStreamPtr ga, EnumStreamPtr gb);

}  // namespace regain
