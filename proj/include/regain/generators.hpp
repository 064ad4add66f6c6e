#pragma once

#include "regain/prefix_machine.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace regain::gen {

/// Seeded instance builders shared by the oracle-comparison command and
/// the acceptance suite. All draws come from a std::mt19937_64 seeded
/// explicitly, so instances are reproducible across platforms.

/// Finite enumeration stream: roughly one code in `gap` stages is nonzero
/// during the active prefix, values < max_value; zeros afterwards.
std::vector<std::uint64_t> finite_stream(std::uint64_t seed, std::uint64_t active_len,
                                         std::uint64_t max_value, std::uint64_t gap = 2);

/// Injective never-zero value sequence: a shuffled block 0..prefix_len-1
/// followed by the ascending tail prefix_len, prefix_len+1, ...
std::vector<std::uint64_t> injective_values(std::uint64_t seed, std::uint64_t prefix_len,
                                            std::uint64_t horizon);

/// (δ,n)-name codes: every positive code appears at most `bound` times,
/// values in [1, max_code], active for active_len stages.
std::vector<std::uint64_t> delta_codes(std::uint64_t seed, std::uint64_t active_len,
                                       std::uint64_t bound, std::uint64_t max_code);

/// Toy prefix-free machine with `entries` programs (>= 3) and total weight
/// at most 15/16. The first two entries are fixed so that the weighted-sum
/// construction always leaves its initial segment.
PrefixMachine toy_machine(std::uint64_t seed, std::size_t entries, std::size_t max_output_len = 6);

}  // namespace regain::gen
