#include "regain/generators.hpp"

#include <algorithm>

namespace regain::gen {

std::vector<std::uint64_t> finite_stream(std::uint64_t seed, std::uint64_t active_len,
                                         std::uint64_t max_value, std::uint64_t gap) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> value(0, max_value - 1);
    std::uniform_int_distribution<std::uint64_t> hit(0, gap - 1);
    std::vector<std::uint64_t> codes(active_len, 0);
    for (auto& c : codes)
        if (hit(rng) == 0) c = value(rng) + 1;
    return codes;
}

std::vector<std::uint64_t> injective_values(std::uint64_t seed, std::uint64_t prefix_len,
                                            std::uint64_t horizon) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> vals(prefix_len);
    for (std::uint64_t i = 0; i < prefix_len; ++i) vals[i] = i;
    std::shuffle(vals.begin(), vals.end(), rng);
    for (std::uint64_t t = prefix_len; t < horizon; ++t) vals.push_back(t);
    vals.resize(horizon);
    return vals;
}

std::vector<std::uint64_t> delta_codes(std::uint64_t seed, std::uint64_t active_len,
                                       std::uint64_t bound, std::uint64_t max_code) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> code(1, max_code);
    std::uniform_int_distribution<std::uint64_t> hit(0, 2);
    std::vector<std::uint64_t> out(active_len, 0);
    std::vector<std::uint64_t> counts(max_code + 1, 0);
    for (auto& c : out) {
        if (hit(rng) != 0) continue;
        std::uint64_t v = code(rng);
        if (counts[v] >= bound) continue;  // keep the multiplicity bound
        ++counts[v];
        c = v;
    }
    return out;
}

PrefixMachine toy_machine(std::uint64_t seed, std::size_t entries, std::size_t max_output_len) {
    std::mt19937_64 rng(seed);
    std::vector<PrefixMachine::Entry> out;
    // The two fixed entries make short all-ones prefixes compressible, so
    // the initial segment (whose convention prefix is all ones) is always
    // judged simple and the construction moves off it.
    out.push_back({BitString::parse("0"), BitString::parse("1")});
    out.push_back({BitString::parse("10"), BitString::parse("11")});

    // Remaining programs are leaves under "110"; "111...1" stays free, so
    // the total weight is at most 1/2 + 1/4 + 1/8 < 15/16... and with the
    // reserved leaf never used the bound 15/16 holds for any entry count.
    std::vector<BitString> leaves{BitString::parse("110")};
    while (leaves.size() + 2 < entries) {
        // Split the widest leaf into two children.
        std::size_t best = 0;
        for (std::size_t i = 1; i < leaves.size(); ++i)
            if (leaves[i].length() < leaves[best].length()) best = i;
        BitString leaf = leaves[best];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(best));
        leaves.push_back(leaf.append(false));
        leaves.push_back(leaf.append(true));
    }

    std::uniform_int_distribution<std::size_t> out_len(1, max_output_len);
    std::uniform_int_distribution<int> bit(0, 1);
    for (const BitString& prog : leaves) {
        std::vector<bool> bits(out_len(rng));
        for (std::size_t i = 0; i < bits.size(); ++i) {
            // Biased toward strings with a 0 head and 1 tail, the shape
            // the partial sums actually take.
            bits[i] = i == 0 ? bit(rng) == 0 : bit(rng) != 0;
        }
        out.push_back({prog, BitString(std::move(bits))});
    }
    return PrefixMachine(std::move(out));
}

}  // namespace regain::gen
