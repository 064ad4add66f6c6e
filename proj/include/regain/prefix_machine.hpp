#pragma once

#include "regain/approx.hpp"
#include "regain/bitstring.hpp"
#include "regain/dyadic.hpp"

#include <istream>
#include <optional>
#include <vector>

namespace regain {

/// Finite toy prefix-free machine: a table program -> output whose keys
/// form a prefix-free set with total weight strictly below 1, together
/// with the injective domain enumeration h given by entry order.
class PrefixMachine {
public:
    struct Entry {
        BitString program;
        BitString output;
    };

    explicit PrefixMachine(std::vector<Entry> entries);

    std::size_t size() const { return entries_.size(); }
    const BitString& program(std::size_t n) const { return entries_[n].program; }
    const BitString& output(std::size_t n) const { return entries_[n].output; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Sum of 2^{-|program|}; < 1 by the class invariant.
    const Dyadic& mass() const { return mass_; }
    std::uint64_t max_output_length() const { return max_out_len_; }

    /// Lines "<program-bits> <output-bits>"; "-" denotes the empty string.
    static PrefixMachine parse(std::istream& in);
    std::string str() const;

private:
    std::vector<Entry> entries_;
    Dyadic mass_;
    std::uint64_t max_out_len_ = 0;
};

/// K(v)[t]: the least program length producing v among the first t domain
/// entries; nullopt encodes infinity.
std::optional<std::uint64_t> k_approx(const PrefixMachine& m, const BitString& v, std::uint64_t t);

/// Doubles every zero-output program of the base machine into two programs
/// w0 -> u_n and w1 -> v_n, where (u_n, v_n) bracket a_n at width
/// n = |output|. Programs of the base with other outputs are dropped.
PrefixMachine ktrivial_witness_machine(const ApproxSeq& a, const PrefixMachine& base);

}  // namespace regain
