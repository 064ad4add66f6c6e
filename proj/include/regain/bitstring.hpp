#pragma once

#include "regain/dyadic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace regain {

/// Finite binary string. Kept separate from std::string so lengths,
/// prefixes and the numeric value 0.bits stay explicit.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}
    /// From "0"/"1" characters; "-" or "" denotes the empty string.
    static BitString parse(const std::string& text);

    std::size_t length() const { return bits_.size(); }
    bool bit(std::size_t i) const { return bits_[i]; }
    bool empty() const { return bits_.empty(); }

    bool is_prefix_of(const BitString& o) const;
    BitString prefix(std::size_t n) const;
    BitString append(bool b) const;

    /// Value of 0.bits as an exact dyadic in [0, 1).
    Dyadic fraction_value() const;
    /// Lexicographic successor of the same length; length-n all-ones has none.
    BitString successor() const;
    bool all_ones() const;
    bool all_zeros() const;

    bool operator==(const BitString& o) const { return bits_ == o.bits_; }
    bool operator<(const BitString& o) const { return bits_ < o.bits_; }

    std::string str() const;  // "-" for the empty string

private:
    std::vector<bool> bits_;
};

/// First n bits of the binary representation of x in (0, 1] that ends in
/// infinitely many ones (for dyadic x, the non-terminating representation;
/// real_prefix(1, n) is all ones).
BitString real_prefix(const Dyadic& x, std::uint64_t n);

/// The n-bit string of length n below x: 0.u <= x < 0.u + 2^{-n}, for
/// x in [0, 1).
BitString floor_bits(const Dyadic& x, std::uint64_t n);

}  // namespace regain
