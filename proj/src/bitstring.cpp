#include "regain/bitstring.hpp"

#include <stdexcept>

namespace regain {

BitString BitString::parse(const std::string& text) {
    if (text == "-" || text.empty()) return BitString();
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0') bits.push_back(false);
        else if (c == '1') bits.push_back(true);
        else throw std::invalid_argument("BitString::parse: bad character in '" + text + "'");
    }
    return BitString(std::move(bits));
}

bool BitString::is_prefix_of(const BitString& o) const {
    if (bits_.size() > o.bits_.size()) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] != o.bits_[i]) return false;
    return true;
}

BitString BitString::prefix(std::size_t n) const {
    if (n > bits_.size()) throw std::out_of_range("BitString::prefix past length");
    return BitString(std::vector<bool>(bits_.begin(), bits_.begin() + n));
}

BitString BitString::append(bool b) const {
    std::vector<bool> v = bits_;
    v.push_back(b);
    return BitString(std::move(v));
}

Dyadic BitString::fraction_value() const {
    BigInt m = 0;
    for (bool b : bits_) {
        m <<= 1;
        if (b) m += 1;
    }
    return Dyadic::scaled(std::move(m), bits_.size());
}

BitString BitString::successor() const {
    if (all_ones()) throw std::logic_error("BitString::successor of all-ones string");
    std::vector<bool> v = bits_;
    for (std::size_t i = v.size(); i-- > 0;) {
        if (!v[i]) {
            v[i] = true;
            break;
        }
        v[i] = false;
    }
    return BitString(std::move(v));
}

bool BitString::all_ones() const {
    for (bool b : bits_)
        if (!b) return false;
    return true;
}

bool BitString::all_zeros() const {
    for (bool b : bits_)
        if (b) return false;
    return true;
}

std::string BitString::str() const {
    if (bits_.empty()) return "-";
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

static BitString bits_of(BigInt value, std::uint64_t n) {
    std::vector<bool> bits(n, false);
    for (std::uint64_t i = n; i-- > 0;) {
        bits[i] = boost::multiprecision::bit_test(value, 0);
        value >>= 1;
    }
    return BitString(std::move(bits));
}

BitString real_prefix(const Dyadic& x, std::uint64_t n) {
    if (x <= Dyadic::zero() || x > Dyadic::one())
        throw std::domain_error("real_prefix: argument outside (0, 1]");
    // With an all-ones tail the first n bits u are determined by
    // 0.u < x <= 0.u + 2^{-n}, i.e. u = ceil(x * 2^n) - 1.
    BigInt u = x.mul_pow2(static_cast<std::int64_t>(n)).ceil() - 1;
    return bits_of(std::move(u), n);
}

BitString floor_bits(const Dyadic& x, std::uint64_t n) {
    if (x < Dyadic::zero() || x >= Dyadic::one())
        throw std::domain_error("floor_bits: argument outside [0, 1)");
    BigInt u = x.mul_pow2(static_cast<std::int64_t>(n)).floor();
    return bits_of(std::move(u), n);
}

}  // namespace regain
