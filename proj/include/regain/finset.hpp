#pragma once

#include "regain/dyadic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace regain {

/// Finite set of naturals, stored as a strictly increasing vector.
class FinSet {
public:
    FinSet() = default;
    /// Accepts any vector; sorts and deduplicates.
    explicit FinSet(std::vector<std::uint64_t> elems);

    static FinSet range(std::uint64_t n);  // {0, ..., n-1}

    bool contains(std::uint64_t x) const;
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    std::uint64_t max() const;  // undefined on empty set (throws)

    const std::vector<std::uint64_t>& elements() const { return elems_; }

    FinSet unite(const FinSet& o) const;
    FinSet intersect(const FinSet& o) const;
    FinSet difference(const FinSet& o) const;
    /// Restriction to {0, ..., n-1}.
    FinSet below(std::uint64_t n) const;
    bool subset_of(const FinSet& o) const;

    /// k-th smallest element (the principal function p_A(k)).
    std::uint64_t principal(std::size_t k) const;

    bool operator==(const FinSet& o) const { return elems_ == o.elems_; }

    /// "{0,2,5}"
    std::string str() const;
    static FinSet parse(const std::string& text);

private:
    std::vector<std::uint64_t> elems_;
};

/// 2^{-A} = sum over a in A of 2^{-(a+1)}.
Dyadic set_to_real(const FinSet& a);

}  // namespace regain
