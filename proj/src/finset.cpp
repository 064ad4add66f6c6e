#include "regain/finset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regain {

FinSet::FinSet(std::vector<std::uint64_t> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FinSet FinSet::range(std::uint64_t n) {
    FinSet s;
    s.elems_.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) s.elems_.push_back(i);
    return s;
}

bool FinSet::contains(std::uint64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::uint64_t FinSet::max() const {
    if (elems_.empty()) throw std::logic_error("FinSet::max on empty set");
    return elems_.back();
}

FinSet FinSet::unite(const FinSet& o) const {
    FinSet r;
    std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                   std::back_inserter(r.elems_));
    return r;
}

FinSet FinSet::intersect(const FinSet& o) const {
    FinSet r;
    std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                          std::back_inserter(r.elems_));
    return r;
}

FinSet FinSet::difference(const FinSet& o) const {
    FinSet r;
    std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(),
                        std::back_inserter(r.elems_));
    return r;
}

FinSet FinSet::below(std::uint64_t n) const {
    FinSet r;
    for (std::uint64_t x : elems_) {
        if (x >= n) break;
        r.elems_.push_back(x);
    }
    return r;
}

bool FinSet::subset_of(const FinSet& o) const {
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

std::uint64_t FinSet::principal(std::size_t k) const {
    if (k >= elems_.size()) throw std::out_of_range("FinSet::principal: index past set size");
    return elems_[k];
}

std::string FinSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

FinSet FinSet::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("FinSet::parse: expected '{...}', got '" + text + "'");
    std::vector<std::uint64_t> v;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("FinSet::parse: empty element");
        v.push_back(std::stoull(tok));
    }
    FinSet s(std::move(v));
    return s;
}

Dyadic set_to_real(const FinSet& a) {
    if (a.empty()) return Dyadic::zero();
    std::uint64_t e = a.max() + 1;
    BigInt m = 0;
    for (std::uint64_t x : a.elements()) {
        m += BigInt(1) << static_cast<unsigned>(e - (x + 1));
    }
    return Dyadic::scaled(std::move(m), e);
}

}  // namespace regain
