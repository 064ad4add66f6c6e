#include "regain/stream.hpp"

namespace regain {

std::vector<std::uint64_t> collect(const EnumStream& f, std::uint64_t t) {
    auto c = f.clone();
    std::vector<std::uint64_t> out;
    out.reserve(t);
    for (std::uint64_t k = 0; k < t; ++k) out.push_back(c->next());
    return out;
}

FinSet enum_prefix(const EnumStream& f, std::uint64_t t) {
    auto c = f.clone();
    std::vector<std::uint64_t> elems;
    for (std::uint64_t k = 0; k < t; ++k) {
        std::uint64_t code = c->next();
        if (code > 0) elems.push_back(code - 1);
    }
    return FinSet(std::move(elems));
}

}  // namespace regain
