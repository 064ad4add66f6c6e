#include "regain/prefix_machine.hpp"

#include "regain/errors.hpp"

#include <sstream>

namespace regain {

PrefixMachine::PrefixMachine(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (entries_[i].program == entries_[j].program)
                throw invariant_error("PrefixMachine: duplicate program " +
                                      entries_[i].program.str());
            if (entries_[i].program.is_prefix_of(entries_[j].program) ||
                entries_[j].program.is_prefix_of(entries_[i].program))
                throw invariant_error("PrefixMachine: domain not prefix-free: " +
                                      entries_[i].program.str() + " vs " +
                                      entries_[j].program.str());
        }
        mass_ += Dyadic::pow2_neg(entries_[i].program.length());
        if (entries_[i].output.length() > max_out_len_)
            max_out_len_ = entries_[i].output.length();
    }
    if (!(mass_ < Dyadic::one()))
        throw invariant_error("PrefixMachine: domain weight must be strictly below 1, got " +
                              mass_.str());
}

PrefixMachine PrefixMachine::parse(std::istream& in) {
    std::vector<Entry> entries;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream is(body);
        std::string p, o;
        if (!(is >> p >> o)) throw io_error("PrefixMachine::parse: bad line '" + line + "'");
        entries.push_back(Entry{BitString::parse(p), BitString::parse(o)});
    }
    return PrefixMachine(std::move(entries));
}

std::string PrefixMachine::str() const {
    std::ostringstream os;
    for (const Entry& e : entries_) os << e.program.str() << ' ' << e.output.str() << "\n";
    return os.str();
}

std::optional<std::uint64_t> k_approx(const PrefixMachine& m, const BitString& v,
                                      std::uint64_t t) {
    std::optional<std::uint64_t> best;
    std::size_t scan = std::min<std::size_t>(m.size(), t);
    for (std::size_t s = 0; s < scan; ++s) {
        if (m.output(s) == v) {
            std::uint64_t len = m.program(s).length();
            if (!best || len < *best) best = len;
        }
    }
    return best;
}

PrefixMachine ktrivial_witness_machine(const ApproxSeq& a, const PrefixMachine& base) {
    SeqCache cache(a.clone());
    std::vector<PrefixMachine::Entry> entries;
    for (const auto& e : base.entries()) {
        if (!e.output.all_zeros()) continue;
        std::uint64_t n = e.output.length();
        const Dyadic& an = cache.at(n);
        auto [u, v] = bracket_strings(an, n);
        entries.push_back({e.program.append(false), u});
        entries.push_back({e.program.append(true), v});
    }
    return PrefixMachine(std::move(entries));
}

}  // namespace regain
