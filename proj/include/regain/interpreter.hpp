#pragma once

#include "regain/errors.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace regain {

/// A finite family of step-counted total-or-diverging functions standing
/// in for an enumeration of partial computable functions. Entry e halts on
/// input n within budget t iff t >= steps(n); a converged result never
/// changes as the budget grows.
///
/// One expression per line, line index = e:
///
///     affine A B [delay D]      value A*n + B
///     poly A B C [delay D]      value A*n^2 + B*n + C
///     mod K [delay D]           value n mod K (total, not monotone)
///     diverge                   halts on no input
///     patch <base...> @ n v [n v ...]   base with finitely many overrides
///
/// steps(n) = value(n) + D (default D = 0), so halting budgets track the
/// produced values.
class InterpreterFamily {
public:
    struct Probe {
        bool halted = false;
        std::uint64_t value = 0;
    };

    /// phi_e(n)[t]: value if entry e halts on n within t steps.
    Probe eval_bounded(std::uint64_t e, std::uint64_t n, std::uint64_t t) const;

    /// Unbounded value for total entries; nullopt for diverging ones.
    std::optional<std::uint64_t> eval(std::uint64_t e, std::uint64_t n) const;

    std::size_t size() const { return entries_.size(); }

    bool is_total(std::uint64_t e) const { return entries_[e].kind != Kind::diverge; }
    /// Strictly increasing on [0, hi]?
    bool is_increasing_upto(std::uint64_t e, std::uint64_t hi) const;

    std::string describe(std::uint64_t e) const { return entries_[e].source; }

    static InterpreterFamily parse(std::istream& in);
    static InterpreterFamily parse_lines(const std::vector<std::string>& lines);

private:
    enum class Kind { affine, poly, mod, diverge };
    struct Entry {
        Kind kind = Kind::diverge;
        std::uint64_t a = 0, b = 0, c = 0;
        std::uint64_t delay = 0;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> patches;
        std::string source;
    };

    std::uint64_t value_of(const Entry& en, std::uint64_t n) const;

    std::vector<Entry> entries_;
};

}  // namespace regain
