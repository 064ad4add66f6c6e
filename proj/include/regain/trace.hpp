#pragma once

#include "regain/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regain {

enum class TraceFormat { text, binary };

/// Line-oriented record of one construction run: the embedded inputs, one
/// record per active stage, and the final invariant report. Re-running the
/// embedded inputs reproduces the trace byte for byte.
struct Trace {
    std::string construction;
    std::uint64_t seed = 0;
    std::uint64_t horizon = 0;
    std::vector<std::pair<std::string, std::string>> inputs;  // key -> line
    std::vector<std::string> stage_lines;
    std::vector<std::pair<std::string, bool>> report;  // invariant -> pass

    bool all_passed() const {
        for (const auto& [_, ok] : report)
            if (!ok) return false;
        return true;
    }

    std::string text() const;
    static Trace parse_text(std::istream& in);

    std::string binary() const;
    static Trace parse_binary(std::istream& in);

    void write_file(const std::string& path, TraceFormat fmt) const;
    static Trace read_file(const std::string& path);
};

/// A run description the harness knows how to execute.
struct RunConfig {
    std::string construction;  // split-stream | split-ce | split-delta | diag | degree | omega
    std::uint64_t horizon = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> codes;             // split/degree input
    std::optional<std::uint64_t> delta_bound;     // split-delta
    std::vector<std::string> machine_lines;       // omega
    std::vector<std::string> family_lines;        // diag
};

/// Executes the named construction deterministically, runs its invariant
/// scans, and returns the trace. Unknown constructions and malformed
/// inputs throw io_error.
Trace run_experiment(const RunConfig& config);

struct VerifyOutcome {
    bool deterministic = false;  // re-run reproduced the trace byte for byte
    bool invariants = false;     // every report line passed on the re-run
    std::string detail;

    bool ok() const { return deterministic && invariants; }
};

/// Re-runs a trace from its embedded inputs and re-checks everything.
VerifyOutcome verify_trace(const Trace& t);

RunConfig config_from_trace(const Trace& t);

}  // namespace regain
