// Command-line front end: every construction and combinator behind one
// binary. Exit codes: 0 all checks pass, 2 invariant violation, 1 usage
// or IO error.

#include "regain/degree.hpp"
#include "regain/diagonal.hpp"
#include "regain/enum_ops.hpp"
#include "regain/generators.hpp"
#include "regain/io.hpp"
#include "regain/omega.hpp"
#include "regain/oracles.hpp"
#include "regain/splitting.hpp"
#include "regain/strong_array.hpp"
#include "regain/trace.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace regain;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

std::uint64_t default_horizon() {
    // Only the default horizon may come from the environment.
    if (const char* env = std::getenv("REGAIN_HORIZON")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw io_error("REGAIN_HORIZON is not a number");
        }
    }
    return 1u << 10;
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

void emit_trace(const Trace& t, const std::string& path, const std::string& format) {
    if (path.empty()) return;
    t.write_file(path, format == "binary" ? TraceFormat::binary : TraceFormat::text);
}

struct CommonOpts {
    std::uint64_t horizon = 0;
    std::uint64_t seed = 0;
    std::string trace_out;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--horizon", c.horizon, "stage horizon");
    cmd->add_option("--seed", c.seed, "seed for generated inputs");
    cmd->add_option("--trace-out", c.trace_out, "write the run trace to this path");
    cmd->add_option("--format", c.format, "trace format: text or binary")
        ->check(CLI::IsMember({"text", "binary"}));
}

int cmd_enum(const std::string& op, const std::string& input, const std::string& input2,
             const std::string& output, const std::string& rate_spec,
             const std::string& chi_spec, std::uint64_t a, std::uint64_t b, std::uint64_t n_at,
             const std::string& ref, const CommonOpts& c) {
    EnumStreamPtr f = input.empty() ? generator_enum([](std::uint64_t) { return 0ull; })
                                    : io::read_enum_file(input);
    std::uint64_t horizon = c.horizon ? c.horizon : default_horizon();
    EnumStreamPtr result;

    if (op == "prefix") {
        std::cout << enum_prefix(*f, horizon).str() << "\n";
        return kExitOk;
    } else if (op == "strip") {
        result = without_repetitions(std::move(f));
    } else if (op == "upgrade") {
        result = good_upgrade(std::move(f), io::parse_rate(split_tokens(rate_spec)));
    } else if (op == "union") {
        result = union_with_decidable(std::move(f), io::parse_decidable(split_tokens(chi_spec)));
    } else if (op == "image") {
        result = image_monotone(std::move(f), io::parse_rate(split_tokens(rate_spec))).stream;
    } else if (op == "affine") {
        result = affine_embed(std::move(f), a, b);
    } else if (op == "interleave") {
        result = interleave(std::move(f), io::read_enum_file(input2));
    } else if (op == "gadget") {
        auto gadget = intersection_gadget(std::move(f), io::read_enum_file(input2));
        result = std::move(gadget.recovered);
    } else if (op == "good-at") {
        bool ok = is_r_good_at(*f, io::parse_rate(split_tokens(rate_spec)), n_at,
                               FinSet::parse(ref));
        std::cout << (ok ? "true" : "false") << "\n";
        return kExitOk;
    } else if (op == "decidable") {
        result = decidable_to_idgood(io::parse_decidable(split_tokens(chi_spec)));
    } else {
        throw io_error("unknown enum op '" + op + "'");
    }

    std::vector<std::uint64_t> codes = collect(*result, horizon);
    if (output.empty()) {
        io::write_enum(std::cout, codes);
    } else {
        std::ostringstream os;
        io::write_enum(os, codes);
        io::write_text_file(output, os.str());
    }
    return kExitOk;
}

int cmd_approx(const std::string& op, const std::string& input, const std::string& input2,
               const std::string& output, const std::string& rate_spec,
               const std::string& limit_str, const std::string& value_str, std::uint64_t n_arg,
               const CommonOpts& c) {
    std::uint64_t horizon = c.horizon ? c.horizon : default_horizon();

    if (op == "bracket") {
        auto [u, v] = bracket_strings(Dyadic::parse(value_str), n_arg);
        std::cout << u.str() << ' ' << v.str() << "\n";
        return kExitOk;
    }

    ApproxSeqPtr x = io::read_approx_file(input);
    ApproxSeqPtr result;
    if (op == "witnesses") {
        std::optional<Dyadic> limit;
        if (!limit_str.empty()) limit = Dyadic::parse(limit_str);
        std::cout << witnesses(*x, limit, horizon).str();
        return kExitOk;
    } else if (op == "t13") {
        result = transform_1_to_3(std::move(x), io::parse_rate(split_tokens(rate_spec)));
    } else if (op == "t41") {
        result = transform_4_to_1(std::move(x), io::parse_rate(split_tokens(rate_spec)));
    } else if (op == "compress") {
        result = index_compress(std::move(x), io::parse_rate(split_tokens(rate_spec)));
    } else if (op == "extract") {
        RateFunction r = index_extract(std::move(x), io::read_approx_file(input2), horizon);
        for (std::uint64_t i = 0; i < horizon; ++i) std::cout << r(i) << "\n";
        return kExitOk;
    } else {
        throw io_error("unknown approx op '" + op + "'");
    }

    auto s = result->clone();
    std::vector<Dyadic> vals;
    for (std::uint64_t i = 0; i < horizon; ++i) vals.push_back(s->next());
    if (output.empty()) {
        io::write_approx(std::cout, vals, result->declared());
    } else {
        std::ostringstream os;
        io::write_approx(os, vals, result->declared());
        io::write_text_file(output, os.str());
    }
    return kExitOk;
}

int finish_run(const Trace& t, const CommonOpts& c, bool check) {
    emit_trace(t, c.trace_out, c.format);
    for (const auto& [name, ok] : t.report)
        std::cout << (ok ? "pass " : "FAIL ") << name << "\n";
    if (check && !t.all_passed()) return kExitInvariant;
    return kExitOk;
}

int cmd_split(const std::string& kind, const std::string& input, bool emit_table, bool check,
              const std::string& out_g, const std::string& out_h, const CommonOpts& c) {
    std::uint64_t horizon = c.horizon ? c.horizon : default_horizon();
    RunConfig cfg;
    cfg.horizon = horizon;
    cfg.seed = c.seed;
    if (kind == "delta") {
        DeltaName d = io::read_delta_file(input);
        cfg.construction = "split-delta";
        cfg.codes = collect(*d.stream, horizon);
        cfg.delta_bound = d.multiplicity_bound;
    } else {
        cfg.construction = kind == "ce" ? "split-ce" : "split-stream";
        cfg.codes = collect(*io::read_enum_file(input), horizon);
    }
    Trace t = run_experiment(cfg);

    if (!out_g.empty() || !out_h.empty()) {
        auto src = table_enum(cfg.codes);
        SplitResult sr = cfg.construction == "split-ce" ? split_ce_set(*src, horizon)
                                                        : split_stream(*src, horizon);
        std::ostringstream og, oh;
        if (cfg.construction == "split-delta") {
            io::write_delta(og, sr.g, cfg.delta_bound);
            io::write_delta(oh, sr.h, cfg.delta_bound);
        } else {
            io::write_enum(og, sr.g);
            io::write_enum(oh, sr.h);
        }
        if (!out_g.empty()) io::write_text_file(out_g, og.str());
        if (!out_h.empty()) io::write_text_file(out_h, oh.str());
    }
    if (emit_table) {
        auto src = table_enum(cfg.codes);
        SplitResult sr = cfg.construction == "split-ce" ? split_ce_set(*src, horizon)
                                                        : split_stream(*src, horizon);
        for (const auto& e : sr.table.events())
            std::cout << "event t=" << e.stage << " k=" << e.threshold << " jump=" << e.jump
                      << "\n";
    }
    return finish_run(t, c, check);
}

int cmd_diag(const std::string& family, bool check, std::uint64_t n_max, const CommonOpts& c) {
    RunConfig cfg;
    cfg.construction = "diag";
    cfg.horizon = c.horizon ? c.horizon : default_horizon();
    cfg.seed = c.seed;
    std::istringstream fs(io::read_text_file(family));
    std::string line;
    while (std::getline(fs, line)) cfg.family_lines.push_back(line);
    (void)n_max;
    Trace t = run_experiment(cfg);
    return finish_run(t, c, check);
}

int cmd_degree(const std::string& input, bool check, std::int64_t decode_a, std::int64_t decode_b,
               std::int64_t recover_a, std::int64_t recover_b, const CommonOpts& c) {
    RunConfig cfg;
    cfg.construction = "degree";
    cfg.horizon = c.horizon ? c.horizon : default_horizon();
    cfg.seed = c.seed;
    cfg.codes = collect(*io::read_enum_file(input), cfg.horizon);
    Trace t = run_experiment(cfg);

    if (decode_a >= 0 || decode_b >= 0 || recover_a >= 0 || recover_b >= 0) {
        DegreeRun run = degree_preserving_build(*table_enum(cfg.codes), cfg.horizon);
        std::uint64_t max_i = 0;
        for (auto q : {decode_a, decode_b, recover_a, recover_b})
            if (q >= 0) max_i = std::max<std::uint64_t>(max_i, static_cast<std::uint64_t>(q));
        std::vector<BigInt> s_limits;
        for (std::uint64_t i = 0; i <= max_i + 2; ++i)
            s_limits.push_back(run.table.final_value(i));
        if (decode_a >= 0)
            std::cout << "A(" << decode_a << ") = "
                      << (decode_A_from_stage_limits(run, s_limits,
                                                     static_cast<std::uint64_t>(decode_a))
                              ? "yes"
                              : "no")
                      << "\n";
        if (decode_b >= 0)
            std::cout << "B(" << decode_b << ") = "
                      << (decode_B_from_stage_limits(run, s_limits,
                                                     static_cast<std::uint64_t>(decode_b))
                              ? "yes"
                              : "no")
                      << "\n";
        if (recover_a >= 0)
            std::cout << "S_" << recover_a << " = "
                      << recover_S_from_A(run, static_cast<std::uint64_t>(recover_a)).str()
                      << "\n";
        if (recover_b >= 0) {
            std::vector<BigInt> prefix(s_limits.begin(),
                                       s_limits.begin() + recover_b + 1);
            std::cout << "S_" << recover_b + 1 << " = "
                      << recover_S_from_B(run, prefix, static_cast<std::uint64_t>(recover_b))
                             .str()
                      << "\n";
        }
    }
    return finish_run(t, c, check);
}

int cmd_omega(const std::string& machine, bool check, const CommonOpts& c) {
    RunConfig cfg;
    cfg.construction = "omega";
    cfg.horizon = c.horizon ? c.horizon : default_horizon();
    cfg.seed = c.seed;
    std::istringstream ms(io::read_text_file(machine));
    std::string line;
    while (std::getline(ms, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) cfg.machine_lines.push_back(line);
    Trace t = run_experiment(cfg);
    return finish_run(t, c, check);
}

int cmd_verify(const std::string& path) {
    Trace t = Trace::read_file(path);
    VerifyOutcome v = verify_trace(t);
    std::cout << (v.deterministic ? "pass" : "FAIL") << " determinism\n";
    std::cout << (v.invariants ? "pass" : "FAIL") << " invariants\n";
    if (!v.detail.empty()) std::cout << v.detail << "\n";
    return v.ok() ? kExitOk : kExitInvariant;
}

int cmd_oracle(const std::string& construction, std::uint64_t count, const CommonOpts& c) {
    std::uint64_t horizon = c.horizon ? c.horizon : default_horizon();
    std::uint64_t failures = 0;

    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t seed = c.seed + i;
        if (construction == "split") {
            auto codes = gen::finite_stream(seed, std::min<std::uint64_t>(horizon, 200), 64);
            SplitResult fast = split_stream(*table_enum(codes), horizon);
            auto slow = oracle::split_stream(codes, horizon, 66);
            bool ok = fast.g == slow.g && fast.h == slow.h;
            for (std::uint64_t row = 0; row < 66 && ok; ++row)
                if (fast.table.final_value(row) != BigInt(slow.final_column[row])) ok = false;
            if (!ok) ++failures;
        } else if (construction == "degree") {
            auto values = gen::injective_values(seed, std::min<std::uint64_t>(horizon, 250),
                                                horizon);
            std::vector<std::uint64_t> codes;
            for (auto v : values) codes.push_back(v + 1);
            DegreeRun fast = degree_preserving_build(*table_enum(codes), horizon);
            auto slow = oracle::degree_build(values, horizon, horizon + 1);
            bool ok = fast.g_values == slow.g;
            for (std::uint64_t row = 0; row < std::min<std::uint64_t>(horizon, 300) && ok; ++row)
                if (fast.table.final_value(row) != slow.final_column[row]) ok = false;
            if (!ok) ++failures;
        } else if (construction == "omega") {
            PrefixMachine m = gen::toy_machine(seed, 4 + seed % 13);
            OmegaRun fast = omega_weighting(m, horizon);
            OmegaRun slow = oracle::omega_weighting(m, horizon);
            bool ok = fast.ell == slow.ell && fast.r == slow.r && fast.w == slow.w &&
                      fast.a == slow.a && fast.i_t == slow.i_t;
            if (!ok) ++failures;
        } else if (construction == "enum-prefix") {
            auto codes = gen::finite_stream(seed, horizon, 64);
            bool ok = enum_prefix(*table_enum(codes), horizon) ==
                      oracle::enum_prefix(codes, horizon);
            if (!ok) ++failures;
        } else {
            throw io_error("unknown oracle construction '" + construction + "'");
        }
    }
    std::cout << (failures == 0 ? "pass " : "FAIL ") << construction << ": " << count - failures
              << "/" << count << " instances agree\n";
    return failures == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regainingly approximable numbers and sets: exact-arithmetic laboratory"};
    app.require_subcommand(1);

    CommonOpts copts;

    // enum
    auto* enum_cmd = app.add_subcommand("enum", "enumeration combinators");
    std::string e_op, e_in, e_in2, e_out, e_rate = "id", e_chi = "all", e_ref = "{}";
    std::uint64_t e_a = 1, e_b = 0, e_n = 0;
    enum_cmd->add_option("--op", e_op, "prefix|strip|upgrade|union|image|affine|interleave|gadget|good-at|decidable")
        ->required();
    enum_cmd->add_option("--input", e_in, "ENUM v1 file");
    enum_cmd->add_option("--input2", e_in2, "second ENUM v1 file");
    enum_cmd->add_option("--output", e_out, "output path (stdout when absent)");
    enum_cmd->add_option("--rate", e_rate, "rate spec: id | double | affine a b");
    enum_cmd->add_option("--chi", e_chi, "predicate: all|none|even|odd|mod k r");
    enum_cmd->add_option("--a", e_a, "affine factor");
    enum_cmd->add_option("--b", e_b, "affine offset");
    enum_cmd->add_option("--n", e_n, "index for good-at");
    enum_cmd->add_option("--ref", e_ref, "reference set for good-at, e.g. {0,2,5}");
    add_common(enum_cmd, copts);

    // approx
    auto* approx_cmd = app.add_subcommand("approx", "approximation-sequence transforms");
    std::string a_op, a_in, a_in2, a_out, a_rate = "id", a_limit, a_value;
    std::uint64_t a_n = 0;
    approx_cmd->add_option("--op", a_op, "witnesses|t13|t41|compress|extract|bracket")->required();
    approx_cmd->add_option("--input", a_in, "APPROX v1 file");
    approx_cmd->add_option("--input2", a_in2, "second APPROX v1 file");
    approx_cmd->add_option("--output", a_out, "output path");
    approx_cmd->add_option("--rate", a_rate, "rate spec");
    approx_cmd->add_option("--limit", a_limit, "exact limit as m/2^e");
    approx_cmd->add_option("--value", a_value, "dyadic for bracket");
    approx_cmd->add_option("--n", a_n, "length for bracket");
    add_common(approx_cmd, copts);

    // diag / degree / omega / split
    auto* diag_cmd = app.add_subcommand("diag", "halting-budget diagonalization");
    std::string d_family;
    bool d_check = false;
    std::uint64_t d_nmax = 200;
    diag_cmd->add_option("--family", d_family, "interpreter family file")->required();
    diag_cmd->add_flag("--check", d_check, "exit 2 if any claim scan fails");
    diag_cmd->add_option("--nmax", d_nmax, "requirement check range");
    add_common(diag_cmd, copts);

    auto* degree_cmd = app.add_subcommand("degree", "degree-preserving builder");
    std::string g_in;
    bool g_check = false;
    std::int64_t g_da = -1, g_db = -1, g_ra = -1, g_rb = -1;
    degree_cmd->add_option("--input", g_in, "ENUM v1 file, injective, no zeros")->required();
    degree_cmd->add_flag("--check", g_check, "exit 2 if any claim scan fails");
    degree_cmd->add_option("--decode-a", g_da, "decide membership of n in the input set");
    degree_cmd->add_option("--decode-b", g_db, "decide membership of n in the output set");
    degree_cmd->add_option("--recover-a", g_ra, "recover S_i from the input side");
    degree_cmd->add_option("--recover-b", g_rb, "recover S_{i+1} from the output side");
    add_common(degree_cmd, copts);

    auto* omega_cmd = app.add_subcommand("omega", "weighted-Omega builder");
    std::string o_machine;
    bool o_check = false;
    omega_cmd->add_option("--machine", o_machine, "prefix machine file")->required();
    omega_cmd->add_flag("--check", o_check, "exit 2 if any claim scan fails");
    add_common(omega_cmd, copts);

    auto* split_cmd = app.add_subcommand("split", "splitting algorithm");
    std::string s_kind = "stream", s_in, s_og, s_oh;
    bool s_table = false, s_check = false;
    split_cmd->add_option("--kind", s_kind, "stream|ce|delta")
        ->check(CLI::IsMember({"stream", "ce", "delta"}));
    split_cmd->add_option("--input", s_in, "input file (ENUM or DELTA)")->required();
    split_cmd->add_flag("--emit-table", s_table, "print the stage-table events");
    split_cmd->add_flag("--check", s_check, "exit 2 if any claim scan fails");
    split_cmd->add_option("--out-g", s_og, "write the even-side output here");
    split_cmd->add_option("--out-h", s_oh, "write the odd-side output here");
    add_common(split_cmd, copts);

    auto* verify_cmd = app.add_subcommand("verify", "re-run a trace and re-check everything");
    std::string v_trace;
    verify_cmd->add_option("--trace", v_trace, "trace file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "compare implementations with oracles");
    std::string or_constr;
    std::uint64_t or_count = 10;
    oracle_cmd->add_option("--construction", or_constr, "split|degree|omega|enum-prefix")
        ->required();
    oracle_cmd->add_option("--count", or_count, "number of seeded instances");
    add_common(oracle_cmd, copts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enum_cmd->parsed())
            return cmd_enum(e_op, e_in, e_in2, e_out, e_rate, e_chi, e_a, e_b, e_n, e_ref, copts);
        if (approx_cmd->parsed())
            return cmd_approx(a_op, a_in, a_in2, a_out, a_rate, a_limit, a_value, a_n, copts);
        if (diag_cmd->parsed()) return cmd_diag(d_family, d_check, d_nmax, copts);
        if (degree_cmd->parsed())
            return cmd_degree(g_in, g_check, g_da, g_db, g_ra, g_rb, copts);
        if (omega_cmd->parsed()) return cmd_omega(o_machine, o_check, copts);
        if (split_cmd->parsed())
            return cmd_split(s_kind, s_in, s_table, s_check, s_og, s_oh, copts);
        if (verify_cmd->parsed()) return cmd_verify(v_trace);
        if (oracle_cmd->parsed()) return cmd_oracle(or_constr, or_count, copts);
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
