#include "regain/trace.hpp"

#include "regain/degree.hpp"
#include "regain/enum_ops.hpp"
#include "regain/diagonal.hpp"
#include "regain/io.hpp"
#include "regain/omega.hpp"
#include "regain/splitting.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace regain {

namespace {

constexpr char kBinaryMagic[] = "RGNTRACE1";

void put_u64(std::ostream& os, std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(buf, 8);
}

std::uint64_t get_u64(std::istream& is) {
    char buf[8];
    is.read(buf, 8);
    if (!is) throw io_error("trace binary: truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i]))
                                     << (8 * i);
    return v;
}

void put_str(std::ostream& os, const std::string& s) {
    put_u64(os, s.size());
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_str(std::istream& is) {
    std::uint64_t len = get_u64(is);
    std::string s(len, '\0');
    is.read(s.data(), static_cast<std::streamsize>(len));
    if (!is) throw io_error("trace binary: truncated string");
    return s;
}

}  // namespace

std::string Trace::text() const {
    std::ostringstream os;
    os << "TRACE v1\n";
    os << "construction " << construction << "\n";
    os << "seed " << seed << "\n";
    os << "horizon " << horizon << "\n";
    for (const auto& [k, v] : inputs) os << "input " << k << ' ' << v << "\n";
    os << "begin\n";
    for (const std::string& l : stage_lines) os << l << "\n";
    os << "end\n";
    for (const auto& [name, ok] : report)
        os << "report " << name << ' ' << (ok ? "pass" : "fail") << "\n";
    return os.str();
}

Trace Trace::parse_text(std::istream& in) {
    Trace t;
    std::string line;
    if (!std::getline(in, line) || line != "TRACE v1") throw io_error("trace: bad magic");
    bool in_body = false;
    bool body_done = false;
    while (std::getline(in, line)) {
        if (!in_body) {
            std::istringstream is(line);
            std::string key;
            is >> key;
            if (key == "construction") is >> t.construction;
            else if (key == "seed") is >> t.seed;
            else if (key == "horizon") is >> t.horizon;
            else if (key == "input") {
                std::string k;
                is >> k;
                std::string rest;
                std::getline(is, rest);
                if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
                t.inputs.emplace_back(k, rest);
            } else if (key == "begin") in_body = true;
            else throw io_error("trace: unexpected header line '" + line + "'");
        } else if (!body_done) {
            if (line == "end") body_done = true;
            else t.stage_lines.push_back(line);
        } else {
            std::istringstream is(line);
            std::string key, name, verdict;
            is >> key >> name >> verdict;
            if (key != "report") throw io_error("trace: expected report line");
            t.report.emplace_back(name, verdict == "pass");
        }
    }
    return t;
}

std::string Trace::binary() const {
    std::ostringstream os;
    os.write(kBinaryMagic, sizeof(kBinaryMagic) - 1);
    put_str(os, construction);
    put_u64(os, seed);
    put_u64(os, horizon);
    put_u64(os, inputs.size());
    for (const auto& [k, v] : inputs) {
        put_str(os, k);
        put_str(os, v);
    }
    put_u64(os, stage_lines.size());
    for (const std::string& l : stage_lines) put_str(os, l);
    put_u64(os, report.size());
    for (const auto& [name, ok] : report) {
        put_str(os, name);
        put_u64(os, ok ? 1 : 0);
    }
    return os.str();
}

Trace Trace::parse_binary(std::istream& in) {
    char magic[sizeof(kBinaryMagic) - 1];
    in.read(magic, sizeof(magic));
    if (!in || std::string(magic, sizeof(magic)) != kBinaryMagic)
        throw io_error("trace: bad binary magic");
    Trace t;
    t.construction = get_str(in);
    t.seed = get_u64(in);
    t.horizon = get_u64(in);
    std::uint64_t n = get_u64(in);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::string k = get_str(in);
        t.inputs.emplace_back(k, get_str(in));
    }
    n = get_u64(in);
    for (std::uint64_t i = 0; i < n; ++i) t.stage_lines.push_back(get_str(in));
    n = get_u64(in);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::string name = get_str(in);
        t.report.emplace_back(name, get_u64(in) == 1);
    }
    return t;
}

void Trace::write_file(const std::string& path, TraceFormat fmt) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot write '" + path + "'");
    f << (fmt == TraceFormat::text ? text() : binary());
}

Trace Trace::read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "'");
    char first = static_cast<char>(f.peek());
    if (first == 'R') return parse_binary(f);
    return parse_text(f);
}

namespace {

std::string join_codes(const std::vector<std::uint64_t>& codes) {
    std::ostringstream os;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) os << ',';
        os << codes[i];
    }
    return os.str();
}

std::vector<std::uint64_t> split_codes(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(std::stoull(tok));
    return out;
}

Trace run_split(const RunConfig& cfg, bool strip, bool delta) {
    Trace t;
    t.construction = cfg.construction;
    t.seed = cfg.seed;
    t.horizon = cfg.horizon;
    t.inputs.emplace_back("codes", join_codes(cfg.codes));
    if (delta) {
        t.inputs.emplace_back("bound",
                              cfg.delta_bound ? std::to_string(*cfg.delta_bound) : "none");
    }

    auto src = table_enum(cfg.codes);
    SplitResult sr = strip ? split_ce_set(*src, cfg.horizon) : split_stream(*src, cfg.horizon);

    std::size_t next_event = 0;
    for (std::uint64_t s = 0; s < cfg.horizon; ++s) {
        if (sr.g[s] == 0 && sr.h[s] == 0) continue;
        std::ostringstream os;
        os << "t " << s << " g " << sr.g[s] << " h " << sr.h[s];
        if (next_event < sr.table.events().size() &&
            sr.table.events()[next_event].stage == s) {
            const auto& e = sr.table.events()[next_event++];
            os << " k " << e.threshold << " j " << e.jump;
        }
        t.stage_lines.push_back(os.str());
    }

    // Conservation, on the post-strip stream when repetitions are removed.
    std::vector<std::uint64_t> effective = cfg.codes;
    if (strip) {
        auto stripped = without_repetitions(table_enum(cfg.codes));
        effective = collect(*stripped, cfg.horizon);
    }
    effective.resize(cfg.horizon, 0);
    std::uint64_t max_code = 0;
    for (std::uint64_t c : effective) max_code = std::max(max_code, c);
    auto cf = code_counts(effective, max_code);
    auto cg = code_counts(sr.g, max_code);
    auto ch = code_counts(sr.h, max_code);
    bool conserved = true;
    for (std::uint64_t c = 1; c <= max_code; ++c)
        if (cf[c] != cg[c] + ch[c]) conserved = false;
    t.report.emplace_back("conservation", conserved);

    bool catch_ok = true;
    for (bool even : {true, false}) {
        auto stages = certified_catchups(sr.table, even ? sr.g : sr.h, even, max_code + 2);
        for (const auto& cs : stages)
            if (!cs.inclusion) catch_ok = false;
    }
    t.report.emplace_back("catchup-inclusions", catch_ok);

    std::vector<std::uint64_t> rows;
    for (std::uint64_t i = 0; i <= max_code + 1; ++i) rows.push_back(i);
    bool claims = true;
    try {
        sr.table.check_claims_direct(rows);
    } catch (const invariant_error&) {
        claims = false;
    }
    t.report.emplace_back("table-claims", claims);

    if (delta) {
        // Exact partial-sum additivity at every stage.
        DeltaName d{table_enum(effective), cfg.delta_bound};
        DeltaName da{table_enum(sr.g), cfg.delta_bound};
        DeltaName db{table_enum(sr.h), cfg.delta_bound};
        auto sd = deltaname_partial_sums(d);
        auto sa = deltaname_partial_sums(da);
        auto sb = deltaname_partial_sums(db);
        bool additive = true;
        for (std::uint64_t s = 0; s <= cfg.horizon; ++s) {
            if (sa->next() + sb->next() != sd->next()) additive = false;
            if (s == cfg.horizon) break;
        }
        t.report.emplace_back("sum-additivity", additive);
    }
    return t;
}

Trace run_diag(const RunConfig& cfg) {
    Trace t;
    t.construction = cfg.construction;
    t.seed = cfg.seed;
    t.horizon = cfg.horizon;
    for (const std::string& l : cfg.family_lines) t.inputs.emplace_back("family", l);

    InterpreterFamily fam = InterpreterFamily::parse_lines(cfg.family_lines);
    DiagonalRun run = diagonalize_non_regaining(fam, cfg.horizon);
    for (std::uint64_t s = 0; s < cfg.horizon; ++s) {
        if (run.codes[s] == 0) continue;
        std::ostringstream os;
        os << "t " << s << " g " << run.codes[s];
        t.stage_lines.push_back(os.str());
    }

    // Requirements checked against the horizon-stable set on a modest range.
    std::uint64_t n_max = std::min<std::uint64_t>(cfg.horizon / 8, 200);
    auto checks = check_requirements(run, fam, n_max);
    bool ok = true;
    for (const auto& rc : checks)
        if (!rc.holds) ok = false;
    t.report.emplace_back("requirements", ok);

    // Without repetitions by construction.
    std::vector<std::uint64_t> seen;
    for (std::uint64_t c : run.codes)
        if (c) seen.push_back(c);
    std::sort(seen.begin(), seen.end());
    t.report.emplace_back("no-repetitions",
                          std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    return t;
}

Trace run_degree(const RunConfig& cfg) {
    Trace t;
    t.construction = cfg.construction;
    t.seed = cfg.seed;
    t.horizon = cfg.horizon;
    t.inputs.emplace_back("codes", join_codes(cfg.codes));

    DegreeRun run = degree_preserving_build(*table_enum(cfg.codes), cfg.horizon);
    for (std::uint64_t s = 0; s < cfg.horizon; ++s) {
        std::ostringstream os;
        os << "t " << s << " f " << run.f_values[s] << " g " << run.g_values[s].str();
        t.stage_lines.push_back(os.str());
    }

    std::vector<std::uint64_t> rows;
    std::uint64_t max_val = 0;
    for (std::uint64_t v : run.f_values) max_val = std::max(max_val, v);
    for (std::uint64_t i = 0; i <= std::min<std::uint64_t>(max_val + 1, 400); ++i)
        rows.push_back(i);
    DegreeClaims dc = check_degree_claims(run, rows);
    t.report.emplace_back("table-claims", dc.table_claims);
    t.report.emplace_back("f-large-after-limit", dc.f_large_after_limit);
    t.report.emplace_back("g-large-after-limit", dc.g_large_after_limit);
    t.report.emplace_back("g-injective", dc.g_injective);
    t.report.emplace_back("idgood-at-limits", dc.idgood_at_limits);
    return t;
}

Trace run_omega(const RunConfig& cfg) {
    Trace t;
    t.construction = cfg.construction;
    t.seed = cfg.seed;
    t.horizon = cfg.horizon;
    for (const std::string& l : cfg.machine_lines) t.inputs.emplace_back("machine", l);

    std::istringstream ms([&] {
        std::string s;
        for (const auto& l : cfg.machine_lines) s += l + "\n";
        return s;
    }());
    PrefixMachine m = PrefixMachine::parse(ms);
    OmegaRun run = omega_weighting(m, cfg.horizon);

    for (std::uint64_t s = 1; s < cfg.horizon; ++s) {
        if (run.i_t[s] == kInfWeight) continue;
        std::ostringstream os;
        os << "t " << s << " i " << run.i_t[s] << " a " << run.a[s].str();
        t.stage_lines.push_back(os.str());
    }

    OmegaClaims oc = check_omega_claims(run);
    t.report.emplace_back("r-increasing-in-n", oc.r_increasing_in_n);
    t.report.emplace_back("r-nondecreasing-in-t", oc.r_nondecreasing_in_t);
    t.report.emplace_back("w-nondecreasing-in-n", oc.w_nondecreasing_in_n);
    t.report.emplace_back("w-nonincreasing-in-t", oc.w_nonincreasing_in_t);
    t.report.emplace_back("a-below-one", oc.a_below_one);

    auto drops = check_drop_stages(run, cfg.horizon);
    bool drops_ok = true;
    for (const auto& d : drops)
        if (!(d.tail_bound && d.weights_frozen && d.weights_large)) drops_ok = false;
    t.report.emplace_back("drop-stage-bounds", drops_ok);
    return t;
}

}  // namespace

Trace run_experiment(const RunConfig& cfg) {
    if (cfg.construction == "split-stream") return run_split(cfg, false, false);
    if (cfg.construction == "split-ce") return run_split(cfg, true, false);
    if (cfg.construction == "split-delta") return run_split(cfg, false, true);
    if (cfg.construction == "diag") return run_diag(cfg);
    if (cfg.construction == "degree") return run_degree(cfg);
    if (cfg.construction == "omega") return run_omega(cfg);
    throw io_error("unknown construction '" + cfg.construction + "'");
}

RunConfig config_from_trace(const Trace& t) {
    RunConfig cfg;
    cfg.construction = t.construction;
    cfg.seed = t.seed;
    cfg.horizon = t.horizon;
    for (const auto& [k, v] : t.inputs) {
        if (k == "codes") cfg.codes = split_codes(v);
        else if (k == "bound") {
            if (v != "none") cfg.delta_bound = std::stoull(v);
        } else if (k == "machine") cfg.machine_lines.push_back(v);
        else if (k == "family") cfg.family_lines.push_back(v);
        else throw io_error("trace: unknown input key '" + k + "'");
    }
    return cfg;
}

VerifyOutcome verify_trace(const Trace& t) {
    VerifyOutcome out;
    Trace rerun = run_experiment(config_from_trace(t));
    out.deterministic = rerun.text() == t.text();
    if (!out.deterministic) {
        // Name the first divergence for the report.
        if (rerun.stage_lines != t.stage_lines) {
            std::size_t i = 0;
            while (i < rerun.stage_lines.size() && i < t.stage_lines.size() &&
                   rerun.stage_lines[i] == t.stage_lines[i])
                ++i;
            out.detail = "stage record " + std::to_string(i) + " differs on re-run";
        } else {
            out.detail = "header or report differs on re-run";
        }
    }
    out.invariants = rerun.all_passed();
    if (out.invariants && !out.deterministic && rerun.report != t.report)
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("report lines differ");
    if (!out.invariants) {
        for (const auto& [name, ok] : rerun.report)
            if (!ok) out.detail += (out.detail.empty() ? "" : "; ") + ("violated: " + name);
    }
    return out;
}

}  // namespace regain
