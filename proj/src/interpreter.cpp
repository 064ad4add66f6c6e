#include "regain/interpreter.hpp"

#include <algorithm>
#include <sstream>

namespace regain {

std::uint64_t InterpreterFamily::value_of(const Entry& en, std::uint64_t n) const {
    for (const auto& [pn, pv] : en.patches)
        if (pn == n) return pv;
    switch (en.kind) {
        case Kind::affine: return en.a * n + en.b;
        case Kind::poly: return en.a * n * n + en.b * n + en.c;
        case Kind::mod: return n % en.a;
        case Kind::diverge: break;
    }
    throw std::logic_error("value_of on diverging entry");
}

InterpreterFamily::Probe InterpreterFamily::eval_bounded(std::uint64_t e, std::uint64_t n,
                                                         std::uint64_t t) const {
    Probe p;
    if (e >= entries_.size()) return p;  // outside the family: never halts
    const Entry& en = entries_[e];
    if (en.kind == Kind::diverge) return p;
    std::uint64_t v = value_of(en, n);
    if (t >= v + en.delay) {
        p.halted = true;
        p.value = v;
    }
    return p;
}

std::optional<std::uint64_t> InterpreterFamily::eval(std::uint64_t e, std::uint64_t n) const {
    if (e >= entries_.size() || entries_[e].kind == Kind::diverge) return std::nullopt;
    return value_of(entries_[e], n);
}

bool InterpreterFamily::is_increasing_upto(std::uint64_t e, std::uint64_t hi) const {
    if (!is_total(e)) return false;
    std::uint64_t prev = value_of(entries_[e], 0);
    for (std::uint64_t n = 1; n <= hi; ++n) {
        std::uint64_t cur = value_of(entries_[e], n);
        if (cur <= prev) return false;
        prev = cur;
    }
    return true;
}

InterpreterFamily InterpreterFamily::parse_lines(const std::vector<std::string>& lines) {
    InterpreterFamily fam;
    for (const std::string& raw : lines) {
        std::string line = raw.substr(0, raw.find('#'));
        // Skip blank lines so files may carry comments.
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        std::istringstream is(line);
        std::vector<std::string> tok;
        std::string w;
        while (is >> w) tok.push_back(w);

        Entry en;
        en.source = line;
        std::size_t i = 0;
        auto need = [&](std::size_t k) {
            if (i + k > tok.size()) throw io_error("interpreter line too short: '" + raw + "'");
        };
        need(1);
        const std::string& kind = tok[i++];
        if (kind == "affine") {
            en.kind = Kind::affine;
            need(2);
            en.a = std::stoull(tok[i++]);
            en.b = std::stoull(tok[i++]);
        } else if (kind == "poly") {
            en.kind = Kind::poly;
            need(3);
            en.a = std::stoull(tok[i++]);
            en.b = std::stoull(tok[i++]);
            en.c = std::stoull(tok[i++]);
        } else if (kind == "mod") {
            en.kind = Kind::mod;
            need(1);
            en.a = std::stoull(tok[i++]);
            if (en.a == 0) throw io_error("mod 0 interpreter");
        } else if (kind == "diverge") {
            en.kind = Kind::diverge;
        } else if (kind == "patch") {
            // patch <base...> @ n v [n v ...]
            auto at = std::find(tok.begin(), tok.end(), "@");
            if (at == tok.end()) throw io_error("patch without '@': '" + raw + "'");
            std::vector<std::string> base(tok.begin() + 1, at);
            InterpreterFamily sub = parse_lines({[&] {
                std::string s;
                for (const auto& b : base) s += b + " ";
                return s;
            }()});
            if (sub.entries_.size() != 1 || sub.entries_[0].kind == Kind::diverge)
                throw io_error("patch base must be a single total entry: '" + raw + "'");
            en = sub.entries_[0];
            en.source = line;
            for (auto it = at + 1; it != tok.end();) {
                std::uint64_t pn = std::stoull(*it++);
                if (it == tok.end()) throw io_error("patch with odd override list: '" + raw + "'");
                std::uint64_t pv = std::stoull(*it++);
                en.patches.emplace_back(pn, pv);
            }
            fam.entries_.push_back(std::move(en));
            continue;
        } else {
            throw io_error("unknown interpreter kind '" + kind + "'");
        }
        if (i + 2 <= tok.size() && tok[i] == "delay") {
            en.delay = std::stoull(tok[i + 1]);
            i += 2;
        }
        if (i != tok.size()) throw io_error("trailing tokens in interpreter line: '" + raw + "'");
        fam.entries_.push_back(std::move(en));
    }
    return fam;
}

InterpreterFamily InterpreterFamily::parse(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return parse_lines(lines);
}

}  // namespace regain
