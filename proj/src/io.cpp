#include "regain/io.hpp"

#include "regain/errors.hpp"

#include <fstream>
#include <sstream>

namespace regain::io {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r") != std::string::npos) return body;
    }
    throw io_error("unexpected end of file");
}

}  // namespace

Decidable parse_decidable(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw io_error("missing predicate");
    const std::string& k = tokens[0];
    if (k == "all") return Decidable::all();
    if (k == "none") return Decidable::none();
    if (k == "even") return Decidable::even();
    if (k == "odd") return Decidable::odd();
    if (k == "mod") {
        if (tokens.size() < 3) throw io_error("mod predicate needs k and r");
        std::uint64_t m = std::stoull(tokens[1]);
        std::uint64_t r = std::stoull(tokens[2]);
        if (m == 0 || r >= m) throw io_error("mod predicate needs r < k, k > 0");
        return Decidable::mod(m, r);
    }
    throw io_error("unknown predicate '" + k + "'");
}

RateFunction parse_rate(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw io_error("missing rate spec");
    const std::string& k = tokens[0];
    if (k == "id") return RateFunction::identity();
    if (k == "double") return RateFunction::affine(2, 0);
    if (k == "affine") {
        if (tokens.size() < 3) throw io_error("affine rate needs a and b");
        return RateFunction::affine(std::stoull(tokens[1]), std::stoull(tokens[2]));
    }
    throw io_error("unknown rate spec '" + k + "'");
}

EnumStreamPtr read_enum(std::istream& in) {
    auto head = split_ws(next_content_line(in));
    if (head.size() != 3 || head[0] != "ENUM" || head[1] != "v1")
        throw io_error("bad ENUM v1 header");
    if (head[2] == "inf") {
        auto gen = split_ws(next_content_line(in));
        if (gen.empty() || gen[0] != "gen") throw io_error("generator line expected after 'inf'");
        if (gen.size() >= 2 && gen[1] == "zero")
            return generator_enum([](std::uint64_t) { return std::uint64_t{0}; });
        if (gen.size() >= 2 && gen[1] == "decidable")
            return decidable_to_idgood(
                parse_decidable({gen.begin() + 2, gen.end()}));
        throw io_error("unknown generator spec");
    }
    std::uint64_t len = std::stoull(head[2]);
    std::vector<std::uint64_t> codes;
    codes.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) codes.push_back(std::stoull(next_content_line(in)));
    return table_enum(std::move(codes));
}

void write_enum(std::ostream& out, const std::vector<std::uint64_t>& codes) {
    out << "ENUM v1 " << codes.size() << "\n";
    for (std::uint64_t c : codes) out << c << "\n";
}

ApproxSeqPtr read_approx(std::istream& in) {
    auto head = split_ws(next_content_line(in));
    if (head.size() != 4 || head[0] != "APPROX" || head[1] != "v1")
        throw io_error("bad APPROX v1 header");
    std::uint64_t len = std::stoull(head[2]);
    Monotone mono;
    if (head[3] == "nondecreasing") mono = Monotone::nondecreasing;
    else if (head[3] == "increasing") mono = Monotone::increasing;
    else throw io_error("bad APPROX monotonicity '" + head[3] + "'");
    std::vector<Dyadic> vals;
    vals.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) vals.push_back(Dyadic::parse(next_content_line(in)));
    return std::make_unique<TableSeq>(std::move(vals), mono);
}

void write_approx(std::ostream& out, const std::vector<Dyadic>& values, Monotone declared) {
    out << "APPROX v1 " << values.size() << ' '
        << (declared == Monotone::increasing ? "increasing" : "nondecreasing") << "\n";
    for (const Dyadic& v : values) out << v.str() << "\n";
}

DeltaName read_delta(std::istream& in) {
    auto head = split_ws(next_content_line(in));
    if (head.size() != 4 || head[0] != "DELTA" || head[1] != "v1")
        throw io_error("bad DELTA v1 header");
    std::uint64_t len = std::stoull(head[2]);
    std::optional<std::uint64_t> bound;
    if (head[3] != "none") bound = std::stoull(head[3]);
    std::vector<std::uint64_t> codes;
    codes.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) codes.push_back(std::stoull(next_content_line(in)));
    return DeltaName{table_enum(std::move(codes)), bound};
}

void write_delta(std::ostream& out, const std::vector<std::uint64_t>& codes,
                 const std::optional<std::uint64_t>& bound) {
    out << "DELTA v1 " << codes.size() << ' ';
    if (bound) out << *bound;
    else out << "none";
    out << "\n";
    for (std::uint64_t c : codes) out << c << "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot write '" + path + "'");
    f << content;
}

EnumStreamPtr read_enum_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open '" + path + "'");
    return read_enum(f);
}

ApproxSeqPtr read_approx_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open '" + path + "'");
    return read_approx(f);
}

DeltaName read_delta_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open '" + path + "'");
    return read_delta(f);
}

}  // namespace regain::io
