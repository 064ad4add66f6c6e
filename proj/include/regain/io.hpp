#pragma once

#include "regain/approx.hpp"
#include "regain/enum_ops.hpp"
#include "regain/splitting.hpp"
#include "regain/stream.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace regain::io {

/// ENUM v1: header "ENUM v1 <length|inf>". Finite streams carry one code
/// per line; generator-backed streams carry a single line
/// "gen <zero|decidable> [chi...]" instead of a body.
EnumStreamPtr read_enum(std::istream& in);
void write_enum(std::ostream& out, const std::vector<std::uint64_t>& codes);

/// APPROX v1: header "APPROX v1 <length> <nondecreasing|increasing>",
/// one canonical dyadic per line.
ApproxSeqPtr read_approx(std::istream& in);
void write_approx(std::ostream& out, const std::vector<Dyadic>& values, Monotone declared);

/// DELTA v1: header "DELTA v1 <length> <multiplicity_bound|none>",
/// one code per line.
DeltaName read_delta(std::istream& in);
void write_delta(std::ostream& out, const std::vector<std::uint64_t>& codes,
                 const std::optional<std::uint64_t>& bound);

/// Predicate names accepted on CLI and in ENUM generator lines:
/// all | none | even | odd | mod <k> <r>.
Decidable parse_decidable(const std::vector<std::string>& tokens);

/// Rate specs: id | affine <a> <b> | double.
RateFunction parse_rate(const std::vector<std::string>& tokens);

EnumStreamPtr read_enum_file(const std::string& path);
ApproxSeqPtr read_approx_file(const std::string& path);
DeltaName read_delta_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace regain::io
