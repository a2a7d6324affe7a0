#ifndef RSUM_CLI_LITERAL_HPP
#define RSUM_CLI_LITERAL_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace rsum::cli {

using RawPoint = std::vector<std::int64_t>;
using RawSet = std::vector<RawPoint>;

/// Parses `{0,1,2};{3,(4)}x2` style family literals. Elements are integers
/// or parenthesized tuples; `xN` after a slot repeats it N times.
/// Throws InputError with the offending position.
std::vector<RawSet> parse_family_literal(std::string_view text);

/// "3" -> [3,3], "2:5" -> [2,5]. Throws InputError.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

}  // namespace rsum::cli

#endif
