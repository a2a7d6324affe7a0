#ifndef RSUM_FORMAT_HPP
#define RSUM_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "rsum/bounds.hpp"
#include "rsum/exhaustive.hpp"
#include "rsum/sweep.hpp"

namespace rsum {

// Report serialization. "jsonl" writes one JSON object per line with a fixed
// key order; elapsed time is left out so equal runs give equal bytes. The
// witness sums are written for violated records only.

enum class ReportFormat { text, jsonl };

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;

/// One line, no trailing newline.
std::string format_record(const VerificationReport& r, ReportFormat f);

std::string format_summary(const SweepSummary& s, ReportFormat f);

/// Summary line for an exhaustive bitmask run, plus one line per kept witness.
std::string format_exhaustive(std::uint32_t p, ExhaustiveCheck check, const ExhaustiveResult& r, ReportFormat f);

}  // namespace rsum

#endif  // RSUM_FORMAT_HPP
