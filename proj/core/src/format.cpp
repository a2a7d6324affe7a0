#include "rsum/format.hpp"

#include <json.hpp>

namespace rsum {

using Json = nlohmann::ordered_json;

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
  if (name == "text") return ReportFormat::text;
  if (name == "jsonl" || name == "json") return ReportFormat::jsonl;
  return std::nullopt;
}

std::string format_record(const VerificationReport& r, ReportFormat f) {
  if (f == ReportFormat::jsonl) {
    Json j;
    j["domain"] = r.domain;
    j["kind"] = r.check;
    j["family"] = r.family;
    j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
    j["actual"] = r.actual ? Json(*r.actual) : Json(nullptr);
    j["verdict"] = std::string(to_string(r.verdict));
    j["witness"] = r.verdict == Verdict::violated ? Json(r.witness) : Json::array();
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
  }
  std::string line = r.domain + "  " + r.check + "  " + r.family;
  if (r.bound) line += "  bound=" + std::to_string(*r.bound);
  if (r.actual) line += "  actual=" + std::to_string(*r.actual);
  line += "  ";
  line += to_string(r.verdict);
  if (!r.note.empty()) line += "  (" + r.note + ")";
  if (r.verdict == Verdict::violated && !r.witness.empty()) {
    line += "  sums={";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) line += ',';
      line += r.witness[i];
    }
    line += "}";
  }
  return line;
}

std::string format_summary(const SweepSummary& s, ReportFormat f) {
  if (f == ReportFormat::jsonl) {
    Json j;
    j["summary"] = true;
    j["instances"] = s.instances;
    j["holds"] = s.holds;
    j["equality"] = s.equality;
    j["violated"] = s.violated;
    j["skipped"] = s.skipped;
    j["error"] = s.errors;
    j["exhaustive"] = s.exhaustive;
    j["truncated"] = s.truncated;
    j["coverage"] = s.coverage;
    return j.dump();
  }
  return "summary: " + std::to_string(s.instances) + " instances, " + std::to_string(s.holds) + " holds, " +
         std::to_string(s.equality) + " equality, " + std::to_string(s.violated) + " violated, " +
         std::to_string(s.skipped) + " skipped, " + std::to_string(s.errors) + " errors\ncoverage: " + s.coverage;
}

std::string format_exhaustive(std::uint32_t p, ExhaustiveCheck check, const ExhaustiveResult& r, ReportFormat f) {
  std::string out;
  for (const auto& w : r.violations) {
    VerificationReport v;
    v.domain = "F" + std::to_string(p);
    v.check = std::string(to_string(check));
    v.family = masks_to_string(w.masks);
    v.bound = w.bound;
    v.actual = w.actual;
    v.verdict = Verdict::violated;
    out += format_record(v, f);
    out += '\n';
  }
  if (f == ReportFormat::jsonl) {
    Json j;
    j["summary"] = true;
    j["domain"] = "F" + std::to_string(p);
    j["kind"] = std::string(to_string(check));
    j["instances"] = r.evaluated;
    j["covered"] = r.covered;
    j["holds"] = r.holds;
    j["equality"] = r.equality;
    j["violated"] = r.violated;
    j["exhaustive"] = true;
    out += j.dump();
  } else {
    out += "F" + std::to_string(p) + "  " + std::string(to_string(check)) + "  exhaustive: " +
           std::to_string(r.covered) + " families covered (" + std::to_string(r.evaluated) +
           " evaluated up to affine maps), " + std::to_string(r.holds) + " holds, " + std::to_string(r.equality) +
           " equality, " + std::to_string(r.violated) + " violated";
  }
  return out;
}

}  // namespace rsum
