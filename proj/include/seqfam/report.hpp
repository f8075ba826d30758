#pragma once

// Machine-readable reports of measure results and bound checks. JSON output is
// an array with one object per result; exact values are written as "num/den"
// strings so they survive round trips. The family header appears in text
// output only.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqfam/bounds.hpp"
#include "seqfam/family.hpp"
#include "seqfam/measures.hpp"

namespace seqfam::report {

enum class Format { json, csv, text };
Format parse_format(std::string_view name);

struct FamilyInfo {
  std::string construction;
  std::uint64_t p = 0;
  unsigned d = 0;
  unsigned k = 2;
  std::size_t length = 0;  // N
  std::size_t size = 0;    // F

  static FamilyInfo of(const Family& fam);
};

struct Report {
  std::optional<FamilyInfo> family;
  std::vector<measures::MeasureResult> measures;
  std::vector<bounds::BoundReport> bounds;
};

/// Throws ParameterError when the report holds no measures and no bounds.
void emit_report(const Report& report, Format format, std::ostream& out);
std::string render(const Report& report, Format format);

/// Measure records of a JSON report (bound records are skipped).
std::vector<measures::MeasureResult> read_measures(std::string_view json_text);

/// Compact witness text, e.g. "I=1,2 D=0,1 M=3 W=0,1" or "positions=1,2 pattern=0,1".
std::string witness_string(const measures::Witness& witness);

}  // namespace seqfam::report
