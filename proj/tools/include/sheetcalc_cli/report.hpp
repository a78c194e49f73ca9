#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sheetcalc::cli {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

/// One named assertion inside a verification run.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string version{kArtifactVersion};
  std::string cartan_type;
  std::string theorem;
  std::uint64_t seed = 0;
  std::map<std::string, std::int64_t> counts;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Compact JSON with sorted keys; status is derived from the checks.
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs);
/// Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(std::string_view text);
std::vector<VerificationReport> reports_from_json(std::string_view text);

/// Human-readable block.
std::string to_text(const VerificationReport& r);

}  // namespace sheetcalc::cli
