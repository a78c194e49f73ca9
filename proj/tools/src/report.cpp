#include "sheetcalc_cli/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sheetcalc::cli {

namespace {

using nlohmann::json;

json encode(const VerificationReport& r) {
  json j;
  j["version"] = r.version;
  j["cartan_type"] = r.cartan_type;
  j["theorem"] = r.theorem;
  j["seed"] = r.seed;
  j["status"] = r.passed() ? "pass" : "fail";
  j["counts"] = r.counts;
  j["elapsed_ms"] = r.elapsed_ms;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

VerificationReport decode(const json& j) {
  VerificationReport r;
  r.version = j.at("version").get<std::string>();
  r.cartan_type = j.at("cartan_type").get<std::string>();
  r.theorem = j.at("theorem").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.counts = j.at("counts").get<std::map<std::string, std::int64_t>>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  const auto status = j.at("status").get<std::string>();
  if (status != (r.passed() ? "pass" : "fail")) throw std::invalid_argument("report status disagrees with its checks");
  return r;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string to_json(const VerificationReport& r) { return encode(r).dump(); }

std::string to_json(const std::vector<VerificationReport>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(encode(r));
  return a.dump();
}

VerificationReport report_from_json(std::string_view text) {
  try {
    return decode(parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid report: ") + e.what());
  }
}

std::vector<VerificationReport> reports_from_json(std::string_view text) {
  const json a = parse(text);
  if (!a.is_array()) throw std::invalid_argument("expected an array of reports");
  std::vector<VerificationReport> out;
  try {
    for (const auto& j : a) out.push_back(decode(j));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid report: ") + e.what());
  }
  return out;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.theorem << " " << r.cartan_type << ": " << (r.passed() ? "PASS" : "FAIL") << " (seed " << r.seed << ", "
     << static_cast<long long>(r.elapsed_ms) << " ms)\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  for (const auto& [k, v] : r.counts) os << "  " << k << " = " << v << "\n";
  return os.str();
}

}  // namespace sheetcalc::cli
