#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/polyring.hpp"
#include "sheetcalc/rootdata.hpp"
#include "sheetcalc_cli/report.hpp"

namespace sheetcalc::cli {

/// Theorem suites accepted by `verify`, in the order `all` runs them.
const std::vector<std::string>& theorem_names();

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Overrides every per-suite trial count when set.
  std::optional<std::size_t> trials;
  std::size_t samples_per_stratum = 20;
};

/// Holds one algebra and the expensive derived objects shared by suites.
class Verifier {
 public:
  explicit Verifier(const CartanType& type, const RootSystemOptions& opts = {});

  const LieAlgebra& algebra() const { return g_; }
  const std::vector<Poly>& generators();
  const PolySpace& rk(std::size_t k);

  /// Throws ConfigError for an unknown suite name; budget errors propagate.
  VerificationReport run(std::string_view theorem, const VerifyOptions& opts);
  std::vector<VerificationReport> run_all(const VerifyOptions& opts);

 private:
  void al1(VerificationReport& r, const VerifyOptions& o);
  void al2(VerificationReport& r, const VerifyOptions& o);
  void al3(VerificationReport& r, const VerifyOptions& o);
  void sheets(VerificationReport& r, const VerifyOptions& o);
  void gamma(VerificationReport& r, const VerifyOptions& o);
  void minors(VerificationReport& r, const VerifyOptions& o);
  void harmonic(VerificationReport& r, const VerifyOptions& o);
  void ideals(VerificationReport& r, const VerifyOptions& o);
  void casimir_wedge(VerificationReport& r, const VerifyOptions& o);

  CartanType type_;
  LieAlgebra g_;
  std::optional<std::vector<Poly>> gens_;
  std::map<std::size_t, PolySpace> rk_;
};

}  // namespace sheetcalc::cli
