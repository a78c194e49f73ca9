#include "sheetcalc_cli/run.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "sheetcalc/borelideals.hpp"
#include "sheetcalc/errors.hpp"
#include "sheetcalc/gammamap.hpp"
#include "sheetcalc/rootdata.hpp"
#include "sheetcalc_cli/report.hpp"
#include "sheetcalc_cli/verify.hpp"

namespace sheetcalc::cli {

namespace {

template <class Seq>
std::string join(const Seq& xs, const char* sep = " ") {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += sep;
    s += std::to_string(x);
  }
  return s;
}

int cmd_info(const std::string& type_text, const RootSystemOptions& opts, std::ostream& out) {
  const RootSystem rs = build_root_system(CartanType::parse(type_text), opts);
  std::vector<int> degrees;
  for (int m : rs.exponents()) degrees.push_back(m + 1);
  out << "type " << rs.type().name() << "\n"
      << "rank " << rs.rank() << "\n"
      << "dimension " << rs.dim() << "\n"
      << "positive roots " << rs.num_positive() << "\n"
      << "exponents " << join(rs.exponents()) << "\n"
      << "invariant degrees " << join(degrees) << "\n"
      << "highest root " << to_string(rs.positive_root(rs.highest_root())) << "\n";
  return kPass;
}

int cmd_verify(const std::string& theorem, const std::string& type_text, const RootSystemOptions& opts,
               const VerifyOptions& vo, bool json, std::ostream& out) {
  Verifier v(CartanType::parse(type_text), opts);
  std::vector<VerificationReport> reports;
  if (theorem == "all")
    reports = v.run_all(vo);
  else
    reports.push_back(v.run(theorem, vo));
  if (json) {
    if (theorem == "all")
      out << to_json(reports) << "\n";
    else
      out << to_json(reports.front()) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r);
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
  return ok ? kPass : kViolation;
}

int cmd_rk(const std::string& type_text, const RootSystemOptions& opts, std::size_t k, bool dump, std::ostream& out) {
  const LieAlgebra g = build_lie_algebra(build_root_system(CartanType::parse(type_text), opts));
  const PolySpace space = rk_space(g, k);
  out << "dim " << space.dim() << "\n";
  if (dump)
    for (const auto& p : space.basis()) out << p.to_string() << "\n";
  return kPass;
}

int cmd_ideals(const std::string& type_text, const RootSystemOptions& opts, std::size_t size, std::ostream& out) {
  const RootSystem rs = build_root_system(CartanType::parse(type_text), opts);
  const auto ideals = enumerate_ideals(rs, size);
  out << ideals.size() << " ideals of size " << size << "\n";
  for (const auto& ideal : ideals) {
    out << "{";
    for (std::size_t i = 0; i < ideal.roots.size(); ++i)
      out << (i ? " " : "") << to_string(rs.positive_root(ideal.roots[i]));
    out << "} weight " << to_string(ideal.weight) << (ideal.abelian ? " abelian" : " non-abelian") << "\n";
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of sheet, harmonic and Casimir identities for classical Lie algebras",
               "sheetcalc"};
  app.require_subcommand(1);
  bool allow_low_rank_d = false;
  app.add_flag("--allow-low-rank-d", allow_low_rank_d, "Accept D2 (so4) and D3 (so6)");

  std::string type_text, theorem;
  std::uint64_t seed = 1;
  std::size_t trials = 0, k = 0, size = 0;
  bool json = false, dump = false;

  auto* info = app.add_subcommand("info", "Dimensions, exponents and root counts");
  info->add_option("type", type_text, "Cartan type, e.g. A2")->required();

  std::vector<std::string> suites = theorem_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run a theorem suite");
  verify->add_option("theorem", theorem, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--type", type_text, "Cartan type")->required();
  verify->add_option("--seed", seed, "Random seed");
  auto* trials_opt = verify->add_option("--trials", trials, "Override per-suite trial counts")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Emit JSON");

  auto* rk = app.add_subcommand("rk", "Dimension (and basis) of R^k");
  rk->add_option("--type", type_text, "Cartan type")->required();
  rk->add_option("--k", k, "Degree k")->required();
  rk->add_flag("--dump", dump, "Print the reduced basis");

  auto* ideals = app.add_subcommand("ideals", "List ideals of the positive roots");
  ideals->add_option("--type", type_text, "Cartan type")->required();
  ideals->add_option("--size", size, "Cardinality")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  RootSystemOptions opts;
  opts.allow_low_rank_d = allow_low_rank_d;
  try {
    if (*info) return cmd_info(type_text, opts, out);
    if (*verify) {
      VerifyOptions vo;
      vo.seed = seed;
      if (trials_opt->count() > 0) vo.trials = trials;
      return cmd_verify(theorem, type_text, opts, vo, json, out);
    }
    if (*rk) return cmd_rk(type_text, opts, k, dump, out);
    if (*ideals) return cmd_ideals(type_text, opts, size, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GeneratorError& e) {
    err << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const RepresentationError& e) {
    err << "violation: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace sheetcalc::cli
