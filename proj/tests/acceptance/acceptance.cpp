// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sheetcalc/borelideals.hpp"
#include "sheetcalc/chevalley.hpp"
#include "sheetcalc/errors.hpp"
#include "sheetcalc/exterior.hpp"
#include "sheetcalc/gammamap.hpp"
#include "sheetcalc/identities.hpp"
#include "sheetcalc/invariants.hpp"
#include "sheetcalc_cli/verify.hpp"

using namespace sheetcalc;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

LieAlgebra algebra(const char* type, bool low_rank_d = false) {
  RootSystemOptions opts;
  opts.allow_low_rank_d = low_rank_d;
  return build_lie_algebra(build_root_system(CartanType::parse(type), opts));
}

Matrix six_permutation_sum(const std::vector<Matrix>& xs) {
  std::vector<std::size_t> perm{0, 1, 2};
  Matrix total(2, 2);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (perm[i] > perm[j]) ++inv;
    total += (inv % 2 ? Rational(-1) : Rational(1)) * (xs[perm[0]] * xs[perm[1]] * xs[perm[2]]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void criterion1(Outcome& o) {
  for (std::size_t n : {2, 3}) {
    const IdentityCase units = check_matrix_units(n);
    const IdentityCase random = check_full_matrices(n, 100, 2024 + n);
    o.require(units.degree == 2 * n && units.failures == 0, "matrix units M(" + std::to_string(n) + ")");
    o.require(random.trials >= 100 && random.failures == 0, "random M(" + std::to_string(n) + ")");
    o.detail << " M(" << n << "): " << units.trials << " unit subsets, " << random.trials << " random tuples;";
  }
  const std::vector<Matrix> xs{matrix_unit(2, 0, 0), matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)};
  const Matrix expected = Rational(2) * matrix_unit(2, 0, 0) + matrix_unit(2, 1, 1);
  o.require(six_permutation_sum(xs) == expected, "oracle value");
  o.require(std_identity(xs) == expected, "degree-3 witness 2E11+E22");
  o.detail << " degree-3 witness = 2E11+E22";
}

void criterion2(Outcome& o) {
  const IdentityCase four = check_skew(4, 50, 7);
  const IdentityCase two = check_skew(2, 50, 7);
  o.require(four.degree == 6 && four.trials >= 50 && four.failures == 0, "4x4 skew degree 6");
  o.require(two.degree == 2 && two.failures == 0, "2x2 skew degree 2");
  o.detail << " 4x4 degree 6: " << four.trials << " tuples; 2x2 degree 2: " << two.trials << " tuples";
}

void criterion3(Outcome& o) {
  const LieAlgebra a2 = algebra("A2");
  const LieAlgebra d2 = algebra("D2", true);
  const MatrixRep ra = defining_rep(a2), rd = defining_rep(d2);
  const std::size_t ea = epsilon(ra, a2), ed = epsilon(rd, d2);
  o.require(ea == 3, "epsilon(A2 defining) = 3");
  o.require(ed == 3, "epsilon(so4 defining) = 3");
  const IdentityCase ca = check_representation(a2, ra, "A2 defining", 50, 3);
  const IdentityCase cd = check_representation(d2, rd, "so4 defining", 50, 3);
  o.require(ca.degree == 6 && ca.trials >= 50 && ca.failures == 0, "A2 degree 6");
  o.require(cd.degree == 6 && cd.trials >= 50 && cd.failures == 0, "so4 degree 6");
  o.detail << " epsilon A2 = " << ea << ", so4 = " << ed << "; degree-6 identity on " << ca.trials << " + "
           << cd.trials << " image tuples";
}

void criterion4(Outcome& o) {
  std::size_t df = 1;
  for (std::size_t k = 1; k <= 8; ++k) {
    df *= 2 * k - 1;
    std::size_t count = 0;
    for_each_matching(k, [&](const Matching&) { ++count; });
    o.require(count == df, "count for k=" + std::to_string(k));
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    using PairSet = std::set<std::pair<std::size_t, std::size_t>>;
    std::set<PairSet> oracle, listed;
    std::vector<std::size_t> perm(2 * k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      PairSet s;
      for (std::size_t i = 0; i < k; ++i)
        s.emplace(std::min(perm[2 * i], perm[2 * i + 1]), std::max(perm[2 * i], perm[2 * i + 1]));
      oracle.insert(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t total = 0;
    for (const auto& m : enumerate_matchings(k)) {
      listed.insert(PairSet(m.pairs.begin(), m.pairs.end()));
      ++total;
    }
    o.require(listed == oracle && total == oracle.size(), "bijection for k=" + std::to_string(k));
  }
  o.detail << " |matchings(8)| = " << df << "; bijection checked for k <= 4";
}

void criterion5(Outcome& o) {
  const std::vector<std::pair<const char*, std::size_t>> cases{{"A1", 3}, {"A2", 20}, {"B2", 0}};
  for (const auto& [type, expected] : cases) {
    const LieAlgebra g = algebra(type);
    const PolySpace rk = rk_space(g, g.num_positive());
    const PolySpace minors = minors_space(q_matrix(g, chevalley_generators(g)));
    o.require(rk.basis() == minors.basis(), std::string(type) + " bases identical");
    if (expected) o.require(rk.dim() == expected, std::string(type) + " dim");
    o.detail << " " << type << " dim " << rk.dim() << ";";
    if (std::string(type) == "A2") {
      Integer sum = 0;
      std::vector<std::string> parts;
      for (const auto& ideal : enumerate_ideals(g.roots(), g.rank())) {
        const Integer d = weyl_dimension(g.roots(), ideal.weight);
        parts.push_back(d.get_str());
        sum += d;
      }
      o.require(sum == Integer(rk.dim()), "A2 Weyl sum");
      o.detail << " A2 Weyl sum " << parts[0] << "+" << parts[1] << ";";
    }
  }
}

void criterion6(Outcome& o) {
  std::size_t checked = 0;
  for (const char* type : {"A1", "A2", "B2"}) {
    const LieAlgebra g = algebra(type);
    const KillingDual dual(g);
    const auto gens = chevalley_generators(g);
    for (std::size_t k = 0; k <= g.num_positive() && 2 * k <= g.dim(); ++k)
      for (const auto& p : rk_space(g, k).basis()) {
        ++checked;
        if (!dual.is_harmonic(p, gens)) o.require(false, std::string(type) + " R^" + std::to_string(k));
      }
    for (const auto& row : q_matrix(g, gens).entries)
      for (const auto& e : row) {
        ++checked;
        if (!dual.is_harmonic(e, gens)) o.require(false, std::string(type) + " Q entry");
      }
  }
  o.detail << " " << checked << " polynomials annihilated by every generator";
}

void criterion7(Outcome& o) {
  for (const char* type : {"A1", "A2", "B2"}) {
    cli::Verifier v(CartanType::parse(type));
    cli::VerifyOptions opts;
    opts.seed = 7;
    const cli::VerificationReport r = v.run("sheets", opts);
    for (const auto& c : r.checks) o.require(c.passed, std::string(type) + ": " + c.name + " (" + c.detail + ")");
    o.detail << " " << type << " samples";
    for (const auto& [key, value] : r.counts)
      if (key.rfind("samples stratum ", 0) == 0) {
        o.detail << " " << key.substr(16) << ":" << value;
        const bool origin = key == "samples stratum 0";
        if (!origin && value > 0) o.require(value >= 20, std::string(type) + " " + key);
      }
    o.detail << ";";
  }
}

void criterion8(Outcome& o) {
  for (const char* type : {"A1", "A2"}) {
    cli::Verifier v(CartanType::parse(type));
    cli::VerifyOptions opts;
    opts.seed = 8;
    const cli::VerificationReport r = v.run("gamma", opts);
    for (const auto& c : r.checks) o.require(c.passed, std::string(type) + ": " + c.name);
    const bool full = std::any_of(r.checks.begin(), r.checks.end(),
                                  [](const cli::Check& c) { return c.name.find("full bases") != std::string::npos; });
    const auto pairs = r.counts.at("adjointness pairs");
    if (std::string(type) == "A1") o.require(full, "A1 full bases");
    if (std::string(type) == "A2") o.require(pairs >= 200, "A2 >= 200 pairs");
    o.detail << " " << type << ": " << pairs << (full ? " pairs (full bases)" : " random pairs") << ";";
  }
  o.detail << " gamma(x^k) on 50 elements; gamma(p_i) = 0";
}

void criterion9(Outcome& o) {
  const std::vector<int> partitions{1, 2, 3, 5, 7};
  for (int l = 1; l <= 5; ++l) {
    const LieAlgebra g = algebra(("A" + std::to_string(l)).c_str());
    const IdealReport r = verify_ideal_theorems(g);
    o.require(r.passed(), "A" + std::to_string(l));
    o.require(r.ideals.size() == static_cast<std::size_t>(partitions[l - 1]), "card I(" + std::to_string(l) + ")");
    o.detail << " A" << l << ":" << r.ideals.size();
  }
  for (const char* type : {"B2", "D4"}) {
    const IdealReport r = verify_ideal_theorems(algebra(type));
    o.require(r.all_abelian && r.weights_distinct && r.weights_dominant && r.eigenvalues_equal_rank, type);
    o.detail << " " << type << ":" << r.ideals.size();
  }
  o.detail << " (all abelian, distinct dominant weights, Casimir = rank)";
}

void criterion10(Outcome& o) {
  const LieAlgebra a1 = algebra("A1"), a2 = algebra("A2");
  const WedgeCasimirReport k1 = casimir_on_wedge(a1, 1), k2 = casimir_on_wedge(a1, 2), w = casimir_on_wedge(a2, 2);
  o.require(k1.top_eigenspace_dim == 3, "A1 k=1 kernel 3");
  o.require(k2.top_eigenspace_dim == 0, "A1 k=2 kernel 0");
  o.require(w.top_eigenspace_dim == 20, "A2 k=2 kernel 20");
  o.require(w.abelian_ideals.size() == 2 && std::all_of(w.ideal_in_kernel.begin(), w.ideal_in_kernel.end(),
                                                        [](bool b) { return b; }),
            "e_Phi membership");
  o.detail << " kernels " << k1.top_eigenspace_dim << ", " << k2.top_eigenspace_dim << ", " << w.top_eigenspace_dim
           << "; e_Phi in kernel for " << w.abelian_ideals.size() << " ideals";
  // Informational tier: reported, not gating.
  const bool numeric = k1.numeric_bound_ok() && k2.numeric_bound_ok() && w.numeric_bound_ok();
  o.detail << "; numeric bound m_k <= k + 1e-9: " << (numeric ? "holds" : "VIOLATED") << " (informational)";
}

void criterion11(Outcome& o) {
  const int bound = RootSystemOptions::default_max_rank();
  std::vector<std::string> types{"D2", "D3"};
  for (int l = 1; l <= bound; ++l) {
    types.push_back("A" + std::to_string(l));
    if (l >= 2) types.push_back("B" + std::to_string(l));
    if (l >= 2) types.push_back("C" + std::to_string(l));
    if (l >= 4) types.push_back("D" + std::to_string(l));
  }
  std::size_t triples = 0;
  for (const auto& t : types) {
    const LieAlgebra g = algebra(t.c_str(), true);
    const StructureReport s = check_structure(g);
    triples += s.triples;
    o.require(s.passed(), t + " structure");
    o.require(homomorphism_failures(g, defining_rep(g)) == 0, t + " defining homomorphism");
    if (g.dim() <= 36) o.require(homomorphism_failures(g, adjoint_rep(g)) == 0, t + " adjoint homomorphism");
  }
  o.detail << " " << types.size() << " algebras up to rank " << bound << ", " << triples << " Jacobi triples";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"standard identity on M(2), M(3)", criterion1},
      {"skew-symmetric identity", criterion2},
      {"epsilon and representation identities", criterion3},
      {"matching combinatorics", criterion4},
      {"matching-sum span equals minors span", criterion5},
      {"harmonicity", criterion6},
      {"sheet variety", criterion7},
      {"gamma duality", criterion8},
      {"ideals and Casimir values", criterion9},
      {"Casimir on wedges", criterion10},
      {"structural exactness", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << static_cast<int>(secs * 1000) << " ms) --" << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures;
}
