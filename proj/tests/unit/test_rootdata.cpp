#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <string>

#include "sheetcalc/errors.hpp"
#include "sheetcalc/rootdata.hpp"

namespace sheetcalc {
namespace {

std::vector<CartanType> supported_types() {
  std::vector<CartanType> out;
  for (int l = 1; l <= 6; ++l) out.push_back({Family::A, l});
  for (int l = 2; l <= 6; ++l) out.push_back({Family::B, l});
  for (int l = 2; l <= 6; ++l) out.push_back({Family::C, l});
  for (int l = 4; l <= 6; ++l) out.push_back({Family::D, l});
  return out;
}

TEST(CartanType, ParsesAndNames) {
  EXPECT_EQ(CartanType::parse("A2"), (CartanType{Family::A, 2}));
  EXPECT_EQ(CartanType::parse("b3"), (CartanType{Family::B, 3}));
  EXPECT_EQ(CartanType::parse("D4").name(), "D4");
  for (const char* bad : {"", "E6", "A", "A0", "Ax", "2A"}) EXPECT_THROW(CartanType::parse(bad), ConfigError) << bad;
}

TEST(RootSystem, SmallExamples) {
  const RootSystem a1 = build_root_system({Family::A, 1});
  EXPECT_EQ(a1.num_positive(), 1U);
  EXPECT_EQ(a1.exponents(), std::vector<int>{1});

  const RootSystem a2 = build_root_system({Family::A, 2});
  EXPECT_EQ(a2.num_positive(), 3U);
  std::set<Root> roots(a2.positive_roots().begin(), a2.positive_roots().end());
  EXPECT_EQ(roots, (std::set<Root>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(a2.exponents(), (std::vector<int>{1, 2}));

  const RootSystem b2 = build_root_system({Family::B, 2});
  EXPECT_EQ(b2.num_positive(), 4U);
  EXPECT_EQ(b2.exponents(), (std::vector<int>{1, 3}));

  EXPECT_EQ(exponents({Family::D, 4}), (std::vector<int>{1, 3, 3, 5}));
}

TEST(RootSystem, ExponentSumEqualsPositiveRootCount) {
  for (const auto& t : supported_types()) {
    const RootSystem rs = build_root_system(t);
    int sum = 0;
    for (int m : rs.exponents()) sum += m;
    EXPECT_EQ(sum, static_cast<int>(rs.num_positive())) << t.name();
    EXPECT_EQ(rs.exponents().size(), rs.rank()) << t.name();
  }
}

TEST(RootSystem, ClosedFormCounts) {
  for (const auto& t : supported_types()) {
    const auto l = static_cast<std::size_t>(t.rank);
    std::size_t expected = 0;
    switch (t.family) {
      case Family::A: expected = l * (l + 1) / 2; break;
      case Family::B:
      case Family::C: expected = l * l; break;
      case Family::D: expected = l * (l - 1); break;
    }
    EXPECT_EQ(build_root_system(t).num_positive(), expected) << t.name();
    EXPECT_EQ(positive_root_count(t), expected) << t.name();
  }
}

TEST(RootSystem, TypeARootsAreIntervals) {
  // Independent oracle: the positive roots of A_l are e_i - e_j, i.e. the
  // coefficient vectors with a single contiguous run of ones.
  for (int l = 1; l <= 6; ++l) {
    std::set<Root> intervals;
    for (int i = 0; i < l; ++i)
      for (int j = i; j < l; ++j) {
        Root r(l, 0);
        for (int k = i; k <= j; ++k) r[k] = 1;
        intervals.insert(r);
      }
    const RootSystem rs = build_root_system({Family::A, l});
    EXPECT_EQ(std::set<Root>(rs.positive_roots().begin(), rs.positive_roots().end()), intervals);
  }
}

TEST(RootSystem, OrderHeightAndSimpleRoots) {
  for (const auto& t : supported_types()) {
    const RootSystem rs = build_root_system(t);
    std::set<Root> height_one;
    for (std::size_t i = 0; i < rs.num_positive(); ++i) {
      const Root& r = rs.positive_root(i);
      int h = 0;
      for (int c : r) {
        EXPECT_GE(c, 0);
        h += c;
      }
      EXPECT_EQ(rs.height(i), h);
      if (i > 0) EXPECT_LE(rs.height(i - 1), h);
      if (h == 1) height_one.insert(r);
      EXPECT_EQ(rs.index_of(r), i);
    }
    const auto simple = rs.simple_roots();
    EXPECT_EQ(height_one, std::set<Root>(simple.begin(), simple.end())) << t.name();
    // The highest root is last and strictly highest.
    const auto top = rs.highest_root();
    for (std::size_t i = 0; i < top; ++i) EXPECT_LT(rs.height(i), rs.height(top));
  }
}

TEST(RootSystem, SumTableIsSymmetricAndCorrect) {
  for (const auto& t : supported_types()) {
    const RootSystem rs = build_root_system(t);
    for (std::size_t i = 0; i < rs.num_positive(); ++i)
      for (std::size_t j = 0; j < rs.num_positive(); ++j) {
        EXPECT_EQ(rs.sum_index(i, j), rs.sum_index(j, i));
        const Root s = rs.positive_root(i) + rs.positive_root(j);
        EXPECT_EQ(rs.sum_index(i, j), rs.index_of(s));
        EXPECT_EQ(rs.sum_index(i, j).has_value(), rs.is_root(s));
      }
  }
}

TEST(RootSystem, CartanMatrixAndForm) {
  const RootSystem b2 = build_root_system({Family::B, 2});
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(b2.cartan(i, i), 2);
  // One off-diagonal entry is -2, the other -1.
  EXPECT_EQ(b2.cartan(0, 1) * b2.cartan(1, 0), 2);
  for (const auto& t : supported_types()) {
    const RootSystem rs = build_root_system(t);
    const auto simple = rs.simple_roots();
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j) {
        EXPECT_EQ(rs.coroot_pairing(simple[j], i), rs.cartan(i, j));
        EXPECT_EQ(rs.form(simple[i], simple[j]), rs.form(simple[j], simple[i]));
        // <alpha_j, alpha_i^vee> = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)
        EXPECT_EQ(Rational(2) * rs.form(simple[j], simple[i]) / rs.form(simple[i], simple[i]), rs.cartan(i, j));
      }
  }
}

TEST(RootSystem, TwoRhoPairsToTwoWithEverySimpleCoroot) {
  for (const auto& t : supported_types()) {
    const RootSystem rs = build_root_system(t);
    const Root two_rho = rs.two_rho();
    for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.coroot_pairing(two_rho, i), 2) << t.name();
  }
}

TEST(RootSystem, RejectsUnsupportedRanks) {
  EXPECT_THROW(build_root_system({Family::B, 1}), ConfigError);
  EXPECT_THROW(build_root_system({Family::C, 1}), ConfigError);
  EXPECT_THROW(build_root_system({Family::D, 2}), ConfigError);
  EXPECT_THROW(build_root_system({Family::D, 3}), ConfigError);
  RootSystemOptions low;
  low.allow_low_rank_d = true;
  EXPECT_EQ(build_root_system({Family::D, 2}, low).num_positive(), 2U);
  EXPECT_EQ(build_root_system({Family::D, 3}, low).num_positive(), 6U);

  RootSystemOptions tight;
  tight.max_rank = 3;
  try {
    build_root_system({Family::A, 4}, tight);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
}

TEST(RootSystem, MaxRankHonoursEnvironment) {
  ::setenv("SHEETCALC_MAX_RANK", "8", 1);
  EXPECT_EQ(RootSystemOptions::default_max_rank(), 8);
  ::unsetenv("SHEETCALC_MAX_RANK");
  EXPECT_EQ(RootSystemOptions::default_max_rank(), 6);
}

}  // namespace
}  // namespace sheetcalc
