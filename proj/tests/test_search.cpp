#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "suppbound/search.hpp"

using namespace suppbound;

TEST(Gallery, PaperSizes) {
  for (int p : {3, 5, 7}) {
    for (const auto& name : family_names()) {
      const GalleryItem item = construct(name, p);
      if (!item.expected) continue;
      const auto num = oracle::dft(item.f);
      EXPECT_EQ(static_cast<int>(item.f.support_size()), item.expected->first) << name << " p=" << p;
      EXPECT_EQ(static_cast<int>(oracle::numeric_support(num)), item.expected->second) << name << " p=" << p;
    }
  }
  EXPECT_EQ(construct("diff_of_subgroups", 7).expected, std::make_pair(12, 12));
  EXPECT_EQ(construct("pm_two_cosets", 5).expected, std::make_pair(10, 4));
  EXPECT_EQ(construct("triple_subgroups", 5).expected, std::make_pair(12, 12));
}

TEST(Gallery, DegenerateParameters) {
  FamilyParams same;
  same.directions = {1, 1};
  EXPECT_THROW(construct("diff_of_subgroups", 5, same), std::invalid_argument);
  FamilyParams coset;
  coset.offsets = {Point{0, 0}, Point{3, 0}};
  EXPECT_THROW(construct("pm_two_cosets", 5, coset), std::invalid_argument);
  FamilyParams zero;
  zero.coefficients = {CycNum(5)};
  EXPECT_THROW(construct("coset_character", 5, zero), std::invalid_argument);
  EXPECT_THROW(construct("nope", 5), std::invalid_argument);
  EXPECT_THROW(construct("delta", 4), std::invalid_argument);
}

TEST(Gallery, ExtremalOneDimensional) {
  for (int p : {2, 3, 5, 7}) {
    for (int m = 1; m <= p; ++m) {
      const GFunc u = extremal_1d(p, m);
      EXPECT_EQ(static_cast<int>(u.support_size()), m);
      EXPECT_EQ(static_cast<int>(oracle::numeric_support(oracle::dft(u))), p + 1 - m);
    }
  }
}

TEST(Gallery, TensorLandsOnYellowDots) {
  for (int p : {3, 5}) {
    const auto dots = yellow_dots(p);
    for (int m = 1; m <= p; ++m) {
      for (int n = 1; n <= p; ++n) {
        FamilyParams params;
        params.m = m;
        params.n = n;
        const GalleryItem item = construct("tensor_extremal", p, params);
        const std::pair<int, int> got{static_cast<int>(item.f.support_size()),
                                      static_cast<int>(fourier_transform(item.f).support_size())};
        EXPECT_EQ(got, *item.expected);
        EXPECT_TRUE(dots.count(got));
      }
    }
  }
  EXPECT_TRUE(yellow_dots(3).count({3, 3}));
}

TEST(Space, SizesAndCeiling) {
  SearchSpace s;
  s.p = 3;
  s.alphabet = integer_alphabet(3, -1, 1);
  EXPECT_EQ(s.size(), 19683u);
  s.twist_characters = true;
  EXPECT_EQ(s.size(), 19683u * 9);
  s.p = 5;
  s.alphabet = integer_alphabet(5, -1, 1);
  s.twist_characters = false;
  EXPECT_THROW(s.size(), CeilingExceeded);
  s.alphabet.clear();
  EXPECT_THROW(s.size(), std::invalid_argument);
}

TEST(Space, CeilingOverride) {
  SearchSpace s;
  s.p = 3;
  s.alphabet = integer_alphabet(3, 0, 1);
  ::setenv("SUPPBOUND_CEILING", "100", 1);
  EXPECT_THROW(s.size(), CeilingExceeded);
  ::unsetenv("SUPPBOUND_CEILING");
  EXPECT_EQ(s.size(), 512u);
}

TEST(Space, LexicographicOrder) {
  SearchSpace s;
  s.p = 2;
  s.alphabet = integer_alphabet(2, 0, 2);
  EXPECT_EQ(s.candidate(0), GFunc(2, 2, Side::primal));
  const GFunc one = s.candidate(1);
  EXPECT_EQ(one[3], CycNum(2, 1));
  EXPECT_TRUE(one[0].is_zero());
  const GFunc big = s.candidate(27);
  EXPECT_EQ(big[0], CycNum(2, 1));
}

TEST(Sweep, DeterministicAcrossJobs) {
  SearchSpace s;
  s.p = 3;
  s.alphabet = integer_alphabet(3, 0, 1);
  std::vector<CheckSpec> checks(3);
  checks[0].theorem = "basic";
  checks[1].theorem = "kp1";
  checks[2].theorem = "conjecture";
  const SweepSummary a = sweep(s, checks, 1);
  const SweepSummary b = sweep(s, checks, 3);
  ASSERT_EQ(a.tallies.size(), b.tallies.size());
  for (std::size_t i = 0; i < a.tallies.size(); ++i) {
    EXPECT_EQ(a.tallies[i].verdicts, b.tallies[i].verdicts);
    EXPECT_EQ(a.tallies[i].first_equality, b.tallies[i].first_equality);
    EXPECT_EQ(a.tallies[i].exception_kinds, b.tallies[i].exception_kinds);
  }
  EXPECT_EQ(a.zero_functions, 1u);
  EXPECT_EQ(a.total_violations(), 0u);
}

TEST(Sweep, RandomModeReproducible) {
  SearchSpace s;
  s.p = 5;
  s.alphabet = integer_alphabet(5, -2, 2);
  s.mode = SearchSpace::Mode::random;
  s.seed = 42;
  s.budget = 200;
  std::vector<CheckSpec> checks(1);
  checks[0].theorem = "meshulam_alt";
  const SweepSummary a = sweep(s, checks, 1);
  const SweepSummary b = sweep(s, checks, 2);
  EXPECT_EQ(a.tallies[0].verdicts, b.tallies[0].verdicts);
  EXPECT_EQ(s.candidate(17), s.candidate(17));
  SearchSpace t = s;
  t.seed = 43;
  EXPECT_NE(s.candidate(17), t.candidate(17));
  std::vector<CheckSpec> unknown(1);
  unknown[0].theorem = "nope";
  EXPECT_THROW(sweep(s, unknown), std::invalid_argument);
}

TEST(Frontier, SmallSpace) {
  SearchSpace s;
  s.p = 3;
  s.alphabet = integer_alphabet(3, 0, 1);
  const FrontierMap m = frontier(s, 2);
  EXPECT_TRUE(m.attained.count({3, 3}));
  EXPECT_TRUE(m.attained.count({1, 9}));
  for (const auto& [key, f] : m.attained) {
    EXPECT_EQ(static_cast<int>(f.support_size()), key.first);
    EXPECT_EQ(static_cast<int>(oracle::numeric_support(oracle::dft(f))), key.second);
    EXPECT_GE(key.first * key.second, 9);
  }
  EXPECT_EQ(frontier(s, 1).attained, m.attained);
}

TEST(Hunt, NoViolations) {
  SearchSpace s;
  s.p = 3;
  s.alphabet = integer_alphabet(3, -1, 1);
  CheckSpec basic;
  basic.theorem = "basic";
  const HuntResult b = hunt(basic, s, 2);
  EXPECT_FALSE(b.first_violation);
  EXPECT_EQ(b.examined, 19682u);
  CheckSpec roots;
  roots.theorem = "roots";
  const HuntResult r = hunt(roots, s, 1);
  EXPECT_FALSE(r.first_violation);
  for (const auto& ex : r.escaped_examples) {
    ASSERT_TRUE(ex.witness);
    const Analysis a = analyze(*ex.witness);
    EXPECT_TRUE(one_line_cover(*a.S) || one_line_cover(*a.X));
    EXPECT_EQ(compare_sqrt_sum(static_cast<long>(a.s_size), static_cast<long>(a.x_size), 4), -1);
  }
}
