#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "suppbound/bounds.hpp"
#include "suppbound/search.hpp"

using namespace suppbound;

namespace {

GFunc family(const std::string& name, int p) { return construct(name, p).f; }

GFunc character_on_coset(int p, int dir, Point g, Point chi, const CycNum& c) {
  FamilyParams params;
  params.directions = {dir};
  params.offsets = {g};
  params.characters = {chi};
  params.coefficients = {c};
  return construct("coset_character", p, params).f;
}

}  // namespace

TEST(Profile, IndicatorOfSubgroup) {
  const int p = 5;
  const SupportProfile prof = profile(family("subgroup", p));
  const DirectionStats& st = prof.for_direction(0);
  EXPECT_EQ(st.n_S, p);
  EXPECT_EQ(st.K_S, 1);
  EXPECT_EQ(st.n_X, p);
  EXPECT_EQ(st.K_X, 1);
}

TEST(Profile, Delta) {
  const int p = 5;
  const SupportProfile prof = profile(family("delta", p));
  EXPECT_EQ(prof.X().size(), static_cast<std::size_t>(p * p));
  for (const auto& st : prof.directions()) {
    EXPECT_EQ(st.n_S, 1);
    EXPECT_EQ(st.K_S, 1);
    EXPECT_EQ(st.n_X, p);
    EXPECT_EQ(st.K_X, p);
  }
}

TEST(Profile, Invariants) {
  std::mt19937 rng(21);
  for (int p : {3, 5}) {
    for (int i = 0; i < 40; ++i) {
      const GFunc f = oracle::random_function(rng, p, 2, 0.3);
      if (f.is_zero()) continue;
      const SupportProfile prof = profile(f);
      const auto s = static_cast<int>(prof.S().size());
      for (const auto& st : prof.directions()) {
        EXPECT_GE(st.n_S, 1);
        EXPECT_GE(st.K_S * p, s);
        EXPECT_LE(st.n_S * st.K_S, s);
        const auto counts = prof.S().line_counts(st.direction);
        EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), 0), s);
        EXPECT_LE(prof.isolated_count(st.direction), st.K_X);
        const auto kg = prof.line_counts(st.direction);
        for (int idx = 0; idx < p * p; ++idx) {
          const Point g = point_at(idx, p, Side::primal);
          EXPECT_EQ(kg[static_cast<std::size_t>(idx)],
                    static_cast<int>(prof.S().count_on(coset_of(g, subgroup(p, st.direction, Side::primal)))));
        }
      }
    }
  }
  EXPECT_THROW(profile(GFunc(3, 2, Side::primal)), std::invalid_argument);
}

TEST(Bounds, BasicEqualityOnCharacterCoset) {
  for (int p : {3, 5, 7}) {
    const GFunc f = character_on_coset(p, 1, Point{0, 2}, Point{1, 2, Side::dual}, CycNum(p, 3));
    const BoundReport r = check_basic(analyze(f));
    EXPECT_EQ(r.verdict, Verdict::equality);
    EXPECT_EQ(r.lhs, std::to_string(p * p));
    EXPECT_FALSE(r.witness);
  }
  EXPECT_THROW(check_basic(analyze(GFunc(3, 2, Side::primal))), std::invalid_argument);
}

TEST(Bounds, BiroTaoRankOne) {
  GFunc f(5, 1, Side::primal);
  f.set(0, CycNum(5, 1));
  f.set(1, CycNum(5, 1));
  const BoundReport r = check_birotao(analyze(f));
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.lhs, "7");
  EXPECT_EQ(r.rhs, "6");
  EXPECT_THROW(check_birotao(analyze(family("delta", 5))), std::invalid_argument);
}

TEST(Bounds, RationalTheoremEqualityAndPeriodicException) {
  const BoundReport eq = check_rational(analyze(family("diff_of_subgroups", 3)));
  EXPECT_EQ(eq.verdict, Verdict::equality);
  EXPECT_EQ(eq.lhs, "4");
  EXPECT_EQ(eq.rhs, "4");

  const Analysis a = analyze(family("subgroup", 5));
  const BoundReport ex = check_rational(a);
  EXPECT_EQ(ex.verdict, Verdict::exception);
  ASSERT_TRUE(ex.exception);
  EXPECT_EQ(kind_name(*ex.exception), "H-periodic");
  // sum of values is |H| != 0, so X is all of H^perp
  EXPECT_EQ(*a.X, PointSet::of_line(line(5, orthogonal_direction(0, 5), 0, Side::dual)));

  GFunc irrational = family("delta", 5);
  irrational.set(1, root_of_unity(5, 1));
  EXPECT_THROW(check_rational(analyze(irrational)), std::invalid_argument);
}

TEST(Bounds, RationalTheoremZeroSumPeriodic) {
  const int p = 5;
  FamilyParams params;
  params.directions = {2};
  const GFunc f = construct("pm_two_cosets", p, params).f;
  const Analysis a = analyze(f);
  const BoundReport r = check_rational(a);
  EXPECT_EQ(r.verdict, Verdict::exception);
  PointSet expected = PointSet::of_line(line(p, orthogonal_direction(2, p), 0, Side::dual));
  expected.erase(0);
  EXPECT_EQ(*a.X, expected);
}

TEST(Bounds, Kp1EqualityAndException) {
  for (int p : {3, 5, 7}) {
    const BoundReport r = check_kp1(analyze(family("pm_two_cosets", p)));
    EXPECT_EQ(r.verdict, Verdict::equality) << p;
    EXPECT_EQ(r.lhs, std::to_string(p + 1));
    const GFunc c = character_on_coset(p, 0, Point{1, 1}, Point{2, 1, Side::dual}, CycNum(p, -2));
    const BoundReport e = check_kp1(analyze(c));
    EXPECT_EQ(e.verdict, Verdict::exception);
    ASSERT_TRUE(e.exception);
    EXPECT_EQ(reconstruct(*e.exception), c);
  }
}

TEST(Bounds, Kp2AndUpperGray) {
  const BoundReport r = check_kp2(analyze(family("triple_subgroups", 7)));
  EXPECT_NE(r.verdict, Verdict::violated);
  const BoundReport u = check_uppergray(analyze(family("triple_subgroups", 5)));
  EXPECT_EQ(u.lhs, "144");
  EXPECT_EQ(u.rhs, "45");
  EXPECT_EQ(u.verdict, Verdict::holds);
  EXPECT_FALSE(u.advisory);
  EXPECT_TRUE(check_uppergray(analyze(family("triple_subgroups", 3))).advisory);
  EXPECT_EQ(check_uppergray(analyze(family("delta", 5))).verdict, Verdict::exception);
  EXPECT_THROW(check_uppergray(analyze(family("delta", 2))), std::invalid_argument);
}

TEST(Bounds, As2As3OnGallery) {
  for (int p : {3, 5, 7, 11}) {
    const BoundReport r2 = check_as2(analyze(family("diff_of_subgroups", p)), Rational(1, 2));
    EXPECT_EQ(r2.lhs, std::to_string(2 * (p - 1)));
    EXPECT_TRUE(r2.advisory);
    EXPECT_NE(r2.verdict, Verdict::violated);
    const BoundReport r3 = check_as3(analyze(family("triple_subgroups", p)), Rational(1, 4));
    EXPECT_EQ(r3.lhs, std::to_string(3 * (p - 1)));
    EXPECT_NE(r3.verdict, Verdict::violated);
  }
  const Analysis line_fn = analyze(family("subgroup", 5));
  EXPECT_EQ(check_as2(line_fn, Rational(1, 2)).verdict, Verdict::exception);
  EXPECT_EQ(check_as3(line_fn, Rational(1, 2)).verdict, Verdict::exception);
  EXPECT_THROW(check_as2(line_fn, Rational(0)), std::invalid_argument);
  EXPECT_THROW(check_as3(line_fn, Rational(1)), std::invalid_argument);
}

TEST(Bounds, ConjectureBasics) {
  std::mt19937 rng(23);
  for (int p : {3, 5}) {
    for (int i = 0; i < 30; ++i) {
      const GFunc f = oracle::random_function(rng, p, 2, 0.3);
      if (f.is_zero()) continue;
      const Analysis a = analyze(f);
      const BoundReport k1 = check_conjecture(a, 1);
      const BoundReport m = check_meshulam_alt(a);
      EXPECT_EQ(k1.lhs, m.lhs);
      EXPECT_EQ(k1.verdict, m.verdict);
      for (int k = 1; 2 * k < p; ++k) {
        if (check_conjecture(a, k).verdict == Verdict::holds) {
          EXPECT_EQ(check_conjecture(a, p + 1 - k).verdict, Verdict::holds);
        }
      }
    }
  }
  const Analysis a = analyze(family("delta", 3));
  EXPECT_THROW(check_conjecture(a, 0), std::invalid_argument);
  EXPECT_THROW(check_conjecture(a, 4), std::invalid_argument);
}

TEST(Bounds, RootsExactComparison) {
  const BoundReport r = check_roots(analyze(family("diff_of_subgroups", 3)));
  EXPECT_EQ(r.lhs, "sqrt(4)+sqrt(4)");
  EXPECT_EQ(r.verdict, Verdict::equality);
  EXPECT_EQ(check_roots(analyze(family("delta", 5))).verdict, Verdict::equality);
  // 1 + delta has full support on both sides
  GFunc g(5, 2, Side::primal, std::vector<CycNum>(25, CycNum(5, Rational(1))));
  g.set(0, CycNum(5, Rational(2)));
  EXPECT_EQ(check_roots(analyze(g)).verdict, Verdict::holds);
}

TEST(Bounds, LemmaSXmn) {
  std::mt19937 rng(25);
  for (int i = 0; i < 40; ++i) {
    const GFunc f = oracle::random_function(rng, 5, 2, 0.3);
    if (f.is_zero()) continue;
    const Analysis a = analyze(f);
    for (int d = 0; d <= 5; ++d) EXPECT_NE(lemma_sxmn_check(a, d).verdict, Verdict::violated);
  }
  const BoundReport r = lemma_sxmn_check(analyze(family("subgroup", 5)), 0);
  EXPECT_NE(r.verdict, Verdict::violated);
  EXPECT_THROW(lemma_sxmn_check(analyze(family("subgroup", 5)), 7), std::invalid_argument);
}

TEST(Bounds, LemmaAQ) {
  const int p = 7;
  GFunc chi(p, 1, Side::primal);
  for (int x = 0; x < p; ++x) chi.set(static_cast<std::size_t>(x), root_of_unity(p, 3 * x) * Rational(2));
  const std::vector<int> a_set{0, 1, 2, 3, 4};
  const BoundReport r = lemma_aq_check(chi, a_set);
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.lhs, "1");

  // chi on A, arbitrary off A
  GFunc h = chi;
  h.set(5, CycNum(p, 7));
  h.set(6, CycNum(p, -1));
  const BoundReport r2 = lemma_aq_check(h, a_set);
  ASSERT_NE(r2.verdict, Verdict::vacuous);
  const auto spectrum = fourier_transform(h).support_size();
  EXPECT_TRUE(spectrum == 1 || spectrum >= a_set.size());
  EXPECT_NE(r2.verdict, Verdict::violated);

  GFunc bad(p, 1, Side::primal);
  for (int x = 0; x < p; ++x) bad.set(static_cast<std::size_t>(x), CycNum(p, x + 1));
  EXPECT_EQ(lemma_aq_check(bad, a_set).verdict, Verdict::vacuous);
  EXPECT_THROW(lemma_aq_check(chi, {0, 1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(lemma_aq_check(GFunc(p, 1, Side::primal), a_set), std::invalid_argument);
}

TEST(Bounds, Sumset) {
  EXPECT_EQ(sumset_bound(5, {2}, {3}).size, 1);
  const SumsetResult r = sumset_bound(5, {0, 1}, {0, 1});
  EXPECT_EQ(r.size, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(sumset_bound(7, {0, 1, 2, 3, 4, 5, 6}, {3}).size, 7);
  EXPECT_THROW(sumset_bound(5, {}, {1}), std::invalid_argument);
  std::mt19937 rng(27);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> a, b;
    for (int x = 0; x < 11; ++x) {
      if (rng() % 3 == 0) a.push_back(x);
      if (rng() % 3 == 0) b.push_back(x);
    }
    if (a.empty() || b.empty()) continue;
    EXPECT_TRUE(sumset_bound(11, a, b).holds);
  }
}

TEST(Bounds, ShapePredicates) {
  const int p = 5;
  const PointSet h = PointSet::of_line(line(p, 1, 2, Side::primal));
  const PointSet hp = PointSet::of_line(line(p, orthogonal_direction(1, p), 3, Side::dual));
  EXPECT_TRUE(orthogonal_cosets(h, hp));
  EXPECT_FALSE(orthogonal_cosets(h, PointSet::of_line(line(p, 1, 3, Side::dual))));
  PointSet missing = h;
  missing.erase(missing.indices().front());
  const PointSet two = hp.united(PointSet::of_line(line(p, orthogonal_direction(1, p), 0, Side::dual)));
  EXPECT_TRUE(near_coset_pair(missing, two));
  EXPECT_TRUE(near_coset_pair(two, missing));
  EXPECT_FALSE(near_coset_pair(missing, PointSet::full(p, Side::dual)));
}

TEST(Bounds, Registry) {
  const Analysis a = analyze(family("diff_of_subgroups", 5));
  for (const auto& id : theorem_ids()) {
    if (id == "birotao") continue;
    CheckSpec spec;
    spec.theorem = id;
    ASSERT_TRUE(applicable(spec, a)) << id;
    EXPECT_EQ(evaluate(spec, a).theorem, id);
  }
  CheckSpec bogus;
  bogus.theorem = "nope";
  EXPECT_THROW(evaluate(bogus, a), std::invalid_argument);
  CheckSpec bt;
  bt.theorem = "birotao";
  EXPECT_FALSE(applicable(bt, a));
}

TEST(Bounds, ViolationCarriesWitness) {
  BoundReport r;
  r.verdict = Verdict::violated;
  EXPECT_TRUE(r.is_violation());
  r.advisory = true;
  EXPECT_FALSE(r.is_violation());
}
