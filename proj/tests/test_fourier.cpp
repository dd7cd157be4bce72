#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "suppbound/fourier.hpp"

using namespace suppbound;

namespace {

Point rand_point(std::mt19937& rng, int p, Side side) {
  return {static_cast<int>(rng() % p), static_cast<int>(rng() % p), side};
}

}  // namespace

TEST(Fourier, IndicatorOfSubgroup) {
  for (int p : {2, 3, 5, 7}) {
    for (int d = 0; d <= p; ++d) {
      const LineSubgroup h = subgroup(p, d, Side::primal);
      const GFunc hat = fourier_transform(indicator(line(p, d, 0, Side::primal)));
      GFunc expected = indicator(line(p, orthogonal(h).direction, 0, Side::dual));
      expected *= Rational(1, p);
      EXPECT_EQ(hat, expected);
    }
  }
}

TEST(Fourier, DeltaIsFlat) {
  GFunc delta(5, 2, Side::primal);
  delta.set(0, CycNum(5, 1));
  const GFunc hat = fourier_transform(delta);
  for (std::size_t i = 0; i < hat.size(); ++i) EXPECT_EQ(hat[i], CycNum(5, Rational(1, 25)));
}

TEST(Fourier, RankOneExample) {
  GFunc f(5, 1, Side::primal);
  f.set(0, CycNum(5, 1));
  f.set(1, CycNum(5, 1));
  const GFunc hat = fourier_transform(f);
  EXPECT_EQ(hat.support_size(), 5u);
  for (int a = 0; a < 5; ++a) {
    EXPECT_EQ(hat[static_cast<std::size_t>(a)], (CycNum(5, 1) + root_of_unity(5, -a)) * Rational(1, 5));
  }
}

TEST(Fourier, AgreesWithFloatingPointDft) {
  std::mt19937 rng(1);
  for (int p : {2, 3, 5, 7}) {
    for (int rank : {1, 2}) {
      for (int i = 0; i < 20; ++i) {
        const GFunc f = oracle::random_function(rng, p, rank, 0.4);
        const GFunc hat = fourier_transform(f);
        const auto num = oracle::dft(f);
        for (std::size_t c = 0; c < hat.size(); ++c) ASSERT_LT(std::abs(oracle::numeric(hat[c]) - num[c]), 1e-9);
        EXPECT_EQ(hat.support_size(), oracle::numeric_support(num));
      }
    }
  }
}

TEST(Fourier, InversionRoundTrip) {
  std::mt19937 rng(2);
  for (int p : {2, 3, 5, 7}) {
    for (int rank : {1, 2}) {
      const GFunc f = oracle::random_function(rng, p, rank, 0.5);
      EXPECT_EQ(inverse_transform(fourier_transform(f)), f);
    }
  }
  EXPECT_THROW(fourier_transform(GFunc(3, 2, Side::dual)), std::invalid_argument);
  EXPECT_THROW(inverse_transform(GFunc(3, 2, Side::primal)), std::invalid_argument);
}

TEST(Fourier, ConvolutionTheorems) {
  std::mt19937 rng(4);
  for (int p : {3, 5}) {
    for (int rank : {1, 2}) {
      const GFunc f1 = oracle::random_function(rng, p, rank, 0.5);
      const GFunc f2 = oracle::random_function(rng, p, rank, 0.5);
      EXPECT_EQ(fourier_transform(convolution(f1, f2)), pointwise_product(fourier_transform(f1), fourier_transform(f2)));
      EXPECT_EQ(fourier_transform(pointwise_product(f1, f2)),
                dual_convolution(fourier_transform(f1), fourier_transform(f2)));
    }
  }
}

TEST(Fourier, CosetRestrictionAndPsiIdentity) {
  std::mt19937 rng(6);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 15; ++i) {
      const GFunc f = oracle::random_function(rng, p, 2, 0.5);
      const Point g = rand_point(rng, p, Side::primal);
      const LineSubgroup h = subgroup(p, static_cast<int>(rng() % (p + 1)), Side::primal);
      const Point chi = rand_point(rng, p, Side::dual);
      const GFunc restricted = pointwise_product(f, indicator(coset_of(g, h)));
      EXPECT_EQ(coset_restriction_transform(f, g, h), fourier_transform(restricted));
      EXPECT_EQ(coset_restriction_transform_from(fourier_transform(f), g, h), fourier_transform(restricted));
      EXPECT_TRUE(psi_identity_check(f, g, h, chi));
      const PsiSides s = psi_identity_sides(f, fourier_transform(f), g, h, chi);
      EXPECT_EQ(s.spectral, s.spatial);
    }
  }
}

TEST(Fourier, RestrictionToCoset) {
  const int p = 5;
  std::mt19937 rng(8);
  const GFunc f = oracle::random_function(rng, p, 2, 0.8);
  const LineSubgroup h = subgroup(p, 3, Side::primal);
  const Point g{2, 1, Side::primal};
  const GFunc r = restriction_to_coset_1d(f, g, h);
  ASSERT_EQ(r.rank(), 1);
  for (int t = 0; t < p; ++t) EXPECT_EQ(r[static_cast<std::size_t>(t)], f.at(add(g, scale(h.generator(), t, p), p)));
}

TEST(Fourier, GaloisEquivarianceForRationalFunctions) {
  std::mt19937 rng(10);
  for (int p : {3, 5, 7}) {
    for (int i = 0; i < 10; ++i) {
      const GFunc f = oracle::random_function(rng, p, 2, 0.5, true);
      const GaloisClosure c = rational_support_closure_check(f);
      EXPECT_TRUE(c.equivariant);
      EXPECT_TRUE(c.union_of_lines);
      const GFunc hat = fourier_transform(f);
      for (int j = 1; j < p; ++j) {
        for (int idx = 0; idx < p * p; ++idx) {
          const Point chi = point_at(idx, p, Side::dual);
          ASSERT_EQ(hat.at(scale(chi, j, p)), galois_apply(hat.at(chi), j));
        }
      }
    }
  }
  GFunc irrational(5, 2, Side::primal);
  irrational.set(0, root_of_unity(5, 1));
  EXPECT_THROW(rational_support_closure_check(irrational), std::invalid_argument);
}

TEST(Fourier, GaloisTwistIsPointwise) {
  std::mt19937 rng(12);
  const GFunc f = oracle::random_function(rng, 5, 2, 0.6);
  const GFunc t = galois_twist(f, 3);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(t[i], galois_apply(f[i], 3));
}

TEST(Fourier, ProofTraceTransforms) {
  std::mt19937 rng(14);
  for (int p : {3, 5}) {
    for (int i = 0; i < 4; ++i) {
      const GFunc f = oracle::random_function(rng, p, 2, 0.5);
      const GFunc hat = fourier_transform(f);
      const LineSubgroup h = subgroup(p, static_cast<int>(rng() % (p + 1)), Side::primal);
      const Point g = rand_point(rng, p, Side::primal), g0 = rand_point(rng, p, Side::primal);
      const Point gamma = rand_point(rng, p, Side::primal);
      EXPECT_EQ(fourier_transform(proof_trace_delta(f, h, g, g0)), delta_transform_formula(hat, h, g, g0));
      EXPECT_EQ(fourier_transform(proof_trace_F(f, h, gamma, g)), F_transform_formula(hat, h, gamma, g));
      const Point g1 = rand_point(rng, p, Side::primal), g2 = rand_point(rng, p, Side::primal);
      const Point g3 = rand_point(rng, p, Side::primal);
      const Point g4 = sub(add(g1, g2, p), g3, p);
      EXPECT_EQ(fourier_transform(proof_trace_delta4(f, h, gamma, g1, g2, g3, g4)),
                delta4_transform_formula(hat, h, gamma, g1, g2, g3, g4));
      EXPECT_THROW(proof_trace_delta4(f, h, gamma, g1, g2, g3, add(g4, Point{1, 0}, p)), std::invalid_argument);
    }
  }
}

TEST(Fourier, CharacterFunctionTransformIsDelta) {
  const Point chi{2, 3, Side::dual};
  const GFunc hat = fourier_transform(character_function(chi, 5));
  EXPECT_EQ(hat.support_size(), 1u);
  EXPECT_EQ(hat.at(chi), CycNum(5, 1));
}
