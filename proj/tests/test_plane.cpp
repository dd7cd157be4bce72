#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "suppbound/plane.hpp"

using namespace suppbound;

namespace {

PointSet random_set(std::mt19937& rng, int p, int size) {
  std::vector<int> idx(static_cast<std::size_t>(p * p));
  for (int i = 0; i < p * p; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(static_cast<std::size_t>(size));
  return PointSet::from_indices(p, Side::primal, idx);
}

}  // namespace

TEST(Plane, SubgroupsAndOrthogonality) {
  for (int p : {2, 3, 5, 7}) {
    const auto subs = all_subgroups(p, Side::primal);
    ASSERT_EQ(subs.size(), static_cast<std::size_t>(p + 1));
    for (const auto& h : subs) {
      const LineSubgroup hp = orthogonal(h);
      EXPECT_EQ(hp.side, Side::dual);
      EXPECT_EQ(orthogonal(hp), h);
      for (const auto& g : line(p, h.direction, 0, Side::primal).members()) {
        for (const auto& chi : line(p, hp.direction, 0, Side::dual).members()) EXPECT_EQ(pairing(chi, g, p), 0);
      }
    }
  }
}

TEST(Plane, LinesPartitionThePlane) {
  for (int p : {2, 3, 5}) {
    EXPECT_EQ(all_lines(p, Side::primal).size(), static_cast<std::size_t>(p * (p + 1)));
    for (int d = 0; d <= p; ++d) {
      std::vector<int> seen(static_cast<std::size_t>(p * p), 0);
      for (const auto& c : lines_in_direction(subgroup(p, d, Side::primal))) {
        EXPECT_EQ(c.members().size(), static_cast<std::size_t>(p));
        for (const auto& pt : c.members()) {
          ++seen[static_cast<std::size_t>(point_index(pt, p))];
          EXPECT_EQ(line_label(d, pt.x, pt.y, p), c.label());
        }
        EXPECT_EQ(c.offset, c.members().front());
      }
      for (int s : seen) EXPECT_EQ(s, 1);
    }
  }
}

TEST(Plane, LinesMatchBruteEnumeration) {
  for (int p : {2, 3, 5}) {
    std::set<std::vector<int>> ours;
    for (const auto& c : all_lines(p, Side::primal)) {
      std::vector<int> idx;
      for (const auto& pt : c.members()) idx.push_back(point_index(pt, p));
      std::sort(idx.begin(), idx.end());
      ours.insert(idx);
    }
    const auto brute = oracle::brute_lines(p);
    EXPECT_EQ(ours, std::set<std::vector<int>>(brute.begin(), brute.end()));
  }
}

TEST(Plane, CosetOfRejectsMixedSides) {
  EXPECT_THROW(coset_of(Point{0, 0, Side::dual}, subgroup(3, 0, Side::primal)), std::invalid_argument);
}

TEST(Plane, PointSetOperations) {
  PointSet a(5, Side::primal);
  a.insert(Point{1, 2});
  a.insert(3);
  EXPECT_EQ(a.size(), 2u);
  a.insert(3);
  EXPECT_EQ(a.size(), 2u);
  PointSet b = PointSet::full(5, Side::primal);
  EXPECT_TRUE(a.is_subset_of(b));
  EXPECT_EQ(b.minus(a).size(), 23u);
  EXPECT_EQ(a.united(b), b);
  EXPECT_EQ(a.intersected(b), a);
  a.erase(3);
  EXPECT_EQ(a.indices(), std::vector<int>{7});
  EXPECT_THROW(a.united(PointSet(5, Side::dual)), std::invalid_argument);
  const auto counts = b.line_counts(2);
  for (int c : counts) EXPECT_EQ(c, 5);
}

TEST(Plane, DirectionsDeterminedAgreeWithBruteForce) {
  std::mt19937 rng(3);
  for (int p : {3, 5, 7}) {
    for (int i = 0; i < 300; ++i) {
      const PointSet s = random_set(rng, p, 2 + static_cast<int>(rng() % (p * p - 1)));
      EXPECT_EQ(directions_determined(s).size(), oracle::brute_directions(s.points(), p));
    }
  }
  EXPECT_THROW(directions_determined(PointSet(3, Side::primal)), std::invalid_argument);
}

TEST(Plane, BlockingSets) {
  EXPECT_EQ(min_blocking_size(2).size, 3);
  EXPECT_EQ(min_blocking_size(3).size, oracle::brute_min_blocking(3));
  EXPECT_EQ(oracle::brute_min_blocking(3), 5);
  for (int p : {2, 3, 5}) {
    const auto r = min_blocking_size(p);
    EXPECT_EQ(r.size, 2 * p - 1);
    EXPECT_TRUE(is_blocking_set(r.witness));
    EXPECT_EQ(r.witness.size(), static_cast<std::size_t>(r.size));
  }
  EXPECT_FALSE(is_blocking_set(PointSet::of_line(line(5, 1, 0, Side::primal))));
}

TEST(Plane, LineCoverAgreesWithBruteForce) {
  std::mt19937 rng(5);
  for (int p : {3, 5}) {
    for (int i = 0; i < 120; ++i) {
      const PointSet s = random_set(rng, p, 1 + static_cast<int>(rng() % 7));
      const auto ours = min_line_cover(s, 3);
      const int brute = oracle::brute_line_cover(s.indices(), p, 3);
      EXPECT_EQ(ours ? *ours : -1, brute);
      EXPECT_EQ(one_line_cover(s), brute == 1);
      EXPECT_EQ(two_line_cover(s), brute >= 1 && brute <= 2);
    }
  }
  EXPECT_EQ(min_line_cover(PointSet(3, Side::primal), 2), 0);
}

TEST(Plane, CoveringPairs) {
  const int p = 5;
  const PointSet two = PointSet::of_line(line(p, 2, 1, Side::primal)).united(PointSet::of_line(line(p, 2, 4, Side::primal)));
  const auto par = covering_parallel_pair(two);
  ASSERT_TRUE(par);
  EXPECT_EQ(par->first.subgroup.direction, 2);
  EXPECT_EQ(par->first.label(), 1);
  EXPECT_EQ(par->second.label(), 4);
  EXPECT_FALSE(covering_nonparallel_pair(two));
  const PointSet cross = PointSet::of_line(line(p, 0, 0, Side::primal)).united(PointSet::of_line(line(p, 5, 0, Side::primal)));
  const auto np = covering_nonparallel_pair(cross);
  ASSERT_TRUE(np);
  EXPECT_EQ(np->first.subgroup.direction, 0);
  EXPECT_EQ(np->second.subgroup.direction, 5);
  EXPECT_FALSE(covering_parallel_pair(cross));
}

TEST(Plane, PencilBoundOnSmallPlanes) {
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 9; ++i) {
      if ((mask >> i) & 1u) idx.push_back(i);
    }
    const PointSet s = PointSet::from_indices(3, Side::primal, idx);
    const PencilCheck c = pencil_stability_check(s);
    EXPECT_EQ(c.blocking, is_blocking_set(s));
    EXPECT_TRUE(c.bound_holds);
    if (!c.blocking) EXPECT_GE(static_cast<int>(s.size()), 2 * 3 - c.k - c.m);
  }
}

TEST(Plane, BoundedLineDirection) {
  std::mt19937 rng(9);
  const int p = 7;
  for (int i = 0; i < 300; ++i) {
    const PointSet s = random_set(rng, p, 2 + static_cast<int>(rng() % (4 * p - 1)));
    if (one_line_cover(s)) continue;
    const auto d = bounded_line_direction(s);
    ASSERT_TRUE(d);
    const auto dirs = directions_determined(s);
    EXPECT_TRUE(std::find(dirs.begin(), dirs.end(), *d) != dirs.end());
    const double n = static_cast<double>(s.size());
    for (int c : s.line_counts(*d)) EXPECT_LT(c, std::sqrt(n) + std::max(1.0, n / (2 * p)));
  }
  EXPECT_THROW(bounded_line_direction(PointSet::of_line(line(p, 0, 0, Side::primal))), std::invalid_argument);
  EXPECT_THROW(bounded_line_direction(PointSet::full(p, Side::primal)), std::invalid_argument);
}

TEST(Plane, RichDirectionPreconditions) {
  EXPECT_THROW(rich_direction_search(PointSet::full(2, Side::primal)), std::invalid_argument);
  EXPECT_THROW(rich_direction_search(PointSet::of_line(line(5, 0, 0, Side::primal))), std::invalid_argument);
  const auto d = rich_direction_search(PointSet::full(3, Side::primal));
  ASSERT_TRUE(d);
}
