#ifndef SUPPBOUND_PLANE_HPP
#define SUPPBOUND_PLANE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace suppbound {

/// Which copy of F_p^2 a point lives in: the group itself or its dual.
/// The dual point (a, b) is the character (x, y) -> z^(ax + by).
enum class Side : std::uint8_t { primal, dual };

Side opposite(Side s);
const char* to_string(Side s);

struct Point {
  int x = 0;
  int y = 0;
  Side side = Side::primal;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Row-major index x * p + y; increasing index is lexicographic (x, y) order.
inline int point_index(const Point& pt, int p) { return pt.x * p + pt.y; }
inline Point point_at(int index, int p, Side side) { return {index / p, index % p, side}; }

Point add(const Point& a, const Point& b, int p);
Point sub(const Point& a, const Point& b, int p);
Point scale(const Point& a, std::int64_t t, int p);
Point negate(const Point& a, int p);

/// <(a,b),(x,y)> = ax + by mod p.
int pairing(const Point& chi, const Point& g, int p);

/// One of the p + 1 subgroups of order p. Directions 0..p-1 are the slopes
/// (generator (1, s)); direction p is vertical (generator (0, 1)).
struct LineSubgroup {
  int p = 0;
  int direction = 0;
  Side side = Side::primal;

  Point generator() const;
  bool contains(const Point& pt) const;
  friend bool operator==(const LineSubgroup&, const LineSubgroup&) = default;
};

/// A line: the coset offset + subgroup. offset is the lexicographically least
/// member.
struct Coset {
  LineSubgroup subgroup;
  Point offset;

  bool contains(const Point& pt) const;
  /// Index of this line among the p parallel lines of its direction.
  int label() const;
  std::vector<Point> members() const;
  friend bool operator==(const Coset&, const Coset&) = default;
};

std::vector<LineSubgroup> all_subgroups(int p, Side side);
LineSubgroup subgroup(int p, int direction, Side side);
/// H^perp on the opposite side; involutive.
LineSubgroup orthogonal(const LineSubgroup& h);
int orthogonal_direction(int direction, int p);

/// Direction index of the line through two distinct points.
int direction_of(const Point& a, const Point& b, int p);
/// Label of the line in `direction` through (x, y): y - s x for slope s,
/// x for the vertical direction.
int line_label(int direction, int x, int y, int p);
Coset line(int p, int direction, int label, Side side);

std::vector<Coset> lines_in_direction(const LineSubgroup& h);
/// Throws std::invalid_argument when g and h live on different sides.
Coset coset_of(const Point& g, const LineSubgroup& h);
/// All p(p + 1) lines, ordered by (direction, label).
std::vector<Coset> all_lines(int p, Side side);

/// A subset of the p^2 points of one side, stored as a bitmap.
class PointSet {
 public:
  PointSet(int p, Side side);
  static PointSet from_points(int p, Side side, std::span<const Point> pts);
  static PointSet from_indices(int p, Side side, std::span<const int> indices);
  static PointSet full(int p, Side side);
  static PointSet of_line(const Coset& c);

  int p() const { return p_; }
  Side side() const { return side_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int index) const;
  bool contains(const Point& pt) const { return contains(point_index(pt, p_)); }
  void insert(int index);
  void insert(const Point& pt) { insert(point_index(pt, p_)); }
  void erase(int index);

  /// Sorted increasing.
  std::vector<int> indices() const;
  std::vector<Point> points() const;

  /// Number of points on each of the p lines of `direction`, by label.
  std::vector<int> line_counts(int direction) const;
  std::size_t count_on(const Coset& c) const;

  PointSet united(const PointSet& o) const;
  PointSet intersected(const PointSet& o) const;
  PointSet minus(const PointSet& o) const;
  bool is_subset_of(const PointSet& o) const;

  friend bool operator==(const PointSet& a, const PointSet& b);

 private:
  void check_compatible(const PointSet& o) const;

  int p_;
  Side side_;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

/// Sorted direction indices of lines through two distinct points of P.
/// Throws std::invalid_argument when |P| < 2.
std::vector<int> directions_determined(const PointSet& pts);

bool is_blocking_set(const PointSet& pts);

struct BlockingResult {
  int size = 0;
  PointSet witness;
};

/// Exact minimum size of a blocking set of the affine plane over F_p, with a
/// witness. Branch and bound over hitting sets, branching on the unblocked
/// line with the fewest admissible points.
BlockingResult min_blocking_size(int p);

struct PencilCheck {
  bool blocking = false;
  int k = 0;      ///< directions containing an unblocked line
  int m = 0;      ///< most unblocked lines in one such direction
  int bound = 0;  ///< 2p - k - m, or 2p - 1 when P is blocking
  bool bound_holds = false;
};

/// Stability version of the blocking-set bound, with the minimal (k, m).
PencilCheck pencil_stability_check(const PointSet& pts);

/// A direction determined by P whose lines all carry fewer than
/// sqrt(|P|) + max(1, |P|/(2p)) points of P, or nullopt if none exists.
/// Requires 2 <= |P| <= 4p and P not on a single line.
std::optional<int> bounded_line_direction(const PointSet& pts);

/// A direction with a line holding >= 3 points of P whose lines all hold at
/// most (p + 5)/2 points. Requires p >= 3, (3p + 7)/2 <= |P| <= 2p + 7 and
/// P not covered by two lines.
std::optional<int> rich_direction_search(const PointSet& pts);

/// The line containing P (least direction when |P| <= 1), if any.
std::optional<Coset> covering_line(const PointSet& pts);
bool one_line_cover(const PointSet& pts);

struct LinePair {
  Coset first;
  Coset second;
};

/// Two distinct parallel lines covering P (least direction first).
std::optional<LinePair> covering_parallel_pair(const PointSet& pts);
/// Two nonparallel lines covering P, first line least in (direction, label).
std::optional<LinePair> covering_nonparallel_pair(const PointSet& pts);
bool two_line_cover(const PointSet& pts);

/// Fewest lines whose union contains P, if that number is at most `limit`.
std::optional<int> min_line_cover(const PointSet& pts, int limit);

}  // namespace suppbound

#endif  // SUPPBOUND_PLANE_HPP
