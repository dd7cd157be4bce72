#include "suppbound/plane.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "suppbound/cyclotomic.hpp"
#include "suppbound/rational.hpp"

namespace suppbound {

namespace {

int inverse_mod(int a, int p) {
  // a^(p-2) mod p
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

}  // namespace

Side opposite(Side s) { return s == Side::primal ? Side::dual : Side::primal; }

const char* to_string(Side s) { return s == Side::primal ? "primal" : "dual"; }

Point add(const Point& a, const Point& b, int p) { return {(a.x + b.x) % p, (a.y + b.y) % p, a.side}; }

Point sub(const Point& a, const Point& b, int p) { return {mod(a.x - b.x, p), mod(a.y - b.y, p), a.side}; }

Point scale(const Point& a, std::int64_t t, int p) { return {mod(a.x * t, p), mod(a.y * t, p), a.side}; }

Point negate(const Point& a, int p) { return {mod(-a.x, p), mod(-a.y, p), a.side}; }

int pairing(const Point& chi, const Point& g, int p) {
  return mod(static_cast<std::int64_t>(chi.x) * g.x + static_cast<std::int64_t>(chi.y) * g.y, p);
}

Point LineSubgroup::generator() const {
  if (direction == p) return {0, 1, side};
  return {1, direction, side};
}

bool LineSubgroup::contains(const Point& pt) const { return line_label(direction, pt.x, pt.y, p) == 0; }

bool Coset::contains(const Point& pt) const {
  return line_label(subgroup.direction, pt.x, pt.y, subgroup.p) == label();
}

int Coset::label() const { return line_label(subgroup.direction, offset.x, offset.y, subgroup.p); }

std::vector<Point> Coset::members() const {
  std::vector<Point> out;
  const int p = subgroup.p;
  const Point gen = subgroup.generator();
  out.reserve(static_cast<std::size_t>(p));
  for (int t = 0; t < p; ++t) out.push_back(add(offset, scale(gen, t, p), p));
  std::sort(out.begin(), out.end(), [p](const Point& a, const Point& b) {
    return point_index(a, p) < point_index(b, p);
  });
  return out;
}

LineSubgroup subgroup(int p, int direction, Side side) {
  if (direction < 0 || direction > p) {
    throw std::invalid_argument("direction index out of range: " + std::to_string(direction));
  }
  return {p, direction, side};
}

std::vector<LineSubgroup> all_subgroups(int p, Side side) {
  require_prime(p);
  std::vector<LineSubgroup> out;
  for (int d = 0; d <= p; ++d) out.push_back({p, d, side});
  return out;
}

int orthogonal_direction(int direction, int p) {
  if (direction == 0) return p;
  if (direction == p) return 0;
  return mod(-inverse_mod(direction, p), p);
}

LineSubgroup orthogonal(const LineSubgroup& h) {
  return {h.p, orthogonal_direction(h.direction, h.p), opposite(h.side)};
}

int direction_of(const Point& a, const Point& b, int p) {
  const int dx = mod(b.x - a.x, p);
  const int dy = mod(b.y - a.y, p);
  if (dx == 0 && dy == 0) throw std::invalid_argument("direction of coincident points");
  if (dx == 0) return p;
  return static_cast<int>(static_cast<std::int64_t>(dy) * inverse_mod(dx, p) % p);
}

int line_label(int direction, int x, int y, int p) {
  if (direction == p) return x;
  return mod(y - static_cast<std::int64_t>(direction) * x, p);
}

Coset line(int p, int direction, int label, Side side) {
  const LineSubgroup h = subgroup(p, direction, side);
  const Point offset = direction == p ? Point{label, 0, side} : Point{0, label, side};
  return {h, offset};
}

std::vector<Coset> lines_in_direction(const LineSubgroup& h) {
  std::vector<Coset> out;
  for (int c = 0; c < h.p; ++c) out.push_back(line(h.p, h.direction, c, h.side));
  return out;
}

Coset coset_of(const Point& g, const LineSubgroup& h) {
  if (g.side != h.side) throw std::invalid_argument("point and subgroup live on different sides");
  return line(h.p, h.direction, line_label(h.direction, g.x, g.y, h.p), h.side);
}

std::vector<Coset> all_lines(int p, Side side) {
  std::vector<Coset> out;
  for (int d = 0; d <= p; ++d) {
    for (int c = 0; c < p; ++c) out.push_back(line(p, d, c, side));
  }
  return out;
}

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(int p, Side side) : p_(p), side_(side) {
  require_prime(p);
  words_.assign((static_cast<std::size_t>(p) * p + 63) / 64, 0);
}

PointSet PointSet::from_points(int p, Side side, std::span<const Point> pts) {
  PointSet s(p, side);
  for (const auto& pt : pts) {
    if (pt.x < 0 || pt.x >= p || pt.y < 0 || pt.y >= p) {
      throw std::invalid_argument("point coordinates must lie in [0, p)");
    }
    s.insert(pt);
  }
  return s;
}

PointSet PointSet::from_indices(int p, Side side, std::span<const int> indices) {
  PointSet s(p, side);
  for (int i : indices) s.insert(i);
  return s;
}

PointSet PointSet::full(int p, Side side) {
  PointSet s(p, side);
  for (int i = 0; i < p * p; ++i) s.insert(i);
  return s;
}

PointSet PointSet::of_line(const Coset& c) {
  PointSet s(c.subgroup.p, c.subgroup.side);
  for (const auto& pt : c.members()) s.insert(pt);
  return s;
}

bool PointSet::contains(int index) const {
  return (words_[static_cast<std::size_t>(index) / 64] >> (index % 64)) & 1U;
}

void PointSet::insert(int index) {
  if (index < 0 || index >= p_ * p_) throw std::out_of_range("point index out of range");
  auto& w = words_[static_cast<std::size_t>(index) / 64];
  const std::uint64_t bit = std::uint64_t{1} << (index % 64);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void PointSet::erase(int index) {
  auto& w = words_[static_cast<std::size_t>(index) / 64];
  const std::uint64_t bit = std::uint64_t{1} << (index % 64);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

std::vector<int> PointSet::indices() const {
  std::vector<int> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  for (int i : indices()) out.push_back(point_at(i, p_, side_));
  return out;
}

std::vector<int> PointSet::line_counts(int direction) const {
  std::vector<int> counts(static_cast<std::size_t>(p_), 0);
  for (int i : indices()) {
    ++counts[static_cast<std::size_t>(line_label(direction, i / p_, i % p_, p_))];
  }
  return counts;
}

std::size_t PointSet::count_on(const Coset& c) const {
  std::size_t n = 0;
  for (const auto& pt : c.members()) n += contains(pt) ? 1 : 0;
  return n;
}

void PointSet::check_compatible(const PointSet& o) const {
  if (o.p_ != p_ || o.side_ != side_) throw std::invalid_argument("point sets from different planes");
}

PointSet PointSet::united(const PointSet& o) const {
  check_compatible(o);
  PointSet r = *this;
  r.count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] |= o.words_[w];
    r.count_ += static_cast<std::size_t>(std::popcount(r.words_[w]));
  }
  return r;
}

PointSet PointSet::intersected(const PointSet& o) const {
  check_compatible(o);
  PointSet r = *this;
  r.count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] &= o.words_[w];
    r.count_ += static_cast<std::size_t>(std::popcount(r.words_[w]));
  }
  return r;
}

PointSet PointSet::minus(const PointSet& o) const {
  check_compatible(o);
  PointSet r = *this;
  r.count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] &= ~o.words_[w];
    r.count_ += static_cast<std::size_t>(std::popcount(r.words_[w]));
  }
  return r;
}

bool PointSet::is_subset_of(const PointSet& o) const { return minus(o).empty(); }

bool operator==(const PointSet& a, const PointSet& b) {
  return a.p_ == b.p_ && a.side_ == b.side_ && a.words_ == b.words_;
}

// ---------------------------------------------------------------- geometry

std::vector<int> directions_determined(const PointSet& pts) {
  if (pts.size() < 2) throw std::invalid_argument("directions_determined needs at least two points");
  const int p = pts.p();
  const auto members = pts.points();
  std::vector<bool> seen(static_cast<std::size_t>(p + 1), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      seen[static_cast<std::size_t>(direction_of(members[i], members[j], p))] = true;
    }
  }
  std::vector<int> out;
  for (int d = 0; d <= p; ++d) {
    if (seen[static_cast<std::size_t>(d)]) out.push_back(d);
  }
  return out;
}

bool is_blocking_set(const PointSet& pts) {
  for (int d = 0; d <= pts.p(); ++d) {
    const auto counts = pts.line_counts(d);
    if (std::find(counts.begin(), counts.end(), 0) != counts.end()) return false;
  }
  return true;
}

namespace {

class BlockingSearch {
 public:
  explicit BlockingSearch(int p)
      : p_(p),
        hits_(static_cast<std::size_t>(p * (p + 1)), 0),
        excluded_(static_cast<std::size_t>(p * p), false),
        chosen_(p, Side::primal),
        best_set_(p, Side::primal) {}

  BlockingResult run() {
    // Incumbent: two nonparallel lines through the origin.
    for (int t = 0; t < p_; ++t) {
      best_set_.insert(Point{t, 0});
      best_set_.insert(Point{0, t});
    }
    best_ = static_cast<int>(best_set_.size());
    descend();
    return {best_, best_set_};
  }

 private:
  int line_id(int d, int idx) const { return d * p_ + line_label(d, idx / p_, idx % p_, p_); }

  void toggle(int idx, int delta) {
    for (int d = 0; d <= p_; ++d) hits_[static_cast<std::size_t>(line_id(d, idx))] += delta;
  }

  void descend() {
    const int used = static_cast<int>(chosen_.size());
    if (used >= best_) return;
    int lower = 0;
    int pick = -1;
    int pick_room = p_ + 1;
    for (int d = 0; d <= p_; ++d) {
      int unblocked = 0;
      for (int c = 0; c < p_; ++c) {
        if (hits_[static_cast<std::size_t>(d * p_ + c)] != 0) continue;
        ++unblocked;
        int room = 0;
        for (const auto& pt : line(p_, d, c, Side::primal).members()) {
          room += excluded_[static_cast<std::size_t>(point_index(pt, p_))] ? 0 : 1;
        }
        if (room < pick_room) {
          pick_room = room;
          pick = d * p_ + c;
        }
      }
      lower = std::max(lower, unblocked);
    }
    if (pick < 0) {
      best_ = used;
      best_set_ = chosen_;
      return;
    }
    // Parallel unblocked lines are disjoint, so each needs its own point.
    if (used + lower >= best_ || pick_room == 0) return;

    std::vector<int> branched;
    for (const auto& pt : line(p_, pick / p_, pick % p_, Side::primal).members()) {
      const int idx = point_index(pt, p_);
      if (excluded_[static_cast<std::size_t>(idx)]) continue;
      chosen_.insert(idx);
      toggle(idx, 1);
      descend();
      toggle(idx, -1);
      chosen_.erase(idx);
      excluded_[static_cast<std::size_t>(idx)] = true;
      branched.push_back(idx);
    }
    for (int idx : branched) excluded_[static_cast<std::size_t>(idx)] = false;
  }

  int p_;
  std::vector<int> hits_;
  std::vector<bool> excluded_;
  PointSet chosen_;
  PointSet best_set_;
  int best_ = 0;
};

}  // namespace

BlockingResult min_blocking_size(int p) {
  require_prime(p);
  return BlockingSearch(p).run();
}

PencilCheck pencil_stability_check(const PointSet& pts) {
  const int p = pts.p();
  PencilCheck out;
  for (int d = 0; d <= p; ++d) {
    const auto counts = pts.line_counts(d);
    const int unblocked = static_cast<int>(std::count(counts.begin(), counts.end(), 0));
    if (unblocked > 0) {
      ++out.k;
      out.m = std::max(out.m, unblocked);
    }
  }
  out.blocking = out.k == 0;
  out.bound = out.blocking ? 2 * p - 1 : 2 * p - out.k - out.m;
  out.bound_holds = static_cast<int>(pts.size()) >= out.bound;
  return out;
}

std::optional<int> bounded_line_direction(const PointSet& pts) {
  const int p = pts.p();
  const auto n = static_cast<long>(pts.size());
  if (n < 2 || n > 4L * p) throw std::invalid_argument("bounded_line_direction needs 2 <= |P| <= 4p");
  if (one_line_cover(pts)) throw std::invalid_argument("bounded_line_direction needs P off a single line");
  const Rational size(n);
  const Rational slack = std::max(Rational(1), Rational(n, 2L * p));
  for (int d : directions_determined(pts)) {
    const auto counts = pts.line_counts(d);
    const Rational gap = Rational(*std::max_element(counts.begin(), counts.end())) - slack;
    // max count < sqrt(n) + slack
    if (sgn(gap) < 0 || gap * gap < size) return d;
  }
  return std::nullopt;
}

std::optional<int> rich_direction_search(const PointSet& pts) {
  const int p = pts.p();
  const auto n = static_cast<int>(pts.size());
  if (p < 3) throw std::invalid_argument("rich_direction_search needs p >= 3");
  if (2 * n < 3 * p + 7 || n > 2 * p + 7) {
    throw std::invalid_argument("rich_direction_search needs (3p+7)/2 <= |P| <= 2p+7");
  }
  if (two_line_cover(pts)) throw std::invalid_argument("rich_direction_search needs P off every pair of lines");
  for (int d = 0; d <= p; ++d) {
    const auto counts = pts.line_counts(d);
    const int most = *std::max_element(counts.begin(), counts.end());
    if (most >= 3 && 2 * most <= p + 5) return d;
  }
  return std::nullopt;
}

std::optional<Coset> covering_line(const PointSet& pts) {
  const int p = pts.p();
  const auto members = pts.points();
  if (members.empty()) return line(p, 0, 0, pts.side());
  if (members.size() == 1) return coset_of(members[0], subgroup(p, 0, pts.side()));
  const Coset c = coset_of(members[0], subgroup(p, direction_of(members[0], members[1], p), pts.side()));
  for (const auto& pt : members) {
    if (!c.contains(pt)) return std::nullopt;
  }
  return c;
}

bool one_line_cover(const PointSet& pts) { return covering_line(pts).has_value(); }

std::optional<LinePair> covering_parallel_pair(const PointSet& pts) {
  const int p = pts.p();
  for (int d = 0; d <= p; ++d) {
    const auto counts = pts.line_counts(d);
    std::vector<int> met;
    for (int c = 0; c < p; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) met.push_back(c);
    }
    if (met.size() > 2) continue;
    while (met.size() < 2) {
      int c = 0;
      while (std::find(met.begin(), met.end(), c) != met.end()) ++c;
      met.push_back(c);
      std::sort(met.begin(), met.end());
    }
    return LinePair{line(p, d, met[0], pts.side()), line(p, d, met[1], pts.side())};
  }
  return std::nullopt;
}

std::optional<LinePair> covering_nonparallel_pair(const PointSet& pts) {
  const int p = pts.p();
  for (const auto& first : all_lines(p, pts.side())) {
    const PointSet rest = pts.minus(PointSet::of_line(first));
    const int d1 = first.subgroup.direction;
    if (rest.empty()) {
      return LinePair{first, coset_of(first.offset, subgroup(p, d1 == 0 ? 1 : 0, pts.side()))};
    }
    if (rest.size() == 1) {
      return LinePair{first, coset_of(rest.points()[0], subgroup(p, d1 == 0 ? 1 : 0, pts.side()))};
    }
    const auto second = covering_line(rest);
    if (second && second->subgroup.direction != d1) return LinePair{first, *second};
  }
  return std::nullopt;
}

bool two_line_cover(const PointSet& pts) {
  return covering_parallel_pair(pts).has_value() || covering_nonparallel_pair(pts).has_value();
}

namespace {

bool coverable(const std::vector<Point>& pending, int lines_left, int p) {
  if (pending.empty()) return true;
  if (lines_left == 0) return false;
  if (static_cast<long>(pending.size()) > static_cast<long>(lines_left) * p) return false;
  int richest = 0;
  for (int d = 0; d <= p; ++d) {
    std::vector<int> counts(static_cast<std::size_t>(p), 0);
    for (const auto& pt : pending) {
      richest = std::max(richest, ++counts[static_cast<std::size_t>(line_label(d, pt.x, pt.y, p))]);
    }
  }
  if (static_cast<long>(pending.size()) > static_cast<long>(lines_left) * richest) return false;
  // Some line of any cover passes through the first pending point.
  const Point anchor = pending.front();
  std::vector<Point> rest;
  for (int d = 0; d <= p; ++d) {
    const int label = line_label(d, anchor.x, anchor.y, p);
    rest.clear();
    for (const auto& pt : pending) {
      if (line_label(d, pt.x, pt.y, p) != label) rest.push_back(pt);
    }
    if (coverable(rest, lines_left - 1, p)) return true;
  }
  return false;
}

}  // namespace

std::optional<int> min_line_cover(const PointSet& pts, int limit) {
  const auto members = pts.points();
  for (int c = 0; c <= limit; ++c) {
    if (coverable(members, c, pts.p())) return c;
  }
  return std::nullopt;
}

}  // namespace suppbound
