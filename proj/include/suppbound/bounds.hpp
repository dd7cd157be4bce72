#ifndef SUPPBOUND_BOUNDS_HPP
#define SUPPBOUND_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suppbound/fourier.hpp"
#include "suppbound/plane.hpp"
#include "suppbound/rational.hpp"

namespace suppbound {

/// A function together with its transform and both supports, computed once
/// and shared by every evaluator.
struct Analysis {
  GFunc f;
  GFunc fhat;
  std::size_t s_size = 0;
  std::size_t x_size = 0;
  /// Rank 2 only.
  std::optional<PointSet> S;
  std::optional<PointSet> X;

  int p() const { return f.p(); }
  std::size_t min_size() const { return std::min(s_size, x_size); }
  std::size_t max_size() const { return std::max(s_size, x_size); }
};

/// Throws std::invalid_argument for a dual-side input.
Analysis analyze(const GFunc& f);

// ---------------------------------------------------------------- profile

struct DirectionStats {
  int direction = 0;       ///< primal direction of H
  int dual_direction = 0;  ///< direction of H^perp
  int n_S = 0;             ///< least positive |(s + H) cap S|
  int K_S = 0;             ///< H-lines meeting S
  int n_X = 0;             ///< least positive |chi H^perp cap X|
  int K_X = 0;             ///< H^perp-lines meeting X
};

class SupportProfile {
 public:
  explicit SupportProfile(const Analysis& a);

  const PointSet& S() const { return S_; }
  const PointSet& X() const { return X_; }
  const std::vector<DirectionStats>& directions() const { return stats_; }
  const DirectionStats& for_direction(int d) const { return stats_.at(static_cast<std::size_t>(d)); }

  /// k_g = |(S - g) cap H| for every g, indexed by point_index.
  std::vector<int> line_counts(int direction) const;
  /// Number of H^perp-lines holding exactly one point of X.
  int isolated_count(int direction) const;

 private:
  PointSet S_;
  PointSet X_;
  std::vector<DirectionStats> stats_;
};

/// Throws std::invalid_argument for the zero function.
SupportProfile profile(const GFunc& f);

// ---------------------------------------------------------------- exceptions

enum class ExceptionKind {
  periodic,          ///< f constant on H-cosets; X inside H^perp
  coset_characters,  ///< supp f in g + H, f = sum c_i chi_i there
  character_cosets,  ///< supp fhat in chi H^perp, f = c_i chi on g_i + H
  two_parallel,      ///< f = chi_1 f_1 + chi_2 f_2 with H-periodic f_i
  two_nonparallel,   ///< f(h1 + h2) = chi(h1 + h2) (f_1(h1) + f_2(h2))
};

struct ExceptionDescriptor {
  ExceptionKind kind = ExceptionKind::periodic;
  int p = 0;
  /// The parameters describe fhat (read as a primal function) rather than
  /// f. Used for the two-line forms when it is S, not X, that lies on two
  /// lines.
  bool on_transform = false;
  std::vector<int> directions;        ///< primal directions: H, or H1 and H2
  std::vector<Point> offsets;         ///< g_i, canonical coset representatives
  std::vector<Point> characters;      ///< chi_i (dual points)
  std::vector<CycNum> coefficients;   ///< c_i
  std::vector<GFunc> components;      ///< rank-1 f_1, f_2 for the two-line forms
  /// Cardinality sandwich of the two-line forms, when it applies.
  std::optional<bool> sandwich_holds;
  std::string sandwich;
};

/// "single-coset-character", "two-characters-one-coset",
/// "one-character-two-cosets", "H-periodic", "two-parallel-lines", ...
std::string kind_name(const ExceptionDescriptor& d);

/// Detects whether X (or, dually, S) lies on one line, two parallel lines or
/// two nonparallel lines, preferring them in that order, and recovers the
/// parameters. nullopt when no such structure exists.
std::optional<ExceptionDescriptor> classify_exception(const Analysis& a);
std::optional<ExceptionDescriptor> classify_exception(const GFunc& f);

/// Rebuilds f from a descriptor.
GFunc reconstruct(const ExceptionDescriptor& d);

// ---------------------------------------------------------------- reports

enum class Verdict { holds, equality, exception, violated, vacuous };
const char* to_string(Verdict v);

struct BoundReport {
  std::string theorem;
  Verdict verdict = Verdict::holds;
  std::string lhs;
  std::string rhs;
  /// Set for evaluations outside the range the statement covers.
  bool advisory = false;
  std::optional<ExceptionDescriptor> exception;
  /// Present exactly when the verdict is "violated".
  std::optional<GFunc> witness;
  std::vector<std::pair<std::string, std::string>> notes;

  bool is_violation() const { return verdict == Verdict::violated && !advisory; }
};

/// |S| |X| >= |G|.
BoundReport check_basic(const Analysis& a);
/// |S| + |X| >= p + 1 on F_p.
BoundReport check_birotao(const Analysis& a);
/// min + max / p >= p + 1 on F_p^2.
BoundReport check_meshulam_alt(const Analysis& a);
/// min / k + max / (p + 1 - k) >= p + 1 with the line-cover escape clause.
BoundReport check_conjecture(const Analysis& a, int k);
/// sqrt|S| + sqrt|X| >= p + 1 unless S or X lies on fewer than p/2 lines.
BoundReport check_roots(const Analysis& a);
/// min / 2 + max / (p - 1) >= p + 1 for rational f, except H-periodic f.
BoundReport check_rational(const Analysis& a);
/// min / (p - 1) + max / 2 >= p + 1, except orthogonal cosets.
BoundReport check_kp1(const Analysis& a);
/// min / (p - 2) + max / 3 >= p + 1 or min >= 3(p - 1)/2.
BoundReport check_kp2(const Analysis& a);
/// |S| |X| >= 3p(p - 2).
BoundReport check_uppergray(const Analysis& a);
/// min >= 2(1 - eps) p or max >= eps p^(3/2).
BoundReport check_as2(const Analysis& a, const Rational& epsilon);
/// min >= 3(1 - eps) p or max >= eps p^(4/3) / 6.
BoundReport check_as3(const Analysis& a, const Rational& epsilon);

/// K_X >= p + 1 - n_S, |X| >= n_X (p + 1 - n_S) and the dual pair, for the
/// subgroup of the given primal direction.
BoundReport lemma_sxmn_check(const Analysis& a, int direction);

/// Checks the multiplicative hypothesis of h on A and, when it holds, that
/// |supp hhat| is 1 or at least |A|. Requires 3|A| > 2p.
BoundReport lemma_aq_check(const GFunc& h, const std::vector<int>& a_set);

struct SumsetResult {
  int size = 0;
  int bound = 0;  ///< min(p, |A| + |B| - 1)
  bool holds = false;
};

/// |A + B| in F_p against the Cauchy-Davenport bound.
SumsetResult sumset_bound(int p, const std::vector<int>& a, const std::vector<int>& b);

/// Evaluator registry used by sweeps and the CLI.
struct CheckSpec {
  std::string theorem;
  int k = 2;
  Rational epsilon = Rational(1, 2);
  int direction = 0;
};

/// Identifiers accepted by evaluate().
const std::vector<std::string>& theorem_ids();
/// False when the theorem's preconditions exclude this function (wrong
/// rank, p too small, non-rational input for the rational theorem).
bool applicable(const CheckSpec& spec, const Analysis& a);
BoundReport evaluate(const CheckSpec& spec, const Analysis& a);

// ---------------------------------------------------------------- set shapes

/// Lemma-form predicates shared by evaluators and tests.
bool orthogonal_cosets(const PointSet& s, const PointSet& x);
/// The smaller set is a line possibly missing one point, the larger one or
/// two lines of the orthogonal direction.
bool near_coset_pair(const PointSet& s, const PointSet& x);

}  // namespace suppbound

#endif  // SUPPBOUND_BOUNDS_HPP
