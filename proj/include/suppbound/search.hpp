#ifndef SUPPBOUND_SEARCH_HPP
#define SUPPBOUND_SEARCH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "suppbound/bounds.hpp"
#include "suppbound/fourier.hpp"

namespace suppbound {

// ---------------------------------------------------------------- gallery

/// Optional parameters of a gallery family. Empty fields fall back to the
/// family's defaults.
struct FamilyParams {
  std::vector<int> directions;
  std::vector<Point> offsets;
  std::vector<Point> characters;
  std::vector<CycNum> coefficients;
  int m = 1;
  int n = 1;
};

struct GalleryItem {
  std::string family;
  GFunc f;
  /// (|S|, |X|) claimed for the family, when there is a closed form.
  std::optional<std::pair<int, int>> expected;
};

/// delta, subgroup, coset_character, diff_of_subgroups, pm_two_cosets,
/// triple_subgroups, cosets2_i, cosets2_ii, tensor_extremal.
const std::vector<std::string>& family_names();

/// Throws std::invalid_argument on unknown families and degenerate
/// parameters (repeated subgroups, repeated cosets, zero coefficients).
GalleryItem construct(const std::string& family, int p, const FamilyParams& params = {});

/// A function on F_p with |supp u| = m and |supp uhat| = p + 1 - m: the
/// coefficients of prod_{a=1}^{m-1} (t - z^-a).
GFunc extremal_1d(int p, int m);

/// The lattice (m(p+1-n), n(p+1-m)), 1 <= m, n <= p.
std::set<std::pair<int, int>> yellow_dots(int p);

// ---------------------------------------------------------------- spaces

/// Thrown when an exhaustive space exceeds the candidate ceiling.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 10^8, or the value of SUPPBOUND_CEILING when set.
std::uint64_t exhaustive_ceiling();

struct SearchSpace {
  enum class Mode { exhaustive, random };

  int p = 3;
  int rank = 2;
  std::vector<CycNum> alphabet;
  /// Also multiply every base function by each character chi(g).
  bool twist_characters = false;
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;

  /// Number of candidates: |alphabet|^(p^rank) (times p^rank when
  /// twisted) or the budget. Throws CeilingExceeded / invalid_argument.
  std::uint64_t size() const;
  /// Candidate i. Exhaustive order is a mixed-radix counter with point 0 the
  /// most significant digit, so increasing i is lexicographic order of the
  /// value vectors; the character index is least significant.
  GFunc candidate(std::uint64_t i) const;
  /// Throws std::invalid_argument for an unusable space.
  void validate() const;
};

/// Integer alphabet {lo, ..., hi} in Q(z_p).
std::vector<CycNum> integer_alphabet(int p, int lo, int hi);

// ---------------------------------------------------------------- sweeps

struct TheoremTally {
  std::string theorem;
  std::array<std::uint64_t, 5> verdicts{};  ///< indexed by Verdict
  std::uint64_t skipped = 0;                ///< preconditions exclude f
  std::uint64_t advisory = 0;
  std::uint64_t violations = 0;             ///< non-advisory violations
  /// Violation witnesses in enumeration order, at most kMaxWitnesses.
  std::vector<GFunc> violation_witnesses;
  std::optional<GFunc> first_equality;
  std::map<std::string, std::uint64_t> exception_kinds;
  std::uint64_t unclassified_exceptions = 0;
  std::uint64_t reconstruct_failures = 0;

  static constexpr std::size_t kMaxWitnesses = 64;
  std::uint64_t count(Verdict v) const { return verdicts[static_cast<std::size_t>(v)]; }
};

struct SweepSummary {
  SearchSpace space;
  std::uint64_t candidates = 0;
  std::uint64_t zero_functions = 0;
  std::vector<TheoremTally> tallies;

  std::uint64_t total_violations() const;
};

/// Evaluates every check on every candidate. Deterministic for any job count.
/// With verify_descriptors, each exception descriptor is rebuilt and
/// compared to the candidate.
SweepSummary sweep(const SearchSpace& space, const std::vector<CheckSpec>& checks, int jobs = 1,
                   bool verify_descriptors = false);

struct FrontierMap {
  SearchSpace space;
  /// (|S|, |X|) -> first witness in enumeration order.
  std::map<std::pair<int, int>, GFunc> attained;
};

FrontierMap frontier(const SearchSpace& space, int jobs = 1);

struct HuntResult {
  std::string theorem;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  /// First violation in enumeration order.
  std::optional<BoundReport> first_violation;
  /// Evaluations excused by an exception or escape clause.
  std::uint64_t escaped = 0;
  std::vector<BoundReport> escaped_examples;

  static constexpr std::size_t kMaxExamples = 5;
};

HuntResult hunt(const CheckSpec& check, const SearchSpace& space, int jobs = 1);

}  // namespace suppbound

#endif  // SUPPBOUND_SEARCH_HPP
