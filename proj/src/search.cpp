#include "suppbound/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>

namespace suppbound {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Point primal_origin() { return {0, 0, Side::primal}; }

template <class T>
T param_or(const std::vector<T>& v, std::size_t i, T fallback) {
  return i < v.size() ? v[i] : fallback;
}

std::vector<int> directions_or(const FamilyParams& params, std::vector<int> fallback, int p) {
  std::vector<int> dirs = params.directions.empty() ? std::move(fallback) : params.directions;
  for (int d : dirs) require(d >= 0 && d <= p, "direction out of range");
  std::vector<int> sorted = dirs;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "subgroups must be distinct");
  return dirs;
}

void require_distinct_labels(const std::vector<Point>& pts, int direction, int p, const char* what) {
  std::set<int> labels;
  for (const auto& pt : pts) labels.insert(line_label(direction, pt.x, pt.y, p));
  require(labels.size() == pts.size(), what);
}

std::vector<CycNum> coefficients_or(const FamilyParams& params, std::size_t count, int p) {
  std::vector<CycNum> c;
  for (std::size_t i = 0; i < count; ++i) c.push_back(param_or(params.coefficients, i, CycNum(p, 1)));
  for (const auto& v : c) require(!v.is_zero() && v.p() == p, "coefficients must be nonzero elements of Q(z_p)");
  return c;
}

Point normalise(Point pt, int p, Side side) { return {mod(pt.x, p), mod(pt.y, p), side}; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Splits [0, total) into contiguous ranges, runs work on each (in parallel
// when jobs > 1) and returns the per-range results in range order.
template <class Result, class Work>
std::vector<Result> run_ranges(std::uint64_t total, int jobs, Work work) {
  const auto n = static_cast<std::uint64_t>(std::max(1, jobs));
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(n, total));
  std::vector<Result> results(chunks);
  std::vector<std::thread> threads;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    if (chunks == 1) {
      results[c] = work(begin, end);
    } else {
      threads.emplace_back([&results, &work, c, begin, end] { results[c] = work(begin, end); });
    }
  }
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace

// ---------------------------------------------------------------- gallery

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"delta",           "subgroup",      "coset_character",
                                                 "diff_of_subgroups", "pm_two_cosets", "triple_subgroups",
                                                 "cosets2_i",       "cosets2_ii",    "tensor_extremal"};
  return names;
}

GFunc extremal_1d(int p, int m) {
  require_prime(p);
  require(m >= 1 && m <= p, "extremal_1d needs 1 <= m <= p");
  std::vector<CycNum> poly{CycNum(p, 1)};
  for (int a = 1; a < m; ++a) {
    const CycNum root = root_of_unity(p, -a);
    std::vector<CycNum> next(poly.size() + 1, CycNum(p));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  GFunc u(p, 1, Side::primal);
  for (std::size_t i = 0; i < poly.size(); ++i) u.set(i, poly[i]);
  return u;
}

GalleryItem construct(const std::string& family, int p, const FamilyParams& params) {
  require_prime(p);
  const int pp = p * p;
  GalleryItem item{family, GFunc(p, 2, Side::primal), std::nullopt};
  GFunc& f = item.f;
  const auto add_line = [&](const Coset& c, const CycNum& v) {
    for (const auto& g : c.members()) f.set(g, f.at(g) + v);
  };

  if (family == "delta") {
    f.set(normalise(param_or(params.offsets, 0, primal_origin()), p, Side::primal), CycNum(p, 1));
    item.expected = {{1, pp}};
  } else if (family == "subgroup") {
    const auto dirs = directions_or(params, {0}, p);
    add_line(line(p, dirs[0], 0, Side::primal), CycNum(p, 1));
    item.expected = {{p, p}};
  } else if (family == "coset_character") {
    const auto dirs = directions_or(params, {0}, p);
    const LineSubgroup h = subgroup(p, dirs[0], Side::primal);
    const Point g = normalise(param_or(params.offsets, 0, primal_origin()), p, Side::primal);
    const Point chi = normalise(param_or(params.characters, 0, Point{1, 1, Side::dual}), p, Side::dual);
    const CycNum c = coefficients_or(params, 1, p)[0];
    for (const auto& pt : coset_of(g, h).members()) f.set(pt, c * character_value(chi, pt, p));
    item.expected = {{p, p}};
  } else if (family == "diff_of_subgroups") {
    const auto dirs = directions_or(params, {0, 1}, p);
    require(dirs.size() == 2, "diff_of_subgroups needs two directions");
    add_line(line(p, dirs[0], 0, Side::primal), CycNum(p, 1));
    add_line(line(p, dirs[1], 0, Side::primal), CycNum(p, -1));
    item.expected = {{2 * (p - 1), 2 * (p - 1)}};
  } else if (family == "pm_two_cosets") {
    const auto dirs = directions_or(params, {0}, p);
    const LineSubgroup h = subgroup(p, dirs[0], Side::primal);
    const Point g1 = normalise(param_or(params.offsets, 0, line(p, dirs[0], 0, Side::primal).offset), p, Side::primal);
    const Point g2 = normalise(param_or(params.offsets, 1, line(p, dirs[0], 1, Side::primal).offset), p, Side::primal);
    require_distinct_labels({g1, g2}, dirs[0], p, "pm_two_cosets needs two distinct cosets");
    add_line(coset_of(g1, h), CycNum(p, 1));
    add_line(coset_of(g2, h), CycNum(p, -1));
    item.expected = {{2 * p, p - 1}};
  } else if (family == "triple_subgroups") {
    const auto dirs = directions_or(params, {0, 1, 2}, p);
    require(dirs.size() == 3, "triple_subgroups needs three directions");
    add_line(line(p, dirs[0], 0, Side::primal), CycNum(p, 1));
    add_line(line(p, dirs[1], 0, Side::primal), CycNum(p, 1));
    add_line(line(p, dirs[2], 0, Side::primal), CycNum(p, -2));
    item.expected = {{3 * (p - 1), 3 * (p - 1)}};
  } else if (family == "cosets2_i") {
    const auto dirs = directions_or(params, {0}, p);
    const LineSubgroup h = subgroup(p, dirs[0], Side::primal);
    const int e = orthogonal_direction(dirs[0], p);
    const Point g = normalise(param_or(params.offsets, 0, primal_origin()), p, Side::primal);
    std::vector<Point> chars;
    if (params.characters.empty()) {
      chars = {line(p, e, 0, Side::dual).offset, line(p, e, 1 % p, Side::dual).offset};
    } else {
      for (const auto& c : params.characters) chars.push_back(normalise(c, p, Side::dual));
    }
    require(!chars.empty(), "cosets2_i needs characters");
    require_distinct_labels(chars, e, p, "cosets2_i needs characters from distinct H^perp-cosets");
    const auto coeffs = coefficients_or(params, chars.size(), p);
    for (const auto& pt : coset_of(g, h).members()) {
      CycNum v(p);
      for (std::size_t i = 0; i < chars.size(); ++i) v += coeffs[i] * character_value(chars[i], pt, p);
      f.set(pt, std::move(v));
    }
    if (chars.size() == 1) item.expected = {{p, p}};
  } else if (family == "cosets2_ii") {
    const auto dirs = directions_or(params, {0}, p);
    const LineSubgroup h = subgroup(p, dirs[0], Side::primal);
    std::vector<Point> offsets;
    if (params.offsets.empty()) {
      offsets = {line(p, dirs[0], 0, Side::primal).offset, line(p, dirs[0], 1 % p, Side::primal).offset};
    } else {
      for (const auto& g : params.offsets) offsets.push_back(normalise(g, p, Side::primal));
    }
    require(!offsets.empty(), "cosets2_ii needs offsets");
    require_distinct_labels(offsets, dirs[0], p, "cosets2_ii needs distinct cosets");
    const Point chi = normalise(param_or(params.characters, 0, Point{1, 1, Side::dual}), p, Side::dual);
    const auto coeffs = coefficients_or(params, offsets.size(), p);
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      for (const auto& pt : coset_of(offsets[i], h).members()) f.set(pt, coeffs[i] * character_value(chi, pt, p));
    }
    if (offsets.size() == 1) item.expected = {{p, p}};
  } else if (family == "tensor_extremal") {
    require(params.m >= 1 && params.m <= p && params.n >= 1 && params.n <= p, "tensor_extremal needs 1 <= m, n <= p");
    const GFunc u = extremal_1d(p, params.m);
    const GFunc v = extremal_1d(p, p + 1 - params.n);
    for (int x = 0; x < p; ++x) {
      for (int y = 0; y < p; ++y) {
        f.set(Point{x, y, Side::primal}, u[static_cast<std::size_t>(x)] * v[static_cast<std::size_t>(y)]);
      }
    }
    item.expected = {{params.m * (p + 1 - params.n), params.n * (p + 1 - params.m)}};
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return item;
}

std::set<std::pair<int, int>> yellow_dots(int p) {
  std::set<std::pair<int, int>> dots;
  for (int m = 1; m <= p; ++m) {
    for (int n = 1; n <= p; ++n) dots.insert({m * (p + 1 - n), n * (p + 1 - m)});
  }
  return dots;
}

// ---------------------------------------------------------------- spaces

std::uint64_t exhaustive_ceiling() {
  if (const char* env = std::getenv("SUPPBOUND_CEILING")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 100000000ULL;
}

std::vector<CycNum> integer_alphabet(int p, int lo, int hi) {
  std::vector<CycNum> out;
  for (int v = lo; v <= hi; ++v) out.emplace_back(p, Rational(v));
  return out;
}

void SearchSpace::validate() const {
  require_prime(p);
  require(rank == 1 || rank == 2, "rank must be 1 or 2");
  require(!alphabet.empty(), "alphabet must not be empty");
  for (const auto& a : alphabet) require(a.p() == p, "alphabet values must lie in Q(z_p)");
  if (mode == Mode::random) require(budget > 0, "random mode needs a positive budget");
}

std::uint64_t SearchSpace::size() const {
  validate();
  if (mode == Mode::random) return budget;
  const std::uint64_t ceiling = exhaustive_ceiling();
  const int points = rank == 2 ? p * p : p;
  unsigned __int128 total = twist_characters ? static_cast<unsigned>(points) : 1;
  for (int i = 0; i < points; ++i) {
    total *= alphabet.size();
    if (total > ceiling) {
      throw CeilingExceeded("exhaustive space exceeds the ceiling of " + std::to_string(ceiling) +
                            " candidates; use random mode");
    }
  }
  return static_cast<std::uint64_t>(total);
}

GFunc SearchSpace::candidate(std::uint64_t i) const {
  const int points = rank == 2 ? p * p : p;
  const std::uint64_t a = alphabet.size();
  std::vector<std::size_t> digits(static_cast<std::size_t>(points));
  std::uint64_t chi_index = 0;
  if (mode == Mode::exhaustive) {
    if (twist_characters) {
      chi_index = i % static_cast<std::uint64_t>(points);
      i /= static_cast<std::uint64_t>(points);
    }
    for (int k = points - 1; k >= 0; --k) {
      digits[static_cast<std::size_t>(k)] = static_cast<std::size_t>(i % a);
      i /= a;
    }
  } else {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i)));
    for (auto& d : digits) d = static_cast<std::size_t>(rng() % a);
    if (twist_characters) chi_index = rng() % static_cast<std::uint64_t>(points);
  }
  GFunc f(p, rank, Side::primal);
  const Point chi = domain_point(static_cast<int>(chi_index), p, rank, Side::dual);
  for (int k = 0; k < points; ++k) {
    CycNum v = alphabet[digits[static_cast<std::size_t>(k)]];
    if (twist_characters && !v.is_zero()) v *= character_value(chi, domain_point(k, p, rank, Side::primal), p, rank);
    f.set(static_cast<std::size_t>(k), std::move(v));
  }
  return f;
}

// ---------------------------------------------------------------- sweeps

std::uint64_t SweepSummary::total_violations() const {
  std::uint64_t n = 0;
  for (const auto& t : tallies) n += t.violations;
  return n;
}

namespace {

TheoremTally blank_tally(const std::string& theorem) {
  TheoremTally t;
  t.theorem = theorem;
  return t;
}

struct SweepPart {
  std::uint64_t zero_functions = 0;
  std::vector<TheoremTally> tallies;
};

void merge_into(TheoremTally& into, const TheoremTally& from) {
  for (std::size_t v = 0; v < into.verdicts.size(); ++v) into.verdicts[v] += from.verdicts[v];
  into.skipped += from.skipped;
  into.advisory += from.advisory;
  into.violations += from.violations;
  for (const auto& w : from.violation_witnesses) {
    if (into.violation_witnesses.size() < TheoremTally::kMaxWitnesses) into.violation_witnesses.push_back(w);
  }
  if (!into.first_equality && from.first_equality) into.first_equality = from.first_equality;
  for (const auto& [k, n] : from.exception_kinds) into.exception_kinds[k] += n;
  into.unclassified_exceptions += from.unclassified_exceptions;
  into.reconstruct_failures += from.reconstruct_failures;
}

void tally(TheoremTally& t, const BoundReport& r, const GFunc& f, bool verify_descriptors) {
  ++t.verdicts[static_cast<std::size_t>(r.verdict)];
  if (r.advisory) ++t.advisory;
  if (r.is_violation()) {
    ++t.violations;
    if (t.violation_witnesses.size() < TheoremTally::kMaxWitnesses) t.violation_witnesses.push_back(f);
  }
  if (r.verdict == Verdict::equality && !t.first_equality) t.first_equality = f;
  if (r.verdict != Verdict::exception) return;
  if (!r.exception) {
    ++t.unclassified_exceptions;
    return;
  }
  std::string name = kind_name(*r.exception);
  if (r.exception->on_transform) name += " (transform)";
  ++t.exception_kinds[name];
  if (verify_descriptors && !(reconstruct(*r.exception) == f)) ++t.reconstruct_failures;
}

}  // namespace

SweepSummary sweep(const SearchSpace& space, const std::vector<CheckSpec>& checks, int jobs,
                   bool verify_descriptors) {
  const std::uint64_t total = space.size();
  for (const auto& c : checks) {
    require(std::find(theorem_ids().begin(), theorem_ids().end(), c.theorem) != theorem_ids().end(),
            "unknown theorem id: " + c.theorem);
  }
  auto parts = run_ranges<SweepPart>(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    SweepPart part;
    for (const auto& c : checks) part.tallies.push_back(blank_tally(c.theorem));
    for (std::uint64_t i = begin; i < end; ++i) {
      const GFunc f = space.candidate(i);
      if (f.is_zero()) {
        ++part.zero_functions;
        continue;
      }
      const Analysis a = analyze(f);
      for (std::size_t c = 0; c < checks.size(); ++c) {
        if (!applicable(checks[c], a)) {
          ++part.tallies[c].skipped;
          continue;
        }
        tally(part.tallies[c], evaluate(checks[c], a), f, verify_descriptors);
      }
    }
    return part;
  });
  SweepSummary summary;
  summary.space = space;
  summary.candidates = total;
  for (const auto& c : checks) summary.tallies.push_back(blank_tally(c.theorem));
  for (const auto& part : parts) {
    summary.zero_functions += part.zero_functions;
    for (std::size_t c = 0; c < checks.size(); ++c) merge_into(summary.tallies[c], part.tallies[c]);
  }
  return summary;
}

FrontierMap frontier(const SearchSpace& space, int jobs) {
  const std::uint64_t total = space.size();
  using Part = std::map<std::pair<int, int>, GFunc>;
  auto parts = run_ranges<Part>(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    Part part;
    for (std::uint64_t i = begin; i < end; ++i) {
      const GFunc f = space.candidate(i);
      if (f.is_zero()) continue;
      const std::pair<int, int> key{static_cast<int>(f.support_size()),
                                    static_cast<int>(fourier_transform(f).support_size())};
      part.emplace(key, f);
    }
    return part;
  });
  FrontierMap map;
  map.space = space;
  for (const auto& part : parts) {
    for (const auto& [key, f] : part) map.attained.emplace(key, f);
  }
  return map;
}

HuntResult hunt(const CheckSpec& check, const SearchSpace& space, int jobs) {
  require(std::find(theorem_ids().begin(), theorem_ids().end(), check.theorem) != theorem_ids().end(),
          "unknown theorem id: " + check.theorem);
  const std::uint64_t total = space.size();
  auto parts = run_ranges<HuntResult>(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    HuntResult part;
    for (std::uint64_t i = begin; i < end; ++i) {
      const GFunc f = space.candidate(i);
      if (f.is_zero()) continue;
      const Analysis a = analyze(f);
      if (!applicable(check, a)) continue;
      ++part.examined;
      BoundReport r = evaluate(check, a);
      if (r.is_violation()) {
        ++part.violations;
        if (!part.first_violation) part.first_violation = std::move(r);
      } else if (r.verdict == Verdict::exception) {
        ++part.escaped;
        if (part.escaped_examples.size() < HuntResult::kMaxExamples) {
          r.witness = f;
          part.escaped_examples.push_back(std::move(r));
        }
      }
    }
    return part;
  });
  HuntResult out;
  out.theorem = check.theorem;
  for (auto& part : parts) {
    out.examined += part.examined;
    out.violations += part.violations;
    out.escaped += part.escaped;
    if (!out.first_violation && part.first_violation) out.first_violation = std::move(part.first_violation);
    for (auto& r : part.escaped_examples) {
      if (out.escaped_examples.size() < HuntResult::kMaxExamples) out.escaped_examples.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace suppbound
