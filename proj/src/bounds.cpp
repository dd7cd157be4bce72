#include "suppbound/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace suppbound {

namespace {

void require_nonzero(const Analysis& a) {
  if (a.s_size == 0) throw std::invalid_argument("bound evaluators need a nonzero function");
}

void require_rank(const Analysis& a, int rank, const char* what) {
  if (a.f.rank() != rank) {
    throw std::invalid_argument(std::string(what) + " needs a rank-" + std::to_string(rank) + " function");
  }
}

void require_min_p(const Analysis& a, int min_p, const char* what) {
  if (a.p() < min_p) throw std::invalid_argument(std::string(what) + " needs p >= " + std::to_string(min_p));
}

Verdict from_cmp(int c) { return c > 0 ? Verdict::holds : (c == 0 ? Verdict::equality : Verdict::violated); }

// Verdict of a disjunction of inequalities, each given as sign(lhs - rhs).
Verdict from_any(std::initializer_list<int> cmps) {
  bool tight = false;
  for (int c : cmps) {
    if (c > 0) return Verdict::holds;
    tight = tight || c == 0;
  }
  return tight ? Verdict::equality : Verdict::violated;
}

int sign_of(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs, rhs);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

BoundReport make_report(std::string theorem, const Rational& lhs, const Rational& rhs) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.verdict = from_cmp(sign_of(lhs, rhs));
  return r;
}

void add_sizes(BoundReport& r, const Analysis& a) {
  r.notes.emplace_back("S", std::to_string(a.s_size));
  r.notes.emplace_back("X", std::to_string(a.x_size));
}

BoundReport finish(BoundReport r, const Analysis& a) {
  add_sizes(r, a);
  if (r.verdict == Verdict::violated) r.witness = a.f;
  return r;
}

BoundReport exception_report(std::string theorem, const Analysis& a, std::string why) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.verdict = Verdict::exception;
  r.exception = classify_exception(a);
  r.notes.emplace_back("exception", std::move(why));
  return r;
}

// min / k + max / l as an exact rational.
Rational weighted(const Analysis& a, const Rational& w_min, const Rational& w_max) {
  return w_min * Rational(static_cast<long>(a.min_size())) + w_max * Rational(static_cast<long>(a.max_size()));
}

std::string cover_note(const std::optional<int>& cover, int limit) {
  if (cover) return std::to_string(*cover);
  return ">" + std::to_string(limit);
}

// The smaller support (either one when the sizes agree) satisfies pred.
template <class Pred>
bool smaller_support_satisfies(const Analysis& a, Pred pred) {
  if (a.s_size <= a.x_size && pred(*a.S)) return true;
  if (a.x_size <= a.s_size && pred(*a.X)) return true;
  return false;
}

// Line through the dual origin containing X, if any.
std::optional<int> periodic_direction(const PointSet& x) {
  const int p = x.p();
  for (int e = 0; e <= p; ++e) {
    if (x.is_subset_of(PointSet::of_line(line(p, e, 0, Side::dual)))) return e;
  }
  return std::nullopt;
}

bool is_full_line_of(const PointSet& set, int direction) {
  const auto counts = set.line_counts(direction);
  int full = 0;
  for (int c : counts) {
    if (c != 0 && c != set.p()) return false;
    full += c == set.p() ? 1 : 0;
  }
  return full == 1;
}

bool near_coset_pair_ordered(const PointSet& small, const PointSet& large) {
  const int p = small.p();
  const auto n = static_cast<int>(small.size());
  if (n != p && n != p - 1) return false;
  const auto l = covering_line(small);
  if (!l) return false;
  const int e = orthogonal_direction(l->subgroup.direction, p);
  const auto counts = large.line_counts(e);
  int full = 0;
  for (int c : counts) {
    if (c != 0 && c != p) return false;
    full += c == p ? 1 : 0;
  }
  return full == 1 || full == 2;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::equality: return "holds-with-equality";
    case Verdict::exception: return "exception";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "hypothesis-fails";
  }
  return "?";
}

Analysis analyze(const GFunc& f) {
  if (f.side() != Side::primal) throw std::invalid_argument("analyze needs a primal function");
  Analysis a{f, fourier_transform(f), 0, 0, std::nullopt, std::nullopt};
  a.s_size = f.support_size();
  a.x_size = a.fhat.support_size();
  if (f.rank() == 2) {
    a.S = f.support();
    a.X = a.fhat.support();
  }
  return a;
}

// ---------------------------------------------------------------- profile

SupportProfile::SupportProfile(const Analysis& a) : S_(*a.S), X_(*a.X) {
  if (S_.empty()) throw std::invalid_argument("profile needs a nonzero function");
  const int p = S_.p();
  for (int d = 0; d <= p; ++d) {
    DirectionStats st;
    st.direction = d;
    st.dual_direction = orthogonal_direction(d, p);
    const auto fill = [p](const std::vector<int>& counts, int& least, int& met) {
      least = p + 1;
      met = 0;
      for (int c : counts) {
        if (c == 0) continue;
        ++met;
        least = std::min(least, c);
      }
    };
    fill(S_.line_counts(d), st.n_S, st.K_S);
    fill(X_.line_counts(st.dual_direction), st.n_X, st.K_X);
    stats_.push_back(st);
  }
}

std::vector<int> SupportProfile::line_counts(int direction) const {
  const int p = S_.p();
  const auto per_line = S_.line_counts(direction);
  std::vector<int> out(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p * p; ++i) {
    out[static_cast<std::size_t>(i)] = per_line[static_cast<std::size_t>(line_label(direction, i / p, i % p, p))];
  }
  return out;
}

int SupportProfile::isolated_count(int direction) const {
  const auto counts = X_.line_counts(orthogonal_direction(direction, X_.p()));
  return static_cast<int>(std::count(counts.begin(), counts.end(), 1));
}

SupportProfile profile(const GFunc& f) {
  if (f.rank() != 2) throw std::invalid_argument("profile needs a rank-2 function");
  return SupportProfile(analyze(f));
}

// ---------------------------------------------------------------- shapes

bool orthogonal_cosets(const PointSet& s, const PointSet& x) {
  const int p = s.p();
  if (static_cast<int>(s.size()) != p || static_cast<int>(x.size()) != p) return false;
  const auto l = covering_line(s);
  return l && is_full_line_of(x, orthogonal_direction(l->subgroup.direction, p));
}

bool near_coset_pair(const PointSet& s, const PointSet& x) {
  if (s.size() <= x.size() && near_coset_pair_ordered(s, x)) return true;
  if (x.size() <= s.size() && near_coset_pair_ordered(x, s)) return true;
  return false;
}

// ---------------------------------------------------------------- evaluators

BoundReport check_basic(const Analysis& a) {
  require_nonzero(a);
  const Rational lhs(static_cast<long>(a.s_size * a.x_size));
  const Rational rhs(static_cast<long>(a.f.size()));
  return finish(make_report("basic", lhs, rhs), a);
}

BoundReport check_birotao(const Analysis& a) {
  require_nonzero(a);
  require_rank(a, 1, "birotao");
  const Rational lhs(static_cast<long>(a.s_size + a.x_size));
  return finish(make_report("birotao", lhs, Rational(a.p() + 1)), a);
}

BoundReport check_meshulam_alt(const Analysis& a) {
  require_nonzero(a);
  require_rank(a, 2, "meshulam_alt");
  const int p = a.p();
  return finish(make_report("meshulam_alt", weighted(a, 1, Rational(1, p)), Rational(p + 1)), a);
}

BoundReport check_conjecture(const Analysis& a, int k) {
  require_nonzero(a);
  require_rank(a, 2, "conjecture");
  const int p = a.p();
  if (k < 1 || k > p) throw std::invalid_argument("conjecture needs 1 <= k <= p");
  BoundReport r = make_report("conjecture", weighted(a, Rational(1, k), Rational(1, p + 1 - k)), Rational(p + 1));
  r.notes.emplace_back("k", std::to_string(k));
  // Escape clause: S or X covered by fewer than min(k, p + 1 - k) lines.
  const int threshold = std::min(k, p + 1 - k);
  const auto cover_s = min_line_cover(*a.S, threshold - 1);
  const auto cover_x = min_line_cover(*a.X, threshold - 1);
  r.notes.emplace_back("cover_threshold", std::to_string(threshold));
  r.notes.emplace_back("cover_S", cover_note(cover_s, threshold - 1));
  r.notes.emplace_back("cover_X", cover_note(cover_x, threshold - 1));
  if (r.verdict == Verdict::violated && (cover_s || cover_x)) {
    r.verdict = Verdict::exception;
    r.exception = classify_exception(a);
  }
  return finish(std::move(r), a);
}

BoundReport check_roots(const Analysis& a) {
  require_nonzero(a);
  require_rank(a, 2, "roots");
  const int p = a.p();
  BoundReport r;
  r.theorem = "roots";
  r.lhs = "sqrt(" + std::to_string(a.s_size) + ")+sqrt(" + std::to_string(a.x_size) + ")";
  r.rhs = std::to_string(p + 1);
  r.verdict = from_cmp(compare_sqrt_sum(Rational(static_cast<long>(a.s_size)),
                                        Rational(static_cast<long>(a.x_size)), Rational(p + 1)));
  // Escape clause: S or X inside a union of fewer than p/2 lines.
  const int limit = (p - 1) / 2;
  const auto cover_s = min_line_cover(*a.S, limit);
  const auto cover_x = min_line_cover(*a.X, limit);
  r.notes.emplace_back("cover_S", cover_note(cover_s, limit));
  r.notes.emplace_back("cover_X", cover_note(cover_x, limit));
  if (r.verdict == Verdict::violated && (cover_s || cover_x)) {
    r.verdict = Verdict::exception;
    r.exception = classify_exception(a);
  }
  return finish(std::move(r), a);
}

BoundReport check_rational(const Analysis& a) {
  require_nonzero(a);
  require_rank(a, 2, "rational");
  require_min_p(a, 3, "rational");
  if (!a.f.is_rational()) throw std::invalid_argument("rational needs a rational-valued function");
  const int p = a.p();
  if (const auto e = periodic_direction(*a.X)) {
    BoundReport r = exception_report("rational", a, "H-periodic");
    // Shape of X claimed for periodic f: H^perp, or H^perp minus the
    // principal character when the values sum to zero. A constant f is
    // periodic for every H and has X = {principal}.
    PointSet expected = PointSet::of_line(line(p, *e, 0, Side::dual));
    const bool constant = a.X->size() == 1 && a.X->contains(0);
    if (constant) {
      expected = PointSet(p, Side::dual);
      expected.insert(0);
    } else if (a.fhat[0].is_zero()) {
      expected.erase(0);
    }
    r.lhs = to_string(weighted(a, Rational(1, 2), Rational(1, p - 1)));
    r.rhs = std::to_string(p + 1);
    r.notes.emplace_back("H", std::to_string(orthogonal_direction(*e, p)));
    if (!(expected == *a.X)) {
      r.verdict = Verdict::violated;
      r.notes.emplace_back("exception_shape", "X does not match the periodic form");
    }
    return finish(std::move(r), a);
  }
  return finish(make_report("rational", weighted(a, Rational(1, 2), Rational(1, p - 1)), Rational(p + 1)), a);
}

BoundReport check_kp1(const Analysis& a) {
  require_nonzero(a);
  require_rank(a, 2, "kp1");
  require_min_p(a, 3, "kp1");
  const int p = a.p();
  if (orthogonal_cosets(*a.S, *a.X)) {
    BoundReport r = exception_report("kp1", a, "orthogonal cosets");
    r.lhs = to_string(weighted(a, Rational(1, p - 1), Rational(1, 2)));
    r.rhs = std::to_string(p + 1);
    return finish(std::move(r), a);
  }
  return finish(make_report("kp1", weighted(a, Rational(1, p - 1), Rational(1, 2)), Rational(p + 1)), a);
}

BoundReport check_kp2(const Analysis& a) {
  require_nonzero(a);
  require_rank(a, 2, "kp2");
  require_min_p(a, 3, "kp2");
  const int p = a.p();
  const Rational lhs = weighted(a, Rational(1, p - 2), Rational(1, 3));
  const Rational alt_rhs = Rational(3 * (p - 1)) / 2;
  if (near_coset_pair(*a.S, *a.X)) {
    BoundReport r = exception_report("kp2", a, "near-coset pair");
    r.lhs = to_string(lhs);
    r.rhs = std::to_string(p + 1);
    return finish(std::move(r), a);
  }
  BoundReport r = make_report("kp2", lhs, Rational(p + 1));
  const Rational min_size(static_cast<long>(a.min_size()));
  r.verdict = from_any({sign_of(lhs, Rational(p + 1)), sign_of(min_size, alt_rhs)});
  r.notes.emplace_back("alt_lhs", to_string(min_size));
  r.notes.emplace_back("alt_rhs", to_string(alt_rhs));
  return finish(std::move(r), a);
}

BoundReport check_uppergray(const Analysis& a) {
  require_nonzero(a);
  require_rank(a, 2, "uppergray");
  require_min_p(a, 3, "uppergray");
  const int p = a.p();
  const Rational lhs(static_cast<long>(a.s_size * a.x_size));
  const Rational rhs(3 * p * (p - 2));
  BoundReport r;
  if (a.min_size() <= 2) {
    r = exception_report("uppergray", a, "min(|S|,|X|) <= 2");
  } else if (near_coset_pair(*a.S, *a.X)) {
    r = exception_report("uppergray", a, "near-coset pair");
  } else {
    r = make_report("uppergray", lhs, rhs);
  }
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.advisory = p <= 3;
  return finish(std::move(r), a);
}

namespace {

void require_epsilon(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace

BoundReport check_as2(const Analysis& a, const Rational& epsilon) {
  require_nonzero(a);
  require_rank(a, 2, "as2");
  require_epsilon(epsilon);
  const int p = a.p();
  const Rational min_size(static_cast<long>(a.min_size()));
  const Rational max_size(static_cast<long>(a.max_size()));
  const Rational min_rhs = 2 * (1 - epsilon) * p;
  // max >= eps p^(3/2)  <=>  max^2 >= eps^2 p^3
  const Rational p3(static_cast<long>(p) * p * p);
  BoundReport r;
  if (smaller_support_satisfies(a, [](const PointSet& s) { return one_line_cover(s); })) {
    r = exception_report("as2", a, "smaller support on one line");
  } else {
    r.theorem = "as2";
    r.verdict = from_any({sign_of(min_size, min_rhs), sign_of(max_size * max_size, epsilon * epsilon * p3)});
  }
  r.lhs = to_string(min_size);
  r.rhs = to_string(min_rhs);
  r.notes.emplace_back("epsilon", to_string(epsilon));
  r.notes.emplace_back("alt_lhs", to_string(max_size));
  r.notes.emplace_back("alt_rhs", to_string(epsilon) + "*" + std::to_string(p) + "^(3/2)");
  r.advisory = p < 31;
  return finish(std::move(r), a);
}

BoundReport check_as3(const Analysis& a, const Rational& epsilon) {
  require_nonzero(a);
  require_rank(a, 2, "as3");
  require_epsilon(epsilon);
  const int p = a.p();
  const Rational min_size(static_cast<long>(a.min_size()));
  const Rational max_size(static_cast<long>(a.max_size()));
  const Rational min_rhs = 3 * (1 - epsilon) * p;
  // max >= eps p^(4/3) / 6  <=>  max^3 >= eps^3 p^4 / 216
  const Rational p4(static_cast<long>(p) * p * p * p);
  BoundReport r;
  if (smaller_support_satisfies(a, [](const PointSet& s) { return two_line_cover(s); })) {
    r = exception_report("as3", a, "smaller support on at most two lines");
  } else {
    r.theorem = "as3";
    r.verdict = from_any({sign_of(min_size, min_rhs),
                          sign_of(max_size * max_size * max_size, epsilon * epsilon * epsilon * p4 / 216)});
  }
  r.lhs = to_string(min_size);
  r.rhs = to_string(min_rhs);
  r.notes.emplace_back("epsilon", to_string(epsilon));
  r.notes.emplace_back("alt_lhs", to_string(max_size));
  r.notes.emplace_back("alt_rhs", to_string(epsilon) + "*" + std::to_string(p) + "^(4/3)/6");
  return finish(std::move(r), a);
}

BoundReport lemma_sxmn_check(const Analysis& a, int direction) {
  require_nonzero(a);
  require_rank(a, 2, "sxmn");
  const int p = a.p();
  if (direction < 0 || direction > p) throw std::invalid_argument("direction out of range");
  const DirectionStats st = SupportProfile(a).for_direction(direction);
  const auto s = static_cast<int>(a.s_size);
  const auto x = static_cast<int>(a.x_size);
  const int cmps[] = {
      st.K_X - (p + 1 - st.n_S),
      x - st.n_X * (p + 1 - st.n_S),
      st.K_S - (p + 1 - st.n_X),
      s - st.n_S * (p + 1 - st.n_X),
  };
  BoundReport r = make_report("sxmn", Rational(x), Rational(st.n_X * (p + 1 - st.n_S)));
  const bool broken = std::any_of(std::begin(cmps), std::end(cmps), [](int c) { return c < 0; });
  const bool tight = std::any_of(std::begin(cmps), std::end(cmps), [](int c) { return c == 0; });
  r.verdict = broken ? Verdict::violated : (tight ? Verdict::equality : Verdict::holds);
  r.notes.emplace_back("H", std::to_string(direction));
  r.notes.emplace_back("n_S", std::to_string(st.n_S));
  r.notes.emplace_back("n_X", std::to_string(st.n_X));
  r.notes.emplace_back("K_S", std::to_string(st.K_S));
  r.notes.emplace_back("K_X", std::to_string(st.K_X));
  return finish(std::move(r), a);
}

BoundReport lemma_aq_check(const GFunc& h, const std::vector<int>& a_set) {
  if (h.rank() != 1 || h.side() != Side::primal) throw std::invalid_argument("aq needs a primal rank-1 function");
  if (h.is_zero()) throw std::invalid_argument("aq needs a nonzero function");
  const int p = h.p();
  std::set<int> unique;
  for (int a : a_set) unique.insert(mod(a, p));
  const std::vector<int> members(unique.begin(), unique.end());
  const auto n = static_cast<int>(members.size());
  if (3 * n <= 2 * p) throw std::invalid_argument("aq needs |A| > 2p/3");

  std::vector<int> position(static_cast<std::size_t>(p), -1);
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;
  std::vector<CycNum> products;
  products.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      products.push_back(h[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] *
                         h[static_cast<std::size_t>(members[static_cast<std::size_t>(j)])]);
    }
  }
  bool hypothesis = true;
  for (int i = 0; i < n && hypothesis; ++i) {
    for (int j = i; j < n && hypothesis; ++j) {
      for (int k = 0; k < n; ++k) {
        const int other = position[static_cast<std::size_t>(
            mod(members[static_cast<std::size_t>(i)] + members[static_cast<std::size_t>(j)] -
                    members[static_cast<std::size_t>(k)],
                p))];
        if (other < 0) continue;
        if (!(products[static_cast<std::size_t>(i * n + j)] == products[static_cast<std::size_t>(k * n + other)])) {
          hypothesis = false;
          break;
        }
      }
    }
  }
  const auto spectrum = static_cast<int>(fourier_transform(h).support_size());
  BoundReport r;
  r.theorem = "aq";
  r.lhs = std::to_string(spectrum);
  r.rhs = std::to_string(n);
  r.notes.emplace_back("A", std::to_string(n));
  if (!hypothesis) {
    r.verdict = Verdict::vacuous;
    return r;
  }
  if (spectrum == 1 || spectrum > n) {
    r.verdict = Verdict::holds;
  } else if (spectrum == n) {
    r.verdict = Verdict::equality;
  } else {
    r.verdict = Verdict::violated;
    r.witness = h;
  }
  return r;
}

SumsetResult sumset_bound(int p, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("sumset needs nonempty sets");
  std::set<int> ua, ub, sum;
  for (int v : a) ua.insert(mod(v, p));
  for (int v : b) ub.insert(mod(v, p));
  for (int x : ua) {
    for (int y : ub) sum.insert((x + y) % p);
  }
  SumsetResult r;
  r.size = static_cast<int>(sum.size());
  r.bound = std::min(p, static_cast<int>(ua.size() + ub.size()) - 1);
  r.holds = r.size >= r.bound;
  return r;
}

// ---------------------------------------------------------------- registry

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"basic", "birotao", "meshulam_alt", "conjecture",
                                               "roots", "rational", "kp1", "kp2",
                                               "uppergray", "as2", "as3", "sxmn"};
  return ids;
}

bool applicable(const CheckSpec& spec, const Analysis& a) {
  if (a.s_size == 0) return false;
  const int rank = a.f.rank();
  const int p = a.p();
  const std::string& t = spec.theorem;
  if (t == "basic") return true;
  if (t == "birotao") return rank == 1;
  if (rank != 2) return false;
  if (t == "rational") return p >= 3 && a.f.is_rational();
  if (t == "kp1" || t == "kp2" || t == "uppergray") return p >= 3;
  if (t == "conjecture") return spec.k >= 1 && spec.k <= p;
  if (t == "sxmn") return spec.direction >= 0 && spec.direction <= p;
  return t == "meshulam_alt" || t == "roots" || t == "as2" || t == "as3";
}

BoundReport evaluate(const CheckSpec& spec, const Analysis& a) {
  const std::string& t = spec.theorem;
  if (t == "basic") return check_basic(a);
  if (t == "birotao") return check_birotao(a);
  if (t == "meshulam_alt") return check_meshulam_alt(a);
  if (t == "conjecture") return check_conjecture(a, spec.k);
  if (t == "roots") return check_roots(a);
  if (t == "rational") return check_rational(a);
  if (t == "kp1") return check_kp1(a);
  if (t == "kp2") return check_kp2(a);
  if (t == "uppergray") return check_uppergray(a);
  if (t == "as2") return check_as2(a, spec.epsilon);
  if (t == "as3") return check_as3(a, spec.epsilon);
  if (t == "sxmn") return lemma_sxmn_check(a, spec.direction);
  throw std::invalid_argument("unknown theorem id: " + t);
}

}  // namespace suppbound
