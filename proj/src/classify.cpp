#include <stdexcept>

#include "suppbound/bounds.hpp"

namespace suppbound {

namespace {

GFunc relabel(const GFunc& u, Side side) { return GFunc(u.p(), u.rank(), side, u.values()); }

Point intersection(const Coset& a, const Coset& b) {
  for (const auto& pt : a.members()) {
    if (b.contains(pt)) return pt;
  }
  throw std::logic_error("parallel lines have no intersection");
}

// Coordinates (t1, t2) of g in the basis of two independent generators.
std::pair<int, int> decompose(const Point& g, const Point& g1, const Point& g2, int p) {
  const int det = mod(static_cast<std::int64_t>(g1.x) * g2.y - static_cast<std::int64_t>(g1.y) * g2.x, p);
  std::int64_t inv = 1;
  for (int e = p - 2, b = det; e > 0; e >>= 1) {
    if (e & 1) inv = inv * b % p;
    b = static_cast<int>(static_cast<std::int64_t>(b) * b % p);
  }
  const int t1 = mod((static_cast<std::int64_t>(g.x) * g2.y - static_cast<std::int64_t>(g.y) * g2.x) % p * inv, p);
  const int t2 = mod((static_cast<std::int64_t>(g1.x) * g.y - static_cast<std::int64_t>(g1.y) * g.x) % p * inv, p);
  return {t1, t2};
}

ExceptionDescriptor periodic_form(const GFunc& f, int dual_direction) {
  const int p = f.p();
  ExceptionDescriptor d;
  d.kind = ExceptionKind::periodic;
  d.p = p;
  const LineSubgroup h = subgroup(p, orthogonal_direction(dual_direction, p), Side::primal);
  d.directions = {h.direction};
  for (const auto& c : lines_in_direction(h)) {
    const CycNum& v = f.at(c.offset);
    if (v.is_zero()) continue;
    d.offsets.push_back(c.offset);
    d.coefficients.push_back(v);
  }
  return d;
}

// X inside a line chi H^perp missing the dual origin: f = c_i chi on g_i + H.
ExceptionDescriptor character_form(const Analysis& a, const Coset& dual_line) {
  const int p = a.p();
  ExceptionDescriptor d;
  d.p = p;
  const LineSubgroup h = orthogonal(dual_line.subgroup);
  const Point chi = dual_line.offset;
  d.directions = {h.direction};
  d.characters = {chi};
  for (const auto& c : lines_in_direction(h)) {
    const CycNum& v = a.f.at(c.offset);
    if (v.is_zero()) continue;
    d.offsets.push_back(c.offset);
    d.coefficients.push_back(v * character_value(negate(chi, p), c.offset, p));
  }
  d.kind = d.offsets.size() == 1 ? ExceptionKind::coset_characters : ExceptionKind::character_cosets;
  return d;
}

// S inside g + H: f = sum c_i chi_i on g + H, one chi_i per H^perp-line of X.
ExceptionDescriptor coset_form(const Analysis& a, const Coset& primal_line) {
  const int p = a.p();
  ExceptionDescriptor d;
  d.kind = ExceptionKind::coset_characters;
  d.p = p;
  d.directions = {primal_line.subgroup.direction};
  d.offsets = {primal_line.offset};
  const int e = orthogonal_direction(primal_line.subgroup.direction, p);
  const auto counts = a.X->line_counts(e);
  for (int label = 0; label < p; ++label) {
    if (counts[static_cast<std::size_t>(label)] == 0) continue;
    const Point chi = line(p, e, label, Side::dual).offset;
    d.characters.push_back(chi);
    d.coefficients.push_back(a.fhat.at(chi) * Rational(p));
  }
  return d;
}

ExceptionDescriptor parallel_form(const GFunc& u, const GFunc& uhat, std::size_t u_support, const LinePair& pair) {
  const int p = u.p();
  ExceptionDescriptor d;
  d.kind = ExceptionKind::two_parallel;
  d.p = p;
  const LineSubgroup hperp = pair.first.subgroup;
  const LineSubgroup h = orthogonal(hperp);
  d.directions = {h.direction};
  d.characters = {pair.first.offset, pair.second.offset};
  const auto psis = PointSet::of_line(line(p, hperp.direction, 0, Side::dual)).points();
  int nonzero_labels = 0;
  std::vector<bool> met(static_cast<std::size_t>(p), false);
  for (const auto& chi : d.characters) {
    GFunc comp(p, 1, Side::primal);
    for (int label = 0; label < p; ++label) {
      const Point g = line(p, h.direction, label, Side::primal).offset;
      CycNum v(p);
      for (const auto& psi : psis) v += uhat.at(add(chi, psi, p)) * character_value(psi, g, p);
      if (!v.is_zero()) met[static_cast<std::size_t>(label)] = true;
      comp.set(static_cast<std::size_t>(label), std::move(v));
    }
    d.components.push_back(std::move(comp));
  }
  for (bool m : met) nonzero_labels += m ? 1 : 0;
  // (1 - 1/p) N <= |S| <= N with N = p * #{H-cosets where f_1 or f_2 is nonzero}.
  const long n = static_cast<long>(p) * nonzero_labels;
  const auto s = static_cast<long>(u_support);
  d.sandwich_holds = (p - 1) * n <= p * s && s <= n;
  d.sandwich = "(1-1/p)N <= |S| <= N, N=" + std::to_string(n) + ", |S|=" + std::to_string(s);
  return d;
}

ExceptionDescriptor nonparallel_form(const GFunc& u, std::size_t u_support, const LinePair& pair) {
  const int p = u.p();
  ExceptionDescriptor d;
  d.kind = ExceptionKind::two_nonparallel;
  d.p = p;
  const LineSubgroup h1 = orthogonal(pair.first.subgroup);
  const LineSubgroup h2 = orthogonal(pair.second.subgroup);
  d.directions = {h1.direction, h2.direction};
  const Point chi = intersection(pair.first, pair.second);
  d.characters = {chi};
  const Point g1 = h1.generator();
  const Point g2 = h2.generator();
  const auto F = [&](const Point& g) { return u.at(g) * character_value(negate(chi, p), g, p); };
  const CycNum f0 = F(Point{0, 0, Side::primal});
  std::vector<CycNum> raw1;
  for (int t = 0; t < p; ++t) raw1.push_back(F(scale(g1, t, p)) - f0);
  // Normalise so that the most frequent value of f_1 is zero.
  std::size_t best = 0;
  int best_count = 0;
  for (std::size_t i = 0; i < raw1.size(); ++i) {
    int count = 0;
    for (const auto& v : raw1) count += v == raw1[i] ? 1 : 0;
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  const CycNum shift = raw1[best];
  GFunc f1(p, 1, Side::primal);
  GFunc f2(p, 1, Side::primal);
  for (int t = 0; t < p; ++t) {
    f1.set(static_cast<std::size_t>(t), raw1[static_cast<std::size_t>(t)] - shift);
    f2.set(static_cast<std::size_t>(t), F(scale(g2, t, p)) + shift);
  }
  const auto n1 = static_cast<long>(f1.support_size());
  const auto n2 = static_cast<long>(f2.support_size());
  d.components = {std::move(f1), std::move(f2)};
  const auto s = static_cast<long>(u_support);
  const long pp = static_cast<long>(p) * p;
  if (2 * s < pp) {
    const long mid = p * n2 + p * n1;
    // mid <= (1 + 2|S|/p^2) |S|
    d.sandwich_holds = s <= mid && mid * pp <= (pp + 2 * s) * s;
    d.sandwich = "|S| <= p|supp f2| + p|supp f1| <= (1+2|S|/p^2)|S|, middle=" + std::to_string(mid) +
                 ", |S|=" + std::to_string(s);
  } else {
    d.sandwich = "not applicable: |S| >= |G|/2";
  }
  return d;
}

}  // namespace

std::string kind_name(const ExceptionDescriptor& d) {
  switch (d.kind) {
    case ExceptionKind::periodic: return "H-periodic";
    case ExceptionKind::coset_characters:
      if (d.characters.size() == 1) return "single-coset-character";
      if (d.characters.size() == 2) return "two-characters-one-coset";
      return "characters-one-coset";
    case ExceptionKind::character_cosets:
      return d.offsets.size() == 2 ? "one-character-two-cosets" : "one-character-cosets";
    case ExceptionKind::two_parallel: return "two-parallel-lines";
    case ExceptionKind::two_nonparallel: return "two-nonparallel-lines";
  }
  return "?";
}

std::optional<ExceptionDescriptor> classify_exception(const Analysis& a) {
  if (a.f.rank() != 2) throw std::invalid_argument("classification needs a rank-2 function");
  if (a.s_size == 0) return std::nullopt;
  const int p = a.p();
  const PointSet& S = *a.S;
  const PointSet& X = *a.X;

  if (const auto l = covering_line(X)) {
    if (X.size() == 1) {
      const Point chi = X.points().front();
      const int e = chi == Point{0, 0, Side::dual} ? 0 : direction_of(Point{0, 0, Side::dual}, chi, p);
      return periodic_form(a.f, e);
    }
    if (l->contains(Point{0, 0, Side::dual})) return periodic_form(a.f, l->subgroup.direction);
    return character_form(a, *l);
  }
  if (const auto l = covering_line(S)) return coset_form(a, *l);

  // S on two lines: the same forms for F = fhat read as a primal function,
  // whose transform is supported on -S.
  const GFunc F = relabel(a.fhat, Side::primal);
  const GFunc Fhat = fourier_transform(F);
  const PointSet minus_s = Fhat.support();
  if (const auto pair = covering_parallel_pair(X)) return parallel_form(a.f, a.fhat, a.s_size, *pair);
  if (const auto pair = covering_parallel_pair(minus_s)) {
    auto d = parallel_form(F, Fhat, a.x_size, *pair);
    d.on_transform = true;
    return d;
  }
  if (const auto pair = covering_nonparallel_pair(X)) return nonparallel_form(a.f, a.s_size, *pair);
  if (const auto pair = covering_nonparallel_pair(minus_s)) {
    auto d = nonparallel_form(F, a.x_size, *pair);
    d.on_transform = true;
    return d;
  }
  return std::nullopt;
}

std::optional<ExceptionDescriptor> classify_exception(const GFunc& f) { return classify_exception(analyze(f)); }

GFunc reconstruct(const ExceptionDescriptor& d) {
  const int p = d.p;
  const auto at = [](const std::vector<Point>& v, std::size_t i) {
    if (i >= v.size()) throw std::invalid_argument("descriptor is missing parameters");
    return v[i];
  };
  GFunc u(p, 2, Side::primal);
  switch (d.kind) {
    case ExceptionKind::periodic: {
      const LineSubgroup h = subgroup(p, d.directions.at(0), Side::primal);
      for (std::size_t i = 0; i < d.offsets.size(); ++i) {
        for (const auto& g : coset_of(d.offsets[i], h).members()) u.set(g, d.coefficients.at(i));
      }
      break;
    }
    case ExceptionKind::coset_characters: {
      const LineSubgroup h = subgroup(p, d.directions.at(0), Side::primal);
      for (const auto& g : coset_of(at(d.offsets, 0), h).members()) {
        CycNum v(p);
        for (std::size_t i = 0; i < d.characters.size(); ++i) {
          v += d.coefficients.at(i) * character_value(d.characters[i], g, p);
        }
        u.set(g, std::move(v));
      }
      break;
    }
    case ExceptionKind::character_cosets: {
      const LineSubgroup h = subgroup(p, d.directions.at(0), Side::primal);
      const Point chi = at(d.characters, 0);
      for (std::size_t i = 0; i < d.offsets.size(); ++i) {
        for (const auto& g : coset_of(d.offsets[i], h).members()) {
          u.set(g, d.coefficients.at(i) * character_value(chi, g, p));
        }
      }
      break;
    }
    case ExceptionKind::two_parallel: {
      const int dir = d.directions.at(0);
      for (int i = 0; i < p * p; ++i) {
        const Point g = point_at(i, p, Side::primal);
        const auto label = static_cast<std::size_t>(line_label(dir, g.x, g.y, p));
        CycNum v(p);
        for (std::size_t j = 0; j < 2; ++j) v += d.components.at(j)[label] * character_value(at(d.characters, j), g, p);
        u.set(g, std::move(v));
      }
      break;
    }
    case ExceptionKind::two_nonparallel: {
      const Point g1 = subgroup(p, d.directions.at(0), Side::primal).generator();
      const Point g2 = subgroup(p, d.directions.at(1), Side::primal).generator();
      const Point chi = at(d.characters, 0);
      for (int i = 0; i < p * p; ++i) {
        const Point g = point_at(i, p, Side::primal);
        const auto [t1, t2] = decompose(g, g1, g2, p);
        u.set(g, (d.components.at(0)[static_cast<std::size_t>(t1)] + d.components.at(1)[static_cast<std::size_t>(t2)]) *
                     character_value(chi, g, p));
      }
      break;
    }
  }
  if (d.on_transform) return inverse_transform(relabel(u, Side::dual));
  return u;
}

}  // namespace suppbound
