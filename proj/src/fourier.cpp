#include "suppbound/fourier.hpp"

#include <stdexcept>
#include <string>

namespace suppbound {

namespace {

std::size_t domain_size(int p, int rank) { return rank == 1 ? static_cast<std::size_t>(p) : static_cast<std::size_t>(p) * p; }

// ext += value * z^shift, with ext over the p extended coordinates.
void accumulate_root(std::vector<Rational>& ext, const CycNum& value, int shift) {
  const int p = value.p();
  const auto& c = value.coeffs();
  for (int i = 0; i + 1 < p; ++i) {
    if (sgn(c[static_cast<std::size_t>(i)]) == 0) continue;
    ext[static_cast<std::size_t>((i + shift) % p)] += c[static_cast<std::size_t>(i)];
  }
}

int domain_pairing(const Point& a, const Point& b, int p, int rank) {
  if (rank == 1) return mod(static_cast<std::int64_t>(a.x) * b.x, p);
  return pairing(a, b, p);
}

Point domain_add(const Point& a, const Point& b, int p, int rank) {
  Point r = add(a, b, p);
  if (rank == 1) r.y = 0;
  return r;
}

// out(chi) = scale * sum_g in(g) z^(sign <chi, g>)
GFunc character_sum(const GFunc& in, int sign, const Rational& scale) {
  const int p = in.p();
  const int rank = in.rank();
  const Side out_side = opposite(in.side());
  const auto support = in.support_indices();
  std::vector<Point> where;
  where.reserve(support.size());
  for (int i : support) where.push_back(domain_point(i, p, rank, in.side()));

  std::vector<CycNum> out;
  const std::size_t n = domain_size(p, rank);
  out.reserve(n);
  std::vector<Rational> ext(static_cast<std::size_t>(p));
  for (std::size_t o = 0; o < n; ++o) {
    const Point chi = domain_point(static_cast<int>(o), p, rank, out_side);
    for (auto& e : ext) e = 0;
    for (std::size_t s = 0; s < support.size(); ++s) {
      const int e = domain_pairing(chi, where[s], p, rank);
      accumulate_root(ext, in[static_cast<std::size_t>(support[s])], mod(sign * e, p));
    }
    CycNum v = CycNum::from_extended(p, ext);
    if (scale != 1) v *= scale;
    out.push_back(std::move(v));
  }
  return GFunc(p, rank, out_side, std::move(out));
}

GFunc group_convolution(const GFunc& a, const GFunc& b, const Rational& scale) {
  a.check_compatible(b);
  const int p = a.p();
  const int rank = a.rank();
  GFunc out(p, rank, a.side());
  std::vector<CycNum> acc(a.size(), CycNum(p));
  const auto sa = a.support_indices();
  const auto sb = b.support_indices();
  for (int i : sa) {
    const Point gi = domain_point(i, p, rank, a.side());
    for (int j : sb) {
      const Point gj = domain_point(j, p, rank, a.side());
      acc[static_cast<std::size_t>(domain_index(domain_add(gi, gj, p, rank), p, rank))] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  if (scale != 1) {
    for (auto& v : acc) v *= scale;
  }
  return GFunc(p, rank, a.side(), std::move(acc));
}

void require_rank2(const GFunc& f, const char* what) {
  if (f.rank() != 2) throw std::invalid_argument(std::string(what) + " needs a rank-2 function");
}

void require_side(const GFunc& f, Side side, const char* what) {
  if (f.side() != side) {
    throw std::invalid_argument(std::string(what) + " needs a " + to_string(side) + " function");
  }
}

}  // namespace

// ---------------------------------------------------------------- GFunc

GFunc::GFunc(int p, int rank, Side side) : p_(p), rank_(rank), side_(side) {
  require_prime(p);
  if (rank != 1 && rank != 2) throw std::invalid_argument("rank must be 1 or 2");
  values_.assign(domain_size(p, rank), CycNum(p));
}

GFunc::GFunc(int p, int rank, Side side, std::vector<CycNum> values)
    : p_(p), rank_(rank), side_(side), values_(std::move(values)) {
  require_prime(p);
  if (rank != 1 && rank != 2) throw std::invalid_argument("rank must be 1 or 2");
  if (values_.size() != domain_size(p, rank)) {
    throw std::invalid_argument("expected " + std::to_string(domain_size(p, rank)) + " values, got " +
                                std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v.p() != p) throw std::invalid_argument("function value from a different cyclotomic field");
  }
}

void GFunc::set(std::size_t i, CycNum v) {
  if (v.p() != p_) throw std::invalid_argument("function value from a different cyclotomic field");
  values_.at(i) = std::move(v);
}

bool GFunc::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool GFunc::is_rational() const {
  for (const auto& v : values_) {
    if (!v.is_rational()) return false;
  }
  return true;
}

std::vector<int> GFunc::support_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].is_zero()) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::size_t GFunc::support_size() const {
  std::size_t n = 0;
  for (const auto& v : values_) n += v.is_zero() ? 0 : 1;
  return n;
}

PointSet GFunc::support() const {
  require_rank2(*this, "support");
  return PointSet::from_indices(p_, side_, support_indices());
}

void GFunc::check_compatible(const GFunc& o) const {
  if (o.p_ != p_ || o.rank_ != rank_ || o.side_ != side_) {
    throw std::invalid_argument("functions differ in p, rank or side");
  }
}

GFunc& GFunc::operator+=(const GFunc& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GFunc& GFunc::operator-=(const GFunc& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GFunc& GFunc::operator*=(const CycNum& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

GFunc& GFunc::operator*=(const Rational& r) {
  for (auto& v : values_) v *= r;
  return *this;
}

bool operator==(const GFunc& a, const GFunc& b) {
  return a.p_ == b.p_ && a.rank_ == b.rank_ && a.side_ == b.side_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------- helpers

Point domain_point(int index, int p, int rank, Side side) {
  if (rank == 1) return {index, 0, side};
  return point_at(index, p, side);
}

int domain_index(const Point& pt, int p, int rank) { return rank == 1 ? pt.x : point_index(pt, p); }

CycNum character_value(const Point& chi, const Point& g, int p, int rank) {
  return CycNum::root_of_unity(p, domain_pairing(chi, g, p, rank));
}

GFunc pointwise_product(const GFunc& a, const GFunc& b) {
  a.check_compatible(b);
  std::vector<CycNum> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return GFunc(a.p(), a.rank(), a.side(), std::move(out));
}

GFunc indicator(const Coset& line) { return indicator(PointSet::of_line(line)); }

GFunc indicator(const PointSet& set) {
  GFunc out(set.p(), 2, set.side());
  for (int i : set.indices()) out.set(static_cast<std::size_t>(i), CycNum(set.p(), Rational(1)));
  return out;
}

GFunc character_function(const Point& chi, int p) {
  std::vector<CycNum> out;
  for (int i = 0; i < p * p; ++i) out.push_back(character_value(chi, point_at(i, p, Side::primal), p));
  return GFunc(p, 2, Side::primal, std::move(out));
}

// ---------------------------------------------------------------- transforms

GFunc fourier_transform(const GFunc& f) {
  require_side(f, Side::primal, "fourier_transform");
  return character_sum(f, -1, Rational(1, static_cast<long>(f.size())));
}

GFunc inverse_transform(const GFunc& u) {
  require_side(u, Side::dual, "inverse_transform");
  return character_sum(u, 1, Rational(1));
}

GFunc convolution(const GFunc& f1, const GFunc& f2) {
  require_side(f1, Side::primal, "convolution");
  return group_convolution(f1, f2, Rational(1, static_cast<long>(f1.size())));
}

GFunc dual_convolution(const GFunc& u1, const GFunc& u2) {
  require_side(u1, Side::dual, "dual_convolution");
  return group_convolution(u1, u2, Rational(1));
}

GFunc coset_restriction_transform(const GFunc& f, const Point& g, const LineSubgroup& h) {
  require_rank2(f, "coset_restriction_transform");
  return coset_restriction_transform_from(fourier_transform(f), g, h);
}

GFunc coset_restriction_transform_from(const GFunc& fhat, const Point& g, const LineSubgroup& h) {
  require_rank2(fhat, "coset_restriction_transform");
  require_side(fhat, Side::dual, "coset_restriction_transform");
  const int p = fhat.p();
  const Point gen = orthogonal(h).generator();
  std::vector<CycNum> out;
  std::vector<Rational> ext(static_cast<std::size_t>(p));
  const Rational inv_p(1, p);
  for (int o = 0; o < p * p; ++o) {
    const Point chi = point_at(o, p, Side::dual);
    for (auto& e : ext) e = 0;
    for (int t = 0; t < p; ++t) {
      const Point psi = scale(gen, t, p);
      accumulate_root(ext, fhat.at(add(chi, psi, p)), pairing(psi, g, p));
    }
    out.push_back(CycNum::from_extended(p, ext) * inv_p);
  }
  return GFunc(p, 2, Side::dual, std::move(out));
}

PsiSides psi_identity_sides(const GFunc& f, const GFunc& fhat, const Point& g, const LineSubgroup& h,
                            const Point& chi) {
  require_rank2(f, "psi_identity_check");
  const int p = f.p();
  const Point gen_perp = orthogonal(h).generator();
  std::vector<Rational> ext(static_cast<std::size_t>(p), Rational(0));
  for (int t = 0; t < p; ++t) {
    const Point psi = scale(gen_perp, t, p);
    accumulate_root(ext, fhat.at(add(chi, psi, p)), pairing(psi, g, p));
  }
  CycNum spectral = CycNum::from_extended(p, ext);

  for (auto& e : ext) e = 0;
  const Point gen = h.generator();
  for (int t = 0; t < p; ++t) {
    const Point hp = scale(gen, t, p);
    accumulate_root(ext, f.at(add(g, hp, p)), mod(-pairing(chi, hp, p), p));
  }
  CycNum spatial = CycNum::from_extended(p, ext).times_root(-pairing(chi, g, p)) * Rational(1, p);
  return {std::move(spectral), std::move(spatial)};
}

bool psi_identity_check(const GFunc& f, const Point& g, const LineSubgroup& h, const Point& chi) {
  const auto sides = psi_identity_sides(f, fourier_transform(f), g, h, chi);
  return sides.spectral == sides.spatial;
}

GFunc restriction_to_coset_1d(const GFunc& f, const Point& g, const LineSubgroup& h) {
  require_rank2(f, "restriction_to_coset_1d");
  const int p = f.p();
  const Point gen = h.generator();
  std::vector<CycNum> out;
  for (int t = 0; t < p; ++t) out.push_back(f.at(add(g, scale(gen, t, p), p)));
  return GFunc(p, 1, f.side(), std::move(out));
}

GFunc galois_twist(const GFunc& u, std::int64_t j) {
  std::vector<CycNum> out;
  out.reserve(u.size());
  for (const auto& v : u.values()) out.push_back(v.galois_apply(j));
  return GFunc(u.p(), u.rank(), u.side(), std::move(out));
}

GaloisClosure rational_support_closure_check(const GFunc& f) {
  require_rank2(f, "rational_support_closure_check");
  if (!f.is_rational()) throw std::invalid_argument("Galois closure check needs a rational-valued function");
  const int p = f.p();
  const GFunc fhat = fourier_transform(f);
  GaloisClosure out;
  out.equivariant = true;
  for (int j = 1; j < p && out.equivariant; ++j) {
    for (int i = 0; i < p * p; ++i) {
      const Point chi = point_at(i, p, Side::dual);
      if (!(fhat.at(scale(chi, j, p)) == fhat[static_cast<std::size_t>(i)].galois_apply(j))) {
        out.equivariant = false;
        break;
      }
    }
  }
  PointSet x = fhat.support();
  out.contains_principal = x.contains(0);
  PointSet covered(p, Side::dual);
  covered.insert(0);
  for (int d = 0; d <= p; ++d) {
    PointSet punctured = PointSet::of_line(line(p, d, 0, Side::dual));
    punctured.erase(0);
    if (punctured.is_subset_of(x)) {
      out.directions.push_back(d);
      covered = covered.united(punctured);
    }
  }
  x.insert(0);
  out.union_of_lines = covered == x;
  return out;
}

// ---------------------------------------------------------------- proof traces

GFunc proof_trace_delta(const GFunc& f, const LineSubgroup& h, const Point& g, const Point& g0) {
  require_rank2(f, "proof_trace_delta");
  const GFunc cut = indicator(coset_of(g, h)) - indicator(coset_of(g0, h));
  return convolution(f, pointwise_product(f, cut));
}

GFunc proof_trace_F(const GFunc& f, const LineSubgroup& h, const Point& gamma, const Point& g) {
  require_rank2(f, "proof_trace_F");
  const int p = f.p();
  const GFunc cut = indicator(coset_of(add(g, gamma, p), h)) - indicator(coset_of(g, h));
  return pointwise_product(f, cut);
}

GFunc proof_trace_delta4(const GFunc& f, const LineSubgroup& h, const Point& gamma, const Point& g1,
                         const Point& g2, const Point& g3, const Point& g4) {
  const int p = f.p();
  if (!(add(g1, g2, p) == add(g3, g4, p))) {
    throw std::invalid_argument("proof_trace_delta4 needs g1 + g2 = g3 + g4");
  }
  const GFunc left = convolution(proof_trace_F(f, h, gamma, g1), proof_trace_F(f, h, gamma, g2));
  const GFunc right = convolution(proof_trace_F(f, h, gamma, g3), proof_trace_F(f, h, gamma, g4));
  return convolution(f, left - right);
}

GFunc delta_transform_formula(const GFunc& fhat, const LineSubgroup& h, const Point& g, const Point& g0) {
  require_rank2(fhat, "delta_transform_formula");
  const int p = fhat.p();
  const Point gen = orthogonal(h).generator();
  std::vector<CycNum> out;
  std::vector<Rational> ext(static_cast<std::size_t>(p));
  for (int o = 0; o < p * p; ++o) {
    const Point chi = point_at(o, p, Side::dual);
    for (auto& e : ext) e = 0;
    for (int t = 0; t < p; ++t) {
      const Point psi = scale(gen, t, p);
      const CycNum& v = fhat.at(add(chi, psi, p));
      accumulate_root(ext, v, pairing(psi, g, p));
      accumulate_root(ext, -v, pairing(psi, g0, p));
    }
    out.push_back(fhat[static_cast<std::size_t>(o)] * CycNum::from_extended(p, ext) * Rational(1, p));
  }
  return GFunc(p, 2, Side::dual, std::move(out));
}

GFunc F_transform_formula(const GFunc& fhat, const LineSubgroup& h, const Point& gamma, const Point& g) {
  require_rank2(fhat, "F_transform_formula");
  const int p = fhat.p();
  const Point gen = orthogonal(h).generator();
  std::vector<CycNum> out;
  std::vector<Rational> ext(static_cast<std::size_t>(p));
  for (int o = 0; o < p * p; ++o) {
    const Point chi = point_at(o, p, Side::dual);
    for (auto& e : ext) e = 0;
    for (int t = 0; t < p; ++t) {
      const Point psi = scale(gen, t, p);
      const CycNum& v = fhat.at(add(chi, psi, p));
      // (psi(gamma) - 1) psi(g)
      accumulate_root(ext, v, mod(pairing(psi, gamma, p) + pairing(psi, g, p), p));
      accumulate_root(ext, -v, pairing(psi, g, p));
    }
    out.push_back(CycNum::from_extended(p, ext) * Rational(1, p));
  }
  return GFunc(p, 2, Side::dual, std::move(out));
}

GFunc delta4_transform_formula(const GFunc& fhat, const LineSubgroup& h, const Point& gamma,
                               const Point& g1, const Point& g2, const Point& g3, const Point& g4) {
  const int p = fhat.p();
  if (!(add(g1, g2, p) == add(g3, g4, p))) {
    throw std::invalid_argument("delta4_transform_formula needs g1 + g2 = g3 + g4");
  }
  const GFunc f1 = F_transform_formula(fhat, h, gamma, g1);
  const GFunc f2 = F_transform_formula(fhat, h, gamma, g2);
  const GFunc f3 = F_transform_formula(fhat, h, gamma, g3);
  const GFunc f4 = F_transform_formula(fhat, h, gamma, g4);
  return pointwise_product(fhat, pointwise_product(f1, f2) - pointwise_product(f3, f4));
}

}  // namespace suppbound
