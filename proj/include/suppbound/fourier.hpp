#ifndef SUPPBOUND_FOURIER_HPP
#define SUPPBOUND_FOURIER_HPP

#include <cstdint>
#include <vector>

#include "suppbound/cyclotomic.hpp"
#include "suppbound/plane.hpp"

namespace suppbound {

/// A Q(z_p)-valued function on F_p (rank 1) or F_p^2 (rank 2), either on
/// the group (primal) or on its dual. Values are stored densely; rank-2
/// values are indexed by point_index, rank-1 values by the residue.
class GFunc {
 public:
  /// The zero function.
  GFunc(int p, int rank, Side side);
  GFunc(int p, int rank, Side side, std::vector<CycNum> values);

  int p() const { return p_; }
  int rank() const { return rank_; }
  Side side() const { return side_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<CycNum>& values() const { return values_; }

  const CycNum& operator[](std::size_t i) const { return values_[i]; }
  const CycNum& at(const Point& pt) const { return values_[static_cast<std::size_t>(point_index(pt, p_))]; }
  void set(std::size_t i, CycNum v);
  void set(const Point& pt, CycNum v) { set(static_cast<std::size_t>(point_index(pt, p_)), std::move(v)); }

  bool is_zero() const;
  bool is_rational() const;

  /// Indices with a nonzero value.
  std::vector<int> support_indices() const;
  std::size_t support_size() const;
  /// Rank 2 only.
  PointSet support() const;

  GFunc& operator+=(const GFunc& o);
  GFunc& operator-=(const GFunc& o);
  GFunc& operator*=(const CycNum& c);
  GFunc& operator*=(const Rational& r);
  friend GFunc operator+(GFunc a, const GFunc& b) { return a += b; }
  friend GFunc operator-(GFunc a, const GFunc& b) { return a -= b; }
  friend GFunc operator*(GFunc a, const CycNum& c) { return a *= c; }
  friend GFunc operator*(GFunc a, const Rational& r) { return a *= r; }

  friend bool operator==(const GFunc& a, const GFunc& b);

  /// Throws std::invalid_argument unless p, rank and side agree.
  void check_compatible(const GFunc& o) const;

 private:
  int p_;
  int rank_;
  Side side_;
  std::vector<CycNum> values_;
};

/// Point of index i of a rank-1 or rank-2 domain (rank 1 uses x = i, y = 0).
Point domain_point(int index, int p, int rank, Side side);
int domain_index(const Point& pt, int p, int rank);

/// z^<chi, g> for the character labelled by the dual point chi.
CycNum character_value(const Point& chi, const Point& g, int p, int rank = 2);

/// Pointwise product (same side).
GFunc pointwise_product(const GFunc& a, const GFunc& b);

/// Indicator of a line or point set, on the set's side.
GFunc indicator(const Coset& line);
GFunc indicator(const PointSet& set);
/// The primal function g -> chi(g).
GFunc character_function(const Point& chi, int p);

/// fhat(chi) = |G|^-1 sum_g f(g) conj(chi(g)). Direct summation.
GFunc fourier_transform(const GFunc& f);
/// f(g) = sum_chi u(chi) chi(g).
GFunc inverse_transform(const GFunc& u);

/// (f1 * f2)(g) = |G|^-1 sum_{g1 + g2 = g} f1(g1) f2(g2).
GFunc convolution(const GFunc& f1, const GFunc& f2);
/// (u1 * u2)(chi) = sum_{chi1 chi2 = chi} u1(chi1) u2(chi2), without the
/// 1/|G| factor, so that hat(f1 f2) = hat(f1) * hat(f2).
GFunc dual_convolution(const GFunc& u1, const GFunc& u2);

/// Transform of f * 1_{g+H} computed from fhat alone:
///   chi -> |H^perp|^-1 sum_{psi in H^perp} fhat(chi psi) psi(g).
GFunc coset_restriction_transform(const GFunc& f, const Point& g, const LineSubgroup& h);
GFunc coset_restriction_transform_from(const GFunc& fhat, const Point& g, const LineSubgroup& h);

/// Both sides of
///   sum_{psi in H^perp} fhat(chi psi) psi(g)
///     = conj(chi(g)) / |H| * sum_{h in H} f(g + h) conj(chi(h)).
struct PsiSides {
  CycNum spectral;
  CycNum spatial;
};
PsiSides psi_identity_sides(const GFunc& f, const GFunc& fhat, const Point& g, const LineSubgroup& h,
                            const Point& chi);
bool psi_identity_check(const GFunc& f, const Point& g, const LineSubgroup& h, const Point& chi);

/// t -> f(g + t * generator(H)), a rank-1 primal function.
GFunc restriction_to_coset_1d(const GFunc& f, const Point& g, const LineSubgroup& h);

/// Pointwise z -> z^j on every value.
GFunc galois_twist(const GFunc& u, std::int64_t j);

struct GaloisClosure {
  /// fhat(chi^j) == galois_apply(fhat(chi), j) for every chi and unit j.
  bool equivariant = false;
  /// X together with the principal character is a union of lines through
  /// the dual origin.
  bool union_of_lines = false;
  bool contains_principal = false;
  /// Dual directions whose punctured line through the origin lies in X.
  std::vector<int> directions;
};

/// Throws std::invalid_argument for a function that is not rational-valued.
GaloisClosure rational_support_closure_check(const GFunc& f);

/// f conv (f * (1_{g+H} - 1_{g0+H})).
GFunc proof_trace_delta(const GFunc& f, const LineSubgroup& h, const Point& g, const Point& g0);
/// f * (1_{g+gamma+H} - 1_{g+H}).
GFunc proof_trace_F(const GFunc& f, const LineSubgroup& h, const Point& gamma, const Point& g);
/// f conv (F_{g1} conv F_{g2} - F_{g3} conv F_{g4}); requires g1 + g2 = g3 + g4.
GFunc proof_trace_delta4(const GFunc& f, const LineSubgroup& h, const Point& gamma, const Point& g1,
                         const Point& g2, const Point& g3, const Point& g4);

/// Closed forms of the transforms of the three traces, from fhat alone.
GFunc delta_transform_formula(const GFunc& fhat, const LineSubgroup& h, const Point& g, const Point& g0);
GFunc F_transform_formula(const GFunc& fhat, const LineSubgroup& h, const Point& gamma, const Point& g);
GFunc delta4_transform_formula(const GFunc& fhat, const LineSubgroup& h, const Point& gamma,
                               const Point& g1, const Point& g2, const Point& g3, const Point& g4);

}  // namespace suppbound

#endif  // SUPPBOUND_FOURIER_HPP
