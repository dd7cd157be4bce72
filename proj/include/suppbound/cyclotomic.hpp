#ifndef SUPPBOUND_CYCLOTOMIC_HPP
#define SUPPBOUND_CYCLOTOMIC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "suppbound/rational.hpp"

namespace suppbound {

/// Deterministic primality test for word-sized integers.
bool is_prime(std::int64_t n);

/// Throws std::invalid_argument unless p is a prime below 2^31.
void require_prime(std::int64_t p);

/// Residue of k modulo p in [0, p).
inline int mod(std::int64_t k, int p) {
  const auto r = static_cast<int>(k % p);
  return r < 0 ? r + p : r;
}

/// An exact element of the cyclotomic field Q(z), z a primitive p-th root of
/// unity, stored in the power basis 1, z, ..., z^(p-2).
///
/// z^(p-1) never appears: it is rewritten as -(1 + z + ... + z^(p-2)). With
/// that single relation the representation is canonical, so equality and the
/// zero test are plain coefficient comparisons.
class CycNum {
 public:
  /// Zero of Q(z_p).
  explicit CycNum(int p);
  /// The rational r embedded in Q(z_p).
  CycNum(int p, const Rational& r);
  /// Power-basis coordinates; coeffs.size() must be p - 1.
  CycNum(int p, std::vector<Rational> coeffs);

  /// z^k, reduced.
  static CycNum root_of_unity(int p, std::int64_t k);

  /// Builds the reduced element sum_i ext[i] z^i from p "extended"
  /// coordinates over 1, z, ..., z^(p-1).
  static CycNum from_extended(int p, std::span<const Rational> ext);

  int p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error when the value is not rational.
  Rational rational_value() const;

  /// Complex conjugation, z -> z^(p-1).
  CycNum conjugate() const;
  /// The automorphism z -> z^j; j must be a unit mod p.
  CycNum galois_apply(std::int64_t j) const;
  /// Multiplication by z^k (a coordinate rotation, no products).
  CycNum times_root(std::int64_t k) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& r);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rational& r) { return a *= r; }
  friend CycNum operator*(const Rational& r, CycNum a) { return a *= r; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Total order on coordinates; used only for canonical tie-breaking.
  friend bool operator<(const CycNum& a, const CycNum& b);

  /// Human-readable sum of z-terms, e.g. "1-1/2z^3". Parsed back by
  /// parse_cyc_value in io.hpp.
  std::string to_string() const;

 private:
  void check_same_field(const CycNum& o) const;

  int p_;
  std::vector<Rational> coeffs_;
};

CycNum root_of_unity(int p, std::int64_t k);
CycNum conjugate(const CycNum& a);
CycNum galois_apply(const CycNum& a, std::int64_t j);
inline bool is_zero(const CycNum& a) { return a.is_zero(); }

}  // namespace suppbound

#endif  // SUPPBOUND_CYCLOTOMIC_HPP
