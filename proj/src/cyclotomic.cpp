#include "suppbound/cyclotomic.hpp"

#include <limits>
#include <stdexcept>

namespace suppbound {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (p > std::numeric_limits<std::int32_t>::max() || !is_prime(p)) {
    throw std::invalid_argument("p must be a prime, got " + std::to_string(p));
  }
}

CycNum::CycNum(int p) : p_(p) {
  require_prime(p);
  coeffs_.assign(static_cast<std::size_t>(p - 1), Rational(0));
}

CycNum::CycNum(int p, const Rational& r) : CycNum(p) { coeffs_[0] = r; }

CycNum::CycNum(int p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.size() != static_cast<std::size_t>(p - 1)) {
    throw std::invalid_argument("CycNum needs exactly p-1 coordinates");
  }
}

CycNum CycNum::root_of_unity(int p, std::int64_t k) {
  CycNum r(p);
  const int e = mod(k, p);
  if (e == p - 1) {
    for (auto& c : r.coeffs_) c = -1;
  } else {
    r.coeffs_[static_cast<std::size_t>(e)] = 1;
  }
  return r;
}

CycNum CycNum::from_extended(int p, std::span<const Rational> ext) {
  if (ext.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("extended coordinates need exactly p entries");
  }
  CycNum r(p);
  const Rational& top = ext[static_cast<std::size_t>(p - 1)];
  for (int i = 0; i + 1 < p; ++i) r.coeffs_[static_cast<std::size_t>(i)] = ext[static_cast<std::size_t>(i)] - top;
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + to_string());
  return coeffs_[0];
}

CycNum CycNum::galois_apply(std::int64_t j) const {
  const int unit = mod(j, p_);
  if (unit == 0) throw std::invalid_argument("Galois exponent must be a unit mod p");
  std::vector<Rational> ext(static_cast<std::size_t>(p_), Rational(0));
  for (int i = 0; i + 1 < p_; ++i) {
    ext[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * unit, p_))] = coeffs_[static_cast<std::size_t>(i)];
  }
  return from_extended(p_, ext);
}

CycNum CycNum::conjugate() const { return galois_apply(p_ - 1); }

CycNum CycNum::times_root(std::int64_t k) const {
  const int shift = mod(k, p_);
  if (shift == 0) return *this;
  std::vector<Rational> ext(static_cast<std::size_t>(p_), Rational(0));
  for (int i = 0; i + 1 < p_; ++i) {
    ext[static_cast<std::size_t>((i + shift) % p_)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return from_extended(p_, ext);
}

void CycNum::check_same_field(const CycNum& o) const {
  if (o.p_ != p_) {
    throw std::invalid_argument("mismatched cyclotomic orders " + std::to_string(p_) + " and " +
                                std::to_string(o.p_));
  }
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  check_same_field(o);
  const auto n = static_cast<std::size_t>(p_);
  std::vector<Rational> ext(n, Rational(0));
  Rational term;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (sgn(o.coeffs_[j]) == 0) continue;
      term = coeffs_[i] * o.coeffs_[j];
      ext[(i + j) % n] += term;
    }
  }
  *this = from_extended(p_, ext);
  return *this;
}

CycNum& CycNum::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const CycNum& a, const CycNum& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CycNum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (i == 0) {
      out += suppbound::to_string(mag);
      continue;
    }
    if (mag != 1) out += suppbound::to_string(mag);
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CycNum root_of_unity(int p, std::int64_t k) { return CycNum::root_of_unity(p, k); }
CycNum conjugate(const CycNum& a) { return a.conjugate(); }
CycNum galois_apply(const CycNum& a, std::int64_t j) { return a.galois_apply(j); }

}  // namespace suppbound
