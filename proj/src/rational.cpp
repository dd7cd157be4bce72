#include "suppbound/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace suppbound {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_token(num_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_token(den_text) || den_text[0] == '-' || den_text[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(parse_integer(num_text), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int compare_sqrt_sum(const Rational& a, const Rational& b, const Rational& c) {
  // sqrt(a) + sqrt(b) vs c  <=>  2 sqrt(ab) vs c^2 - a - b  (both sides of the
  // first comparison are nonnegative, so squaring preserves order).
  const Rational rest = c * c - a - b;
  if (rest < 0) return 1;
  const Rational lhs = 4 * a * b;
  const Rational rhs = rest * rest;
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) == 0 ? 0 : 1);
}

}  // namespace suppbound
