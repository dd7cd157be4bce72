#include "suppbound/io.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace suppbound {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view what, std::string_view text) {
  throw std::invalid_argument(std::string(what) + ": \"" + std::string(text) + "\"");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

long long parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) malformed("expected an integer", context);
  return v;
}

int parse_prime(std::string_view s, std::string_view context) {
  const long long p = parse_int(s, context);
  if (p < 2 || p > 2147483647LL || !is_prime(p)) malformed("expected a prime", context);
  return static_cast<int>(p);
}

// One signed term: optional rational coefficient, optional "z" or "z^k".
CycNum parse_term(std::string_view term, bool negative, int p, std::string_view whole) {
  term = trim(term);
  if (term.empty()) malformed("empty term in value", whole);
  const auto z = term.find('z');
  std::string_view coef = trim(term.substr(0, z));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  Rational c = 1;
  if (!coef.empty()) c = parse_rational(coef);
  else if (z == std::string_view::npos) malformed("empty term in value", whole);
  CycNum value(p, c);
  if (z != std::string_view::npos) {
    std::string_view rest = trim(term.substr(z + 1));
    long long k = 1;
    if (!rest.empty()) {
      if (rest.front() != '^') malformed("expected z^k", whole);
      k = parse_int(rest.substr(1), whole);
    }
    value = value.times_root(k);
  }
  if (negative) value = -value;
  return value;
}

std::string point_text(const Point& pt) { return "(" + std::to_string(pt.x) + "," + std::to_string(pt.y) + ")"; }

}  // namespace

CycNum parse_cyc_value(std::string_view text, int p) {
  const std::string_view s = trim(text);
  if (s.empty()) malformed("empty value", text);
  CycNum total(p);
  std::size_t start = 0;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    // A sign starts a new term unless it follows '^' (a negative exponent).
    const bool boundary = i == s.size() || ((s[i] == '+' || s[i] == '-') && i > start && s[i - 1] != '^');
    if (!boundary) continue;
    total += parse_term(s.substr(start, i - start), negative, p, text);
    if (i < s.size()) negative = s[i] == '-';
    start = i + 1;
  }
  return total;
}

GFunc parse_function_literal(std::string_view text) {
  const auto parts = split(text, ';');
  if (parts.size() != 3) malformed("function literal must be \"p; rank; v0,v1,...\"", text);
  const int p = parse_prime(parts[0], text);
  const long long rank = parse_int(parts[1], text);
  if (rank != 1 && rank != 2) malformed("rank must be 1 or 2", text);
  const auto values = split(parts[2], ',');
  const std::size_t expected = rank == 2 ? static_cast<std::size_t>(p) * p : static_cast<std::size_t>(p);
  if (values.size() != expected) {
    malformed("expected " + std::to_string(expected) + " values, got " + std::to_string(values.size()), text);
  }
  std::vector<CycNum> v;
  v.reserve(expected);
  for (const auto& item : values) v.push_back(parse_cyc_value(item, p));
  return GFunc(p, static_cast<int>(rank), Side::primal, std::move(v));
}

std::string format_function_literal(const GFunc& f) {
  std::string out = std::to_string(f.p()) + "; " + std::to_string(f.rank()) + "; ";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += f[i].to_string();
  }
  return out;
}

PointSet parse_point_set_literal(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) malformed("point set literal must be \"p; (x,y),...\"", text);
  const int p = parse_prime(text.substr(0, semi), text);
  PointSet set(p, Side::primal);
  std::string_view rest = trim(text.substr(semi + 1));
  while (!rest.empty()) {
    if (rest.front() != '(') malformed("expected '('", text);
    const auto close = rest.find(')');
    if (close == std::string_view::npos) malformed("expected ')'", text);
    const auto coords = split(rest.substr(1, close - 1), ',');
    if (coords.size() != 2) malformed("points have two coordinates", text);
    set.insert(Point{mod(parse_int(coords[0], text), p), mod(parse_int(coords[1], text), p), Side::primal});
    rest = trim(rest.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != ',') malformed("expected ','", text);
      rest = trim(rest.substr(1));
    }
  }
  return set;
}

std::string format_point_set_literal(const PointSet& s) {
  std::string out = std::to_string(s.p()) + "; ";
  bool first = true;
  for (const auto& pt : s.points()) {
    if (!first) out += ",";
    out += point_text(pt);
    first = false;
  }
  return out;
}

std::vector<CycNum> parse_alphabet(std::string_view text, int p, bool& twist) {
  std::string_view s = trim(text);
  twist = false;
  if (s.substr(0, 4) == "chi:") {
    twist = true;
    s = trim(s.substr(4));
  }
  if (!s.empty() && s.front() == '{' && s.back() == '}') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) malformed("empty alphabet", text);
  std::vector<CycNum> out;
  for (const auto& item : split(s, ',')) {
    CycNum v = parse_cyc_value(item, p);
    bool seen = false;
    for (const auto& w : out) seen = seen || w == v;
    if (!seen) out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------- json

Json to_json(const CycNum& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(to_fraction_string(r));
  return Json{{"p", c.p()}, {"coeffs", coeffs}, {"text", c.to_string()}};
}

Json to_json(const GFunc& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) {
    Json coeffs = Json::array();
    for (const auto& r : v.coeffs()) coeffs.push_back(to_fraction_string(r));
    values.push_back(coeffs);
  }
  return Json{{"p", f.p()},
              {"rank", f.rank()},
              {"side", to_string(f.side())},
              {"literal", format_function_literal(f)},
              {"values", values}};
}

Json to_json(const Point& pt) { return Json::array({pt.x, pt.y}); }

Json to_json(const PointSet& s) {
  Json pts = Json::array();
  for (const auto& pt : s.points()) pts.push_back(to_json(pt));
  return Json{{"p", s.p()}, {"side", to_string(s.side())}, {"size", s.size()}, {"points", pts}};
}

Json to_json(const ExceptionDescriptor& d) {
  Json j{{"kind", kind_name(d)}, {"p", d.p}, {"on_transform", d.on_transform}, {"directions", d.directions}};
  Json offsets = Json::array(), chars = Json::array(), coeffs = Json::array(), comps = Json::array();
  for (const auto& g : d.offsets) offsets.push_back(to_json(g));
  for (const auto& c : d.characters) chars.push_back(to_json(c));
  for (const auto& c : d.coefficients) coeffs.push_back(to_json(c));
  for (const auto& f : d.components) comps.push_back(to_json(f));
  j["offsets"] = offsets;
  j["characters"] = chars;
  j["coefficients"] = coeffs;
  j["components"] = comps;
  j["sandwich_holds"] = d.sandwich_holds ? Json(*d.sandwich_holds) : Json(nullptr);
  j["sandwich"] = d.sandwich;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j{{"theorem", r.theorem}, {"verdict", to_string(r.verdict)}, {"lhs", r.lhs}, {"rhs", r.rhs},
         {"advisory", r.advisory}};
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  if (r.exception) j["exception"] = to_json(*r.exception);
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const SearchSpace& s) {
  Json alphabet = Json::array();
  for (const auto& a : s.alphabet) alphabet.push_back(a.to_string());
  Json j{{"p", s.p}, {"rank", s.rank}, {"alphabet", alphabet}, {"twist_characters", s.twist_characters},
         {"mode", s.mode == SearchSpace::Mode::exhaustive ? "exhaustive" : "random"}};
  if (s.mode == SearchSpace::Mode::random) {
    j["seed"] = s.seed;
    j["budget"] = s.budget;
  }
  return j;
}

Json to_json(const TheoremTally& t) {
  Json verdicts = Json::object();
  for (std::size_t v = 0; v < t.verdicts.size(); ++v) verdicts[to_string(static_cast<Verdict>(v))] = t.verdicts[v];
  Json witnesses = Json::array();
  for (const auto& w : t.violation_witnesses) witnesses.push_back(format_function_literal(w));
  Json kinds = Json::object();
  for (const auto& [k, n] : t.exception_kinds) kinds[k] = n;
  return Json{{"theorem", t.theorem},
              {"verdicts", verdicts},
              {"skipped", t.skipped},
              {"advisory", t.advisory},
              {"violations", t.violations},
              {"violation_witnesses", witnesses},
              {"first_equality", t.first_equality ? Json(format_function_literal(*t.first_equality)) : Json(nullptr)},
              {"exception_kinds", kinds},
              {"unclassified_exceptions", t.unclassified_exceptions},
              {"reconstruct_failures", t.reconstruct_failures}};
}

namespace {

const char* kCompleteness =
    "values restricted to the searched alphabet; no claim is made about functions outside this space";

}  // namespace

Json to_json(const SweepSummary& s) {
  Json tallies = Json::array();
  for (const auto& t : s.tallies) tallies.push_back(to_json(t));
  return Json{{"space", to_json(s.space)},
              {"candidates", s.candidates},
              {"zero_functions", s.zero_functions},
              {"total_violations", s.total_violations()},
              {"completeness", kCompleteness},
              {"theorems", tallies}};
}

Json to_json(const FrontierMap& m) {
  Json rows = Json::array();
  for (const auto& [key, f] : m.attained) {
    rows.push_back(Json{{"S", key.first}, {"X", key.second}, {"witness", format_function_literal(f)}});
  }
  return Json{{"space", to_json(m.space)}, {"completeness", kCompleteness}, {"attained", rows}};
}

Json to_json(const HuntResult& h) {
  Json examples = Json::array();
  for (const auto& r : h.escaped_examples) examples.push_back(to_json(r));
  return Json{{"theorem", h.theorem},
              {"examined", h.examined},
              {"violations", h.violations},
              {"first_violation", h.first_violation ? to_json(*h.first_violation) : Json(nullptr)},
              {"escaped", h.escaped},
              {"escaped_examples", examples},
              {"completeness", kCompleteness}};
}

CycNum cyc_from_json(const Json& j) {
  const int p = j.at("p").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return CycNum(p, std::move(coeffs));
}

GFunc gfunc_from_json(const Json& j) {
  const int p = j.at("p").get<int>();
  const int rank = j.at("rank").get<int>();
  const Side side = j.at("side").get<std::string>() == "dual" ? Side::dual : Side::primal;
  std::vector<CycNum> values;
  for (const auto& v : j.at("values")) {
    std::vector<Rational> coeffs;
    for (const auto& c : v) coeffs.push_back(parse_rational(c.get<std::string>()));
    values.emplace_back(p, std::move(coeffs));
  }
  return GFunc(p, rank, side, std::move(values));
}

}  // namespace suppbound
