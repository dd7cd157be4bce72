#include "suppbound/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "suppbound/io.hpp"

namespace suppbound {

namespace {

struct RunConfig {
  std::string subcommand;
  int p = 3;
  int rank = 2;
  std::string alphabet = "-1,0,1";
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::vector<std::string> theorems;
  std::optional<int> k;
  std::string epsilon = "1/2";
  std::string out;
  std::string format;
  int jobs = 1;
  // Inputs of individual subcommands.
  std::string function;
  std::string family;
  std::string file;
  std::string points;
  std::string query;
  bool verify_descriptors = false;
};

struct Output {
  Json result;
  std::string csv;  // used when the format is csv
  bool violation = false;
};

Json to_json(const RunConfig& c) {
  Json j{{"subcommand", c.subcommand}, {"p", c.p},         {"rank", c.rank},
         {"alphabet", c.alphabet},     {"seed", c.seed},   {"budget", c.budget},
         {"theorems", c.theorems},     {"k", c.k ? Json(*c.k) : Json(nullptr)},
         {"epsilon", c.epsilon},       {"out", c.out},     {"format", c.format},
         {"jobs", c.jobs}};
  if (!c.function.empty()) j["function"] = c.function;
  if (!c.family.empty()) j["family"] = c.family;
  if (!c.file.empty()) j["file"] = c.file;
  if (!c.points.empty()) j["points"] = c.points;
  if (!c.query.empty()) j["query"] = c.query;
  if (c.verify_descriptors) j["verify_descriptors"] = true;
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_header(const RunConfig& c) {
  return std::string("# suppbound ") + kVersion + "\n# config: " + to_json(c).dump() + "\n";
}

std::string approx(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << v;
  return s.str();
}

// ---------------------------------------------------------------- inputs

GFunc input_function(const RunConfig& c) {
  const int given = (!c.function.empty()) + (!c.family.empty()) + (!c.file.empty());
  if (given != 1) throw std::invalid_argument("give exactly one of --function, --family, --file");
  if (!c.function.empty()) return parse_function_literal(c.function);
  if (!c.family.empty()) return construct(c.family, c.p).f;
  std::ifstream in(c.file);
  if (!in) throw std::invalid_argument("cannot read " + c.file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return gfunc_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("malformed function file: ") + e.what());
    }
  }
  return parse_function_literal(text);
}

SearchSpace input_space(const RunConfig& c) {
  SearchSpace s;
  s.p = c.p;
  s.rank = c.rank;
  require_prime(c.p);
  s.alphabet = parse_alphabet(c.alphabet, c.p, s.twist_characters);
  if (c.budget > 0) {
    s.mode = SearchSpace::Mode::random;
    s.seed = c.seed;
    s.budget = c.budget;
  }
  s.validate();
  return s;
}

// Expands the theorem list into evaluator specs; conjecture without --k
// covers every k, sxmn covers every direction.
std::vector<CheckSpec> input_checks(const RunConfig& c, int p, bool expand_directions) {
  std::vector<std::string> ids = c.theorems.empty() ? theorem_ids() : c.theorems;
  const Rational eps = parse_rational(c.epsilon);
  std::vector<CheckSpec> out;
  for (const auto& id : ids) {
    if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end()) {
      throw std::invalid_argument("unknown theorem id: " + id);
    }
    CheckSpec spec;
    spec.theorem = id;
    spec.epsilon = eps;
    if (id == "conjecture") {
      if (c.k) {
        if (*c.k < 1 || *c.k > p) throw std::invalid_argument("--k must lie in [1, p]");
        spec.k = *c.k;
        out.push_back(spec);
      } else {
        for (int k = 1; k <= p; ++k) {
          spec.k = k;
          out.push_back(spec);
        }
      }
    } else if (id == "sxmn" && expand_directions) {
      for (int d = 0; d <= p; ++d) {
        spec.direction = d;
        out.push_back(spec);
      }
    } else {
      out.push_back(spec);
    }
  }
  if ((std::find(ids.begin(), ids.end(), "as2") != ids.end() || std::find(ids.begin(), ids.end(), "as3") != ids.end()) &&
      (sgn(eps) <= 0 || eps >= 1)) {
    throw std::invalid_argument("--epsilon must lie in (0, 1)");
  }
  return out;
}

std::string spec_label(const CheckSpec& s) {
  if (s.theorem == "conjecture") return "conjecture[k=" + std::to_string(s.k) + "]";
  if (s.theorem == "sxmn") return "sxmn[H=" + std::to_string(s.direction) + "]";
  return s.theorem;
}

// ---------------------------------------------------------------- commands

Output cmd_verify(const RunConfig& c) {
  const GFunc f = input_function(c);
  if (f.is_zero()) throw std::invalid_argument("the zero function has no support bounds");
  const Analysis a = analyze(f);
  Output o;
  Json reports = Json::array();
  o.csv = "check,verdict,lhs,rhs,advisory\n";
  for (const auto& spec : input_checks(c, f.p(), true)) {
    if (!applicable(spec, a)) {
      reports.push_back(Json{{"theorem", spec_label(spec)}, {"verdict", "not-applicable"}});
      o.csv += spec_label(spec) + ",not-applicable,,,\n";
      continue;
    }
    const BoundReport r = evaluate(spec, a);
    o.violation = o.violation || r.is_violation();
    Json j = to_json(r);
    j["theorem"] = spec_label(spec);
    reports.push_back(std::move(j));
    o.csv += spec_label(spec) + "," + to_string(r.verdict) + "," + csv_quote(r.lhs) + "," + csv_quote(r.rhs) + "," +
             (r.advisory ? "true" : "false") + "\n";
  }
  o.result = Json{{"function", format_function_literal(f)},
                  {"S", a.s_size},
                  {"X", a.x_size},
                  {"reports", reports}};
  return o;
}

Output cmd_classify(const RunConfig& c) {
  const GFunc f = input_function(c);
  if (f.rank() != 2) throw std::invalid_argument("classify needs a rank-2 function");
  if (f.is_zero()) throw std::invalid_argument("the zero function has no exception form");
  const Analysis a = analyze(f);
  const auto d = classify_exception(a);
  Output o;
  o.result = Json{{"function", format_function_literal(f)},
                  {"S", a.s_size},
                  {"X", a.x_size},
                  {"exception", d ? to_json(*d) : Json(nullptr)},
                  {"reconstructs", d ? Json(reconstruct(*d) == f) : Json(nullptr)}};
  o.csv = "kind,on_transform,reconstructs\n";
  o.csv += d ? kind_name(*d) + "," + (d->on_transform ? "true" : "false") + "," +
                   (reconstruct(*d) == f ? "true" : "false") + "\n"
             : "none,,\n";
  return o;
}

Output cmd_sweep(const RunConfig& c) {
  const SearchSpace space = input_space(c);
  const SweepSummary s = sweep(space, input_checks(c, c.p, false), c.jobs, c.verify_descriptors);
  Output o;
  o.result = to_json(s);
  o.violation = s.total_violations() > 0;
  o.csv = "theorem,holds,holds-with-equality,exception,violated,hypothesis-fails,skipped,advisory,violations\n";
  for (std::size_t i = 0; i < s.tallies.size(); ++i) {
    const auto& t = s.tallies[i];
    o.csv += t.theorem;
    for (auto v : t.verdicts) o.csv += "," + std::to_string(v);
    o.csv += "," + std::to_string(t.skipped) + "," + std::to_string(t.advisory) + "," + std::to_string(t.violations) + "\n";
  }
  return o;
}

Output cmd_hunt(const RunConfig& c) {
  if (c.theorems.size() != 1) throw std::invalid_argument("hunt needs exactly one --theorem");
  const SearchSpace space = input_space(c);
  const auto checks = input_checks(c, c.p, false);
  if (checks.size() != 1) throw std::invalid_argument("hunt needs a single check; pass --k for the conjecture");
  const HuntResult h = hunt(checks.front(), space, c.jobs);
  Output o;
  o.result = to_json(h);
  o.result["space"] = to_json(space);
  o.violation = h.first_violation.has_value();
  o.csv = "theorem,examined,violations,escaped,first_violation\n" + h.theorem + "," + std::to_string(h.examined) +
          "," + std::to_string(h.violations) + "," + std::to_string(h.escaped) + "," +
          (h.first_violation ? csv_quote(format_function_literal(*h.first_violation->witness)) : "") + "\n";
  return o;
}

Output cmd_frontier(const RunConfig& c) {
  const SearchSpace space = input_space(c);
  const FrontierMap m = frontier(space, c.jobs);
  Output o;
  o.result = to_json(m);
  Json dots = Json::array();
  for (const auto& [s, x] : yellow_dots(c.p)) dots.push_back(Json::array({s, x}));
  o.result["yellow_dots"] = dots;
  o.csv = "S,X,witness\n";
  for (const auto& [key, f] : m.attained) {
    o.csv += std::to_string(key.first) + "," + std::to_string(key.second) + "," + csv_quote(format_function_literal(f)) + "\n";
  }
  return o;
}

Output cmd_geometry(const RunConfig& c) {
  Output o;
  if (c.query == "blocking-min") {
    const int p = c.points.empty() ? c.p : parse_point_set_literal(c.points).p();
    const BlockingResult r = min_blocking_size(p);
    o.result = Json{{"query", c.query}, {"p", p}, {"size", r.size}, {"witness", format_point_set_literal(r.witness)}};
    o.csv = "p,size,witness\n" + std::to_string(p) + "," + std::to_string(r.size) + "," +
            csv_quote(format_point_set_literal(r.witness)) + "\n";
    return o;
  }
  if (c.points.empty()) throw std::invalid_argument("geometry " + c.query + " needs --points");
  const PointSet pts = parse_point_set_literal(c.points);
  o.result = Json{{"query", c.query}, {"points", format_point_set_literal(pts)}, {"size", pts.size()}};
  if (c.query == "directions") {
    const auto dirs = directions_determined(pts);
    o.result["directions"] = dirs;
    o.result["count"] = dirs.size();
    o.csv = "count,directions\n" + std::to_string(dirs.size()) + ",";
    std::string list;
    for (int d : dirs) list += (list.empty() ? "" : " ") + std::to_string(d);
    o.csv += csv_quote(list) + "\n";
  } else if (c.query == "pencil") {
    const PencilCheck r = pencil_stability_check(pts);
    o.result["blocking"] = r.blocking;
    o.result["k"] = r.k;
    o.result["m"] = r.m;
    o.result["bound"] = r.bound;
    o.result["bound_holds"] = r.bound_holds;
    o.violation = !r.bound_holds;
    o.csv = "blocking,k,m,bound,bound_holds\n" + std::string(r.blocking ? "true" : "false") + "," +
            std::to_string(r.k) + "," + std::to_string(r.m) + "," + std::to_string(r.bound) + "," +
            (r.bound_holds ? "true" : "false") + "\n";
  } else if (c.query == "rich-direction") {
    const auto d = rich_direction_search(pts);
    o.result["direction"] = d ? Json(*d) : Json(nullptr);
    o.csv = "direction\n" + (d ? std::to_string(*d) : std::string()) + "\n";
  } else {
    throw std::invalid_argument("unknown geometry query: " + c.query);
  }
  return o;
}

// ---------------------------------------------------------------- curves

struct CurveRow {
  std::string curve;
  int s = 0;
  std::string exact;
  double value = 0;
};

// Points (S, X) with w_min * min + w_max * max = rhs.
void linear_rows(std::vector<CurveRow>& rows, const std::string& name, const Rational& w_min, const Rational& w_max,
                 const Rational& rhs, int p) {
  for (int s = 1; s <= p * p; ++s) {
    const Rational S(s);
    std::vector<Rational> xs;
    const Rational as_min = (rhs - w_min * S) / w_max;  // S is the smaller size
    if (sgn(as_min) > 0 && as_min >= S) xs.push_back(as_min);
    const Rational as_max = (rhs - w_max * S) / w_min;  // S is the larger size
    if (sgn(as_max) > 0 && as_max <= S && (xs.empty() || xs.front() != as_max)) xs.push_back(as_max);
    for (const auto& x : xs) rows.push_back({name, s, to_string(x), x.get_d()});
  }
}

void hyperbola_rows(std::vector<CurveRow>& rows, const std::string& name, const Rational& product, int p) {
  for (int s = 1; s <= p * p; ++s) {
    const Rational x = product / s;
    rows.push_back({name, s, to_string(x), x.get_d()});
  }
}

Output cmd_emit_curves(const RunConfig& c) {
  require_prime(c.p);
  const int p = c.p;
  std::vector<CurveRow> rows;
  hyperbola_rows(rows, "theoremA", Rational(p * p), p);
  linear_rows(rows, "meshulam", 1, Rational(1, p), p + 1, p);
  if (p >= 3) {
    linear_rows(rows, "rational", Rational(1, 2), Rational(1, p - 1), p + 1, p);
    linear_rows(rows, "kp1", Rational(1, p - 1), Rational(1, 2), p + 1, p);
    hyperbola_rows(rows, "uppergray", Rational(3 * p * (p - 2)), p);
  }
  if (p >= 5) linear_rows(rows, "kp2", Rational(1, p - 2), Rational(1, 3), p + 1, p);
  for (int s = 1; s <= p * p; ++s) {
    const auto r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s))));
    const double root = std::sqrt(static_cast<double>(s));
    const double x = (p + 1 - root) * (p + 1 - root);
    const std::string exact = r * r == s ? std::to_string((p + 1 - r) * (p + 1 - r))
                                         : "(" + std::to_string(p + 1) + "-sqrt(" + std::to_string(s) + "))^2";
    rows.push_back({"roots", s, exact, x});
  }
  for (int k = 1; k <= p; ++k) {
    linear_rows(rows, "conjecture_k" + std::to_string(k), Rational(1, k), Rational(1, p + 1 - k), p + 1, p);
  }
  for (const auto& [s, x] : yellow_dots(p)) rows.push_back({"yellow_dots", s, std::to_string(x), static_cast<double>(x)});

  Output o;
  Json arr = Json::array();
  o.csv = "curve,S,X_exact,X_approx\n";
  for (const auto& r : rows) {
    arr.push_back(Json{{"curve", r.curve}, {"S", r.s}, {"X_exact", r.exact}, {"X_approx", approx(r.value)}});
    o.csv += r.curve + "," + std::to_string(r.s) + "," + r.exact + "," + approx(r.value) + "\n";
  }
  o.result = Json{{"p", p}, {"rows", arr}};
  return o;
}

// ---------------------------------------------------------------- driver

int emit(const RunConfig& c, const Output& o, std::ostream& out, std::ostream& err) {
  std::string text;
  if (c.format == "csv") {
    text = csv_header(c) + o.csv;
  } else {
    Json doc{{"tool", "suppbound"}, {"version", kVersion}, {"config", to_json(c)}, {"result", o.result}};
    text = doc.dump(2) + "\n";
  }
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream file(c.out);
    if (!file) {
      err << "error: cannot write " << c.out << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return o.violation ? kExitViolation : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Fourier support-uncertainty bounds on F_p and F_p^2", "suppbound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  int k_value = 0;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime p");
    sub->add_option("--theorem", cfg.theorems, "theorem ids (comma separated)")->delimiter(',');
    sub->add_option("--k", k_value, "conjecture parameter k");
    sub->add_option("--epsilon", cfg.epsilon, "epsilon for as2/as3, e.g. 1/4");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto space_opts = [&](CLI::App* sub) {
    sub->add_option("--alphabet", cfg.alphabet, "values, e.g. \"-1,0,1\"; prefix chi: to twist by characters");
    sub->add_option("--rank", cfg.rank, "1 or 2");
    sub->add_option("--seed", cfg.seed, "seed for random mode");
    sub->add_option("--budget", cfg.budget, "random samples; 0 means exhaustive");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  const auto function_opts = [&](CLI::App* sub) {
    sub->add_option("--function", cfg.function, "literal \"p; rank; v0,v1,...\"");
    sub->add_option("--family", cfg.family, "gallery family, built at --p");
    sub->add_option("--file", cfg.file, "file holding a literal or a JSON function");
  };

  CLI::App* verify = app.add_subcommand("verify", "evaluate bounds on one function");
  common(verify);
  function_opts(verify);
  CLI::App* classify = app.add_subcommand("classify", "exception form of one function");
  common(classify);
  function_opts(classify);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate bounds over a function space");
  common(sweep_cmd);
  space_opts(sweep_cmd);
  sweep_cmd->add_flag("--verify-descriptors", cfg.verify_descriptors, "rebuild every exception descriptor");
  CLI::App* hunt_cmd = app.add_subcommand("hunt", "search a space for a violation");
  common(hunt_cmd);
  space_opts(hunt_cmd);
  CLI::App* frontier_cmd = app.add_subcommand("frontier", "attained (|S|,|X|) pairs");
  common(frontier_cmd);
  space_opts(frontier_cmd);
  CLI::App* geometry = app.add_subcommand("geometry", "point-set queries");
  common(geometry);
  geometry->add_option("query", cfg.query, "blocking-min | directions | pencil | rich-direction")
      ->required()
      ->check(CLI::IsMember({"blocking-min", "directions", "pencil", "rich-direction"}));
  geometry->add_option("--points", cfg.points, "literal \"p; (x1,y1),(x2,y2),...\"");
  CLI::App* curves = app.add_subcommand("emit-curves", "boundary curves of every bound");
  common(curves);

  std::vector<const char*> argv{"suppbound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  const CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  if (chosen->count("--k") > 0) cfg.k = k_value;
  if (cfg.format.empty()) cfg.format = cfg.subcommand == "emit-curves" ? "csv" : "json";

  try {
    Output o;
    if (cfg.subcommand == "verify") o = cmd_verify(cfg);
    else if (cfg.subcommand == "classify") o = cmd_classify(cfg);
    else if (cfg.subcommand == "sweep") o = cmd_sweep(cfg);
    else if (cfg.subcommand == "hunt") o = cmd_hunt(cfg);
    else if (cfg.subcommand == "frontier") o = cmd_frontier(cfg);
    else if (cfg.subcommand == "geometry") o = cmd_geometry(cfg);
    else o = cmd_emit_curves(cfg);
    return emit(cfg, o, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace suppbound
