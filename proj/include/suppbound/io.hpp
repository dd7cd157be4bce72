#ifndef SUPPBOUND_IO_HPP
#define SUPPBOUND_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "suppbound/bounds.hpp"
#include "suppbound/search.hpp"

namespace suppbound {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// A sum of terms "c", "cz", "cz^k", "c*z^k" with integer or fractional c,
/// e.g. "1-1/2z^3" or "z^-1+2". Throws std::invalid_argument.
CycNum parse_cyc_value(std::string_view text, int p);

/// "p; rank; v0,v1,..." with p^rank values in point-index order.
GFunc parse_function_literal(std::string_view text);
std::string format_function_literal(const GFunc& f);

/// "p; (x1,y1),(x2,y2),..." on the primal side.
PointSet parse_point_set_literal(std::string_view text);
std::string format_point_set_literal(const PointSet& s);

/// Comma-separated values, optionally in braces; a "chi:" prefix asks for
/// character-twisted spaces. Returns the values and sets twist.
std::vector<CycNum> parse_alphabet(std::string_view text, int p, bool& twist);

Json to_json(const CycNum& c);
Json to_json(const GFunc& f);
Json to_json(const PointSet& s);
Json to_json(const Point& pt);
Json to_json(const ExceptionDescriptor& d);
Json to_json(const BoundReport& r);
Json to_json(const SearchSpace& s);
Json to_json(const TheoremTally& t);
Json to_json(const SweepSummary& s);
Json to_json(const FrontierMap& m);
Json to_json(const HuntResult& h);

CycNum cyc_from_json(const Json& j);
GFunc gfunc_from_json(const Json& j);

}  // namespace suppbound

#endif  // SUPPBOUND_IO_HPP
