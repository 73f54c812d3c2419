#ifndef LYDIM_IO_HPP
#define LYDIM_IO_HPP

#include <string>

#include <json.hpp>

#include "lydim/coupled_map.hpp"
#include "lydim/ifs.hpp"

namespace lydim {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so emitted documents are byte-stable.
double round12(double x);

/// Map description:
///   { "domain": [lo, hi], "matrix": "1,1;1,0",
///     "branches": [ { "interval": [a, b], "lambda": l, "sign": "+"|"-" } ] }
/// Numeric fields accept JSON numbers or exact strings ("20/9", "0.45");
/// loading runs synthesize(), so the branch offsets are derived, not stored.
PiecewiseExpandingMap map_from_json(const Json& doc);
Json map_to_json(const PiecewiseExpandingMap& f);

/// IFS description:
///   { "seed": [lo, hi], "maps": [ { "ratio": r, "offset": b, "reflect": bool } ] }
SimilarityIFS ifs_from_json(const Json& doc);
Json ifs_to_json(const SimilarityIFS& ifs);

/// Rational from a JSON number (exact binary value) or string literal.
Rational rational_from_json(const Json& value);

Json interval_to_json(const Interval& iv);

}  // namespace lydim

#endif  // LYDIM_IO_HPP
