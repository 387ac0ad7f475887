// JSON formats: configurations, PL functions and report values.

#ifndef HURWITZ_IO_HPP
#define HURWITZ_IO_HPP

#include "hurwitz/kstability.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hurwitz {

using Json = nlohmann::json;

/// {"name": string, "points": [[int, ...], ...]}; labels follow file order.
/// Throws Error(BadConfig) with the offending line or field.
PointConfiguration parse_config(std::string_view text);

/// A built-in fixture name or a path to a configuration file.
PointConfiguration load_config(const std::string& source);

/// {"heights": {"<label>": rational, ...}} with every label present, or
/// {"affine": [[a_1, ..., a_n, c], ...]}.  Rationals are JSON integers or
/// "p/q" strings.
PLFunction parse_pl_function(std::string_view text, const PointConfiguration& config);

/// Integers as JSON numbers, everything else as "p/q".
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const std::vector<IntVector>& vs);

std::string read_file(const std::string& path);
/// Pretty-printed with sorted keys, arrays of scalars on one line and a
/// trailing newline.
std::string dump(const Json& j);

}  // namespace hurwitz

#endif
