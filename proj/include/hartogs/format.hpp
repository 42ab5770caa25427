#pragma once

// Text and JSON encodings shared by the CLI and its tests.
//
// Complex numbers serialize as {"re": x, "im": y}; exact integers as
// decimal strings. Objects keep insertion order so output is byte-stable.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hartogs/int_polynomial.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/luqikeng.hpp"

namespace hartogs {

using Json = nlohmann::ordered_json;

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" and "(a,b)", with optional
/// whitespace. Throws Error(InvalidArgument).
Complex parse_complex(std::string_view text);

/// Semicolon-separated components, e.g. "0.1+0.2i; (0,1)". Empty text is
/// the empty vector.
ComplexVector parse_complex_vector(std::string_view text);

Json complex_to_json(Complex z);
/// Accepts {"re","im"} objects, [re, im] arrays, strings in parse_complex
/// syntax and bare numbers.
Complex complex_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

Json exact_to_json(const ExactInt& x);
Json point_to_json(const DomainPoint& p);
Json verdict_to_json(const LuQiKengVerdict& verdict);
Json witness_to_json(const Witness& witness);

/// Envelope of every CLI result.
struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> diagnostics;

  Json to_json() const;
  /// Strict: exactly the four keys, with the expected types.
  /// Throws Error(InvalidArgument).
  static OutputRecord from_json(const Json& j);
};

/// %.17g
std::string format_double(double x);

}  // namespace hartogs
