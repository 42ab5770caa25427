#include "hartogs/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "hartogs/error.hpp"

namespace hartogs {
namespace {

// Drops whitespace at the ends and next to punctuation; a space between two
// digits survives so that "1 2" is rejected.
std::string strip_spaces(std::string_view text) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  const auto is_punct = [](char c) { return c == '(' || c == ')' || c == ',' || c == '+' || c == '-'; };
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (!is_space(text[k])) {
      out.push_back(text[k]);
      continue;
    }
    std::size_t next = k;
    while (next < text.size() && is_space(text[next])) ++next;
    if (out.empty() || next == text.size() || is_punct(out.back()) || is_punct(text[next])) {
      k = next - 1;
      continue;
    }
    out.push_back(' ');
    k = next - 1;
  }
  return out;
}

[[noreturn]] void bad_complex(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument, "cannot parse complex number '" + std::string(text) + "'");
}

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty() || !std::isfinite(value)) bad_complex(whole);
  return value;
}

// Coefficient of i: "" or "+" -> 1, "-" -> -1.
double parse_imaginary(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) bad_complex(text);

  if (s.front() == '(') {
    const auto comma = s.find(',');
    if (s.back() != ')' || comma == std::string::npos) bad_complex(text);
    const std::string_view body(s);
    return {parse_real(body.substr(1, comma - 1), text), parse_real(body.substr(comma + 1, s.size() - comma - 2), text)};
  }

  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view body(s);
  if (split == std::string::npos) return {0.0, parse_imaginary(body.substr(0, s.size() - 1), text)};
  return {parse_real(body.substr(0, split), text), parse_imaginary(body.substr(split, s.size() - 1 - split), text)};
}

ComplexVector parse_complex_vector(std::string_view text) {
  ComplexVector out;
  if (strip_spaces(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(';', start);
    out.push_back(parse_complex(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

Json complex_to_json(Complex z) {
  Json j = Json::object();
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im") && j["re"].is_number() &&
      j["im"].is_number())
    return {j["re"].get<double>(), j["im"].get<double>()};
  throw Error(ErrorKind::InvalidArgument, "not a complex number: " + j.dump());
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "expected an array of complex numbers");
  ComplexVector out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(complex_from_json(item));
  return out;
}

Json exact_to_json(const ExactInt& x) { return x.str(); }

Json point_to_json(const DomainPoint& p) {
  Json j = Json::object();
  j["z"] = vector_to_json(p.z());
  j["zeta"] = vector_to_json(p.zeta());
  return j;
}

Json verdict_to_json(const LuQiKengVerdict& verdict) {
  Json j = Json::object();
  j["status"] = std::string(to_string(verdict.status));
  j["witness_root"] = verdict.witness_root ? complex_to_json(*verdict.witness_root) : Json(nullptr);
  j["provenance"] = std::string(to_string(verdict.provenance));
  j["note"] = verdict.note;
  return j;
}

Json witness_to_json(const Witness& witness) {
  Json j = Json::object();
  j["point_a"] = point_to_json(witness.point_a);
  j["point_b"] = point_to_json(witness.point_b);
  j["alpha"] = complex_to_json(witness.alpha);
  j["kernel_value"] = complex_to_json(witness.kernel_value);
  return j;
}

Json OutputRecord::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["diagnostics"] = diagnostics;
  return j;
}

OutputRecord OutputRecord::from_json(const Json& j) {
  const auto fail = [](const std::string& why) -> OutputRecord {
    throw Error(ErrorKind::InvalidArgument, "invalid output record: " + why);
  };
  if (!j.is_object()) return fail("not an object");
  if (j.size() != 4) return fail("expected exactly 4 keys");
  for (const char* key : {"command", "inputs", "result", "diagnostics"})
    if (!j.contains(key)) return fail(std::string("missing key '") + key + "'");
  if (!j["command"].is_string()) return fail("command must be a string");
  if (!j["inputs"].is_object()) return fail("inputs must be an object");
  if (!j["result"].is_object()) return fail("result must be an object");
  if (!j["diagnostics"].is_array()) return fail("diagnostics must be an array");

  OutputRecord record;
  record.command = j["command"].get<std::string>();
  record.inputs = j["inputs"];
  record.result = j["result"];
  for (const auto& d : j["diagnostics"]) {
    if (!d.is_string()) return fail("diagnostics entries must be strings");
    record.diagnostics.push_back(d.get<std::string>());
  }
  return record;
}

std::string format_double(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

}  // namespace hartogs
