#pragma once

#include "binsum/bigint.hpp"
#include "binsum/witness.hpp"

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binsum {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace json_detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

// Integers travel as decimal strings; plain JSON numbers are accepted too.
inline BigInt big_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  try {
    if (v.is_string()) return parse_big(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(v.dump(), 10);
  } catch (const std::invalid_argument&) {
  }
  throw FormatError(std::string("field \"") + key + "\" is not an integer");
}

inline std::uint64_t u64_field(const Json& j, const char* key) {
  BigInt v = big_field(j, key);
  if (!fits_u64(v)) throw FormatError(std::string("field \"") + key + "\" out of range");
  return to_u64(v);
}

inline long long_field(const Json& j, const char* key) {
  BigInt v = big_field(j, key);
  if (!v.fits_slong_p()) throw FormatError(std::string("field \"") + key + "\" out of range");
  return v.get_si();
}

inline bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw FormatError(std::string("field \"") + key + "\" is not a boolean");
  return v.get<bool>();
}

inline std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw FormatError(std::string("field \"") + key + "\" is not a string");
  return v.get<std::string>();
}

}  // namespace json_detail

/// {n, r, p, bound, route, index, verified}; index is omitted when the
/// route has no witness index.
inline Json to_json(const Certificate& c) {
  Json j;
  j["n"] = std::to_string(c.n);
  j["r"] = std::to_string(c.r);
  j["p"] = to_string(c.witness_prime);
  j["bound"] = c.claimed_bound;
  j["route"] = std::string(route_name(c.route));
  if (c.witness_index) j["index"] = std::to_string(*c.witness_index);
  j["verified"] = c.verified;
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  using namespace json_detail;
  Certificate c;
  c.n = u64_field(j, "n");
  c.r = u64_field(j, "r");
  c.witness_prime = big_field(j, "p");
  c.claimed_bound = long_field(j, "bound");
  auto route = parse_route(string_field(j, "route"));
  if (!route) throw FormatError("unknown route \"" + string_field(j, "route") + "\"");
  c.route = *route;
  if (j.contains("index") && !j.at("index").is_null()) c.witness_index = u64_field(j, "index");
  c.verified = j.contains("verified") && bool_field(j, "verified");
  return c;
}

inline Certificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

inline Json to_json(const Counterexample& c) {
  Json j;
  j["n"] = std::to_string(c.n);
  j["r"] = std::to_string(c.r);
  j["value"] = c.value.str();
  j["counterexample"] = true;
  return j;
}

}  // namespace binsum
