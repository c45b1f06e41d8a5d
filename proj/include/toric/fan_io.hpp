#ifndef TORIC_FAN_IO_HPP
#define TORIC_FAN_IO_HPP

// JSON fan documents:
//
//   {
//     "lattice_dim": 3,
//     "rays": [[1, 1, 1], [-1, 1, 1], ...],
//     "max_cones": [[0, 1, 4], ...],
//     "divisor": [0, 1, ...]            (optional, one integer per ray)
//   }
//
// Integers are arbitrary precision. They are written as JSON numbers when they
// fit in 64 bits and as decimal strings otherwise; both forms are read back.
// Serialization is canonical: rays in the fan's order, each cone's indices
// ascending, cones in lexicographic order.

#include <toric/divisor.hpp>
#include <toric/fan.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace toric {

using json = nlohmann::json;

/// Parse failure carrying the location (a JSON pointer, or a byte offset for
/// syntax errors).
class FanParseError : public ToricError {
 public:
  FanParseError(const std::string& location, const std::string& message)
      : ToricError(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

inline json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

inline Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const ToricError&) {
      throw FanParseError(where, "expected a decimal integer string");
    }
  }
  throw FanParseError(where, "expected an integer");
}

inline json vector_to_json(const LatticeVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

inline json fan_to_json(const Fan& f) {
  json doc;
  doc["lattice_dim"] = f.dim();
  doc["rays"] = json::array();
  for (const auto& r : f.rays()) doc["rays"].push_back(vector_to_json(r));
  doc["max_cones"] = json::array();
  for (const auto& c : f.max_cones()) doc["max_cones"].push_back(c);
  return doc;
}

/// Canonical text: one ray or cone per line.
inline std::string serialize_fan(const Fan& f, const std::optional<TDivisor>& divisor = std::nullopt) {
  std::ostringstream os;
  os << "{\n  \"lattice_dim\": " << f.dim() << ",\n  \"rays\": [";
  for (std::size_t i = 0; i < f.n_rays(); ++i)
    os << (i ? ",\n    " : "\n    ") << vector_to_json(f.ray(i)).dump();
  os << (f.n_rays() ? "\n  ]" : "]") << ",\n  \"max_cones\": [";
  for (std::size_t k = 0; k < f.n_max_cones(); ++k)
    os << (k ? ",\n    " : "\n    ") << json(f.max_cone(k)).dump();
  os << (f.n_max_cones() ? "\n  ]" : "]");
  if (divisor) os << ",\n  \"divisor\": " << vector_to_json(LatticeVector(divisor->coeffs())).dump();
  os << "\n}\n";
  return os.str();
}

struct FanDocument {
  Fan fan;
  std::optional<TDivisor> divisor;
};

inline FanDocument parse_fan_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FanParseError("byte " + std::to_string(e.byte), "malformed JSON document");
  }
  if (!doc.is_object()) throw FanParseError("/", "expected a JSON object");
  for (const char* key : {"lattice_dim", "rays", "max_cones"})
    if (!doc.contains(key)) throw FanParseError("/", std::string("missing field '") + key + "'");

  const json& jd = doc["lattice_dim"];
  if (!jd.is_number_integer() || jd.get<long long>() <= 0)
    throw FanParseError("/lattice_dim", "expected a positive integer");
  const std::size_t dim = jd.get<std::size_t>();

  const json& jr = doc["rays"];
  if (!jr.is_array()) throw FanParseError("/rays", "expected an array");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string where = "/rays/" + std::to_string(i);
    if (!jr[i].is_array()) throw FanParseError(where, "expected an array of integers");
    if (jr[i].size() != dim)
      throw FanParseError(where, "ray has " + std::to_string(jr[i].size()) + " entries, expected " + std::to_string(dim));
    std::vector<Integer> entries;
    for (std::size_t j = 0; j < dim; ++j) entries.push_back(integer_from_json(jr[i][j], where + "/" + std::to_string(j)));
    LatticeVector v(std::move(entries));
    if (v.is_zero()) throw FanParseError(where, "ray is zero");
    if (!v.is_primitive()) throw FanParseError(where, "ray not primitive");
    rays.push_back(std::move(v));
  }

  const json& jc = doc["max_cones"];
  if (!jc.is_array()) throw FanParseError("/max_cones", "expected an array");
  std::vector<RaySet> cones;
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const std::string where = "/max_cones/" + std::to_string(k);
    if (!jc[k].is_array() || jc[k].empty()) throw FanParseError(where, "expected a nonempty array of ray indices");
    RaySet c;
    for (std::size_t j = 0; j < jc[k].size(); ++j) {
      const json& x = jc[k][j];
      const std::string at = where + "/" + std::to_string(j);
      if (!x.is_number_integer() || x.get<long long>() < 0) throw FanParseError(at, "expected a ray index");
      std::size_t idx = x.get<std::size_t>();
      if (idx >= rays.size())
        throw FanParseError(at, "cone index " + std::to_string(idx) + " out of range (" + std::to_string(rays.size()) + " rays)");
      c.push_back(idx);
    }
    cones.push_back(std::move(c));
  }

  FanDocument out;
  try {
    out.fan = Fan(dim, std::move(rays), std::move(cones));
  } catch (const FanError& e) {
    throw FanParseError("/max_cones", e.what());
  }
  if (doc.contains("divisor")) {
    const json& jdiv = doc["divisor"];
    if (!jdiv.is_array()) throw FanParseError("/divisor", "expected an array of integers");
    if (jdiv.size() != out.fan.n_rays())
      throw FanParseError("/divisor", "divisor has " + std::to_string(jdiv.size()) + " coefficients, expected " +
                                          std::to_string(out.fan.n_rays()));
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < jdiv.size(); ++i) coeffs.push_back(integer_from_json(jdiv[i], "/divisor/" + std::to_string(i)));
    out.divisor = TDivisor(std::move(coeffs));
  }
  return out;
}

inline Fan parse_fan(const std::string& text) { return parse_fan_document(text).fan; }

/// Comma-separated integers, e.g. "1,0,-2".
inline TDivisor parse_divisor_list(const std::string& text) {
  std::vector<Integer> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ToricError("empty entry in divisor list '" + text + "'");
    coeffs.push_back(parse_integer(item.substr(b, e - b + 1)));
  }
  if (coeffs.empty()) throw ToricError("empty divisor list");
  return TDivisor(std::move(coeffs));
}

inline LatticeVector parse_vector_list(const std::string& text) {
  return LatticeVector(parse_divisor_list(text).coeffs());
}

/// The same fan with rays sorted lexicographically (cones re-indexed).
inline Fan canonicalize(const Fan& f) {
  std::vector<std::size_t> order(f.n_rays());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f.ray(a) < f.ray(b); });
  std::vector<std::size_t> new_index(f.n_rays());
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    rays.push_back(f.ray(order[i]));
  }
  std::vector<RaySet> cones;
  for (const auto& c : f.max_cones()) {
    RaySet s;
    for (std::size_t i : c) s.push_back(new_index[i]);
    cones.push_back(std::move(s));
  }
  return Fan(f.dim(), std::move(rays), std::move(cones));
}

}  // namespace toric

#endif  // TORIC_FAN_IO_HPP
