#ifndef TORIC_CERTIFICATE_IO_HPP
#define TORIC_CERTIFICATE_IO_HPP

// JSON form of TrivialityCertificate. Rationals are {"num": "<int>", "den": "<int>"}
// with decimal strings; ray indices are 0-based.

#include <toric/certificate.hpp>
#include <toric/fan_io.hpp>

#include <string>
#include <vector>

namespace toric {

class CertificateParseError : public ToricError {
 public:
  using ToricError::ToricError;
};

inline json rational_to_json(const Rational& q) {
  return json{{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

inline Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string())
    throw CertificateParseError("expected a rational {\"num\": ..., \"den\": ...}");
  Integer num = parse_integer(j["num"].get<std::string>());
  Integer den = parse_integer(j["den"].get<std::string>());
  if (den == 0) throw CertificateParseError("rational with zero denominator");
  return Rational(num, den);
}

inline json rationals_to_json(const RationalVector& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(rational_to_json(q));
  return arr;
}

inline RationalVector rationals_from_json(const json& j) {
  if (!j.is_array()) throw CertificateParseError("expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

inline json certificate_to_json(const TrivialityCertificate& c) {
  json doc;
  doc["format"] = "toric-triviality-certificate";
  doc["version"] = 1;
  doc["n_rays"] = c.n_rays;
  doc["configuration"]["ray_index"] = c.configuration.ray_index;
  doc["configuration"]["pairs"] = json::array();
  for (const auto& p : c.configuration.pairs)
    doc["configuration"]["pairs"].push_back(
        {{"cone_index", p.cone_index}, {"cone_rays", p.cone_rays}, {"external_ray", p.external_ray}});
  doc["witnesses"] = json::array();
  for (const auto& w : c.witnesses)
    doc["witnesses"].push_back({{"cone_rays", w.cone_rays},
                                {"external_ray", w.external_ray},
                                {"coefficients", rationals_to_json(w.coefficients)},
                                {"functional", rationals_to_json(w.functional)}});
  doc["summation"] = {{"multipliers", rationals_to_json(c.summation.multipliers)},
                      {"combined", rationals_to_json(c.summation.combined)},
                      {"zero_forced", c.summation.zero_forced}};
  doc["positively_spanning"] = c.positively_spanning;
  doc["conclusion"] = {{"sections_polytope_is_origin", c.conclusion.sections_polytope_is_origin},
                       {"every_ray_in_a_max_cone", c.conclusion.every_ray_in_a_max_cone},
                       {"trivial", c.conclusion.trivial}};
  return doc;
}

inline TrivialityCertificate certificate_from_json(const json& doc) {
  try {
    if (doc.value("format", std::string()) != "toric-triviality-certificate")
      throw CertificateParseError("not a triviality certificate document");
    TrivialityCertificate c;
    c.n_rays = doc.at("n_rays").get<std::size_t>();
    const json& cfg = doc.at("configuration");
    c.configuration.ray_index = cfg.at("ray_index").get<std::array<std::size_t, 8>>();
    const json& pairs = cfg.at("pairs");
    if (!pairs.is_array() || pairs.size() != 4) throw CertificateParseError("expected four protected pairs");
    for (std::size_t p = 0; p < 4; ++p) {
      c.configuration.pairs[p].cone_index = pairs[p].at("cone_index").get<std::size_t>();
      c.configuration.pairs[p].cone_rays = pairs[p].at("cone_rays").get<std::array<std::size_t, 3>>();
      c.configuration.pairs[p].external_ray = pairs[p].at("external_ray").get<std::size_t>();
    }
    for (const auto& w : doc.at("witnesses")) {
      RelationWitness rw;
      rw.cone_rays = w.at("cone_rays").get<std::vector<std::size_t>>();
      rw.external_ray = w.at("external_ray").get<std::size_t>();
      rw.coefficients = rationals_from_json(w.at("coefficients"));
      rw.functional = rationals_from_json(w.at("functional"));
      c.witnesses.push_back(std::move(rw));
    }
    const json& s = doc.at("summation");
    c.summation.multipliers = rationals_from_json(s.at("multipliers"));
    c.summation.combined = rationals_from_json(s.at("combined"));
    c.summation.zero_forced = s.at("zero_forced").get<RaySet>();
    c.positively_spanning = doc.at("positively_spanning").get<bool>();
    const json& con = doc.at("conclusion");
    c.conclusion.sections_polytope_is_origin = con.at("sections_polytope_is_origin").get<bool>();
    c.conclusion.every_ray_in_a_max_cone = con.at("every_ray_in_a_max_cone").get<bool>();
    c.conclusion.trivial = con.at("trivial").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw CertificateParseError(std::string("malformed certificate: ") + e.what());
  } catch (const ToricError& e) {
    throw CertificateParseError(std::string("malformed certificate: ") + e.what());
  }
}

inline std::string serialize_certificate(const TrivialityCertificate& c) {
  return certificate_to_json(c).dump(2) + "\n";
}

inline TrivialityCertificate parse_certificate(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateParseError("byte " + std::to_string(e.byte) + ": malformed JSON document");
  }
  return certificate_from_json(doc);
}

}  // namespace toric

#endif  // TORIC_CERTIFICATE_IO_HPP
