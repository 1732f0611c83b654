#include "ccc/certificate_json.hpp"

#include <json.hpp>

#include "ccc/errors.hpp"

namespace ccc {

using ordered_json = nlohmann::ordered_json;

std::string certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["a"] = format_event(cert.a);
  j["b"] = format_event(cert.b);
  j["c"] = format_event(cert.c);
  j["cov"] = format_rational(cert.covariance);
  j["v"] = format_rational(cert.target_measure);
  j["p_a_given_c"] = format_rational(cert.report.p_a_given_c);
  j["p_b_given_c"] = format_rational(cert.report.p_b_given_c);
  j["p_ab_given_c"] = format_rational(cert.report.p_ab_given_c);
  j["p_a_given_cprime"] = format_rational(cert.report.p_a_given_cprime);
  j["p_b_given_cprime"] = format_rational(cert.report.p_b_given_cprime);
  j["p_ab_given_cprime"] = format_rational(cert.report.p_ab_given_cprime);
  j["rccp"] = ordered_json{{"rccp1", cert.report.rccp1},
                           {"rccp2", cert.report.rccp2},
                           {"rccp3", cert.report.rccp3},
                           {"rccp4", cert.report.rccp4}};
  j["distinct"] = cert.distinct;
  j["mode"] = std::string(to_string(cert.mode));
  return j.dump();
}

namespace {

const ordered_json& field(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("certificate JSON missing field '") + key + "'", 0);
  }
  return *it;
}

std::string string_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("certificate field '") + key + "' must be a string", 0);
  }
  return v.get<std::string>();
}

bool bool_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field(j, key);
  if (!v.is_boolean()) {
    throw ParseError(std::string("certificate field '") + key + "' must be a boolean", 0);
  }
  return v.get<bool>();
}

}  // namespace

Certificate certificate_from_json(std::string_view json) {
  ordered_json j = ordered_json::parse(json, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError("malformed certificate JSON", 0);
  }
  Certificate cert;
  cert.a = parse_event(string_field(j, "a"));
  cert.b = parse_event(string_field(j, "b"));
  cert.c = parse_event(string_field(j, "c"));
  cert.covariance = parse_rational(string_field(j, "cov"));
  cert.target_measure = parse_rational(string_field(j, "v"));
  cert.report.p_a_given_c = parse_rational(string_field(j, "p_a_given_c"));
  cert.report.p_b_given_c = parse_rational(string_field(j, "p_b_given_c"));
  cert.report.p_ab_given_c = parse_rational(string_field(j, "p_ab_given_c"));
  cert.report.p_a_given_cprime = parse_rational(string_field(j, "p_a_given_cprime"));
  cert.report.p_b_given_cprime = parse_rational(string_field(j, "p_b_given_cprime"));
  cert.report.p_ab_given_cprime = parse_rational(string_field(j, "p_ab_given_cprime"));
  const ordered_json& rccp = field(j, "rccp");
  if (!rccp.is_object()) {
    throw ParseError("certificate field 'rccp' must be an object", 0);
  }
  cert.report.rccp1 = bool_field(rccp, "rccp1");
  cert.report.rccp2 = bool_field(rccp, "rccp2");
  cert.report.rccp3 = bool_field(rccp, "rccp3");
  cert.report.rccp4 = bool_field(rccp, "rccp4");
  cert.distinct = bool_field(j, "distinct");
  cert.mode = parse_mode(string_field(j, "mode"));
  return cert;
}

}  // namespace ccc
