#include "cycsep/serialize.hpp"

#include <nlohmann/json.hpp>

namespace cycsep {

void to_json(nlohmann::json& j, const SeparationInstance& inst) {
  j = nlohmann::json{{"n", inst.n}, {"m", inst.m}, {"p", inst.p}, {"k", inst.k}};
}

void from_json(const nlohmann::json& j, SeparationInstance& inst) {
  j.at("n").get_to(inst.n);
  j.at("m").get_to(inst.m);
  j.at("p").get_to(inst.p);
  j.at("k").get_to(inst.k);
  inst.validate();
}

void to_json(nlohmann::json& j, const KSubset& X) { j = X.elements(); }

KSubset ksubset_from_json(const nlohmann::json& j, std::int64_t n) {
  return KSubset(n, j.get<std::vector<std::int64_t>>());
}

void to_json(nlohmann::json& j, const CountReport& report) {
  j = nlohmann::json{{"instance", report.instance},
                     {"closed_form", to_decimal(report.closed_form)},
                     {"agree", report.agree}};
  if (report.brute_force) j["brute_force"] = to_decimal(*report.brute_force);
  if (report.convolution) j["convolution"] = to_decimal(*report.convolution);
}

void from_json(const nlohmann::json& j, CountReport& report) {
  j.at("instance").get_to(report.instance);
  report.closed_form = parse_decimal(j.at("closed_form").get<std::string>());
  report.brute_force.reset();
  report.convolution.reset();
  if (j.contains("brute_force"))
    report.brute_force = parse_decimal(j.at("brute_force").get<std::string>());
  if (j.contains("convolution"))
    report.convolution = parse_decimal(j.at("convolution").get<std::string>());
  j.at("agree").get_to(report.agree);
}

void to_json(nlohmann::json& j, const UnitMap& map) {
  j = nlohmann::json{{"n", map.n},
                     {"a", map.a},
                     {"a_inv", map.a_inv},
                     {"m", map.source_m},
                     {"d", map.target_d}};
}

void from_json(const nlohmann::json& j, UnitMap& map) {
  j.at("n").get_to(map.n);
  j.at("a").get_to(map.a);
  j.at("a_inv").get_to(map.a_inv);
  j.at("m").get_to(map.source_m);
  j.at("d").get_to(map.target_d);
}

void to_json(nlohmann::json& j, const RotheParams& params) {
  j = nlohmann::json{{"x", params.x}, {"y", params.y}, {"z", params.z}, {"N", params.N}};
}

void from_json(const nlohmann::json& j, RotheParams& params) {
  j.at("x").get_to(params.x);
  j.at("y").get_to(params.y);
  j.at("z").get_to(params.z);
  j.at("N").get_to(params.N);
  params.validate();
}

}  // namespace cycsep
