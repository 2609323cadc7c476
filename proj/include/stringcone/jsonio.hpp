#pragma once

#include <string>

#include <json.hpp>

#include "stringcone/cluster.hpp"
#include "stringcone/config.hpp"
#include "stringcone/poly.hpp"
#include "stringcone/polyhedral.hpp"
#include "stringcone/special.hpp"
#include "stringcone/stringcone.hpp"

namespace stringcone {

using json = nlohmann::ordered_json;

json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j);

json string_system_to_json(const StringSystem& sys);

json redundancy_report_to_json(const InequalitySystem& sys, const RedundancyReport& rep);
std::string redundancy_report_to_csv(const InequalitySystem& sys, const RedundancyReport& rep);

json trails_to_json(const std::vector<Trail>& trails);

json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const json& j);

}  // namespace stringcone
