#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cycsep/bijection.hpp"
#include "cycsep/count.hpp"
#include "cycsep/identity.hpp"
#include "cycsep/model.hpp"

// JSON wire formats. Counts are rendered as decimal strings, not JSON
// numbers: they outgrow the 2^53 precision of common JSON readers.
namespace cycsep {

void to_json(nlohmann::json& j, const SeparationInstance& inst);
void from_json(const nlohmann::json& j, SeparationInstance& inst);

// KSubset is a bare array of residues; the ambient modulus comes from context.
void to_json(nlohmann::json& j, const KSubset& X);
KSubset ksubset_from_json(const nlohmann::json& j, std::int64_t n);

void to_json(nlohmann::json& j, const CountReport& report);
void from_json(const nlohmann::json& j, CountReport& report);

void to_json(nlohmann::json& j, const UnitMap& map);
void from_json(const nlohmann::json& j, UnitMap& map);

void to_json(nlohmann::json& j, const RotheParams& params);
void from_json(const nlohmann::json& j, RotheParams& params);

}  // namespace cycsep
