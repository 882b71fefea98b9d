#pragma once

#include <json.hpp>

#include "thickening/cohomology.hpp"
#include "thickening/filtration.hpp"
#include "thickening/numeric.hpp"
#include "thickening/partitions.hpp"

// JSON encodings. Big integers are always emitted as decimal strings.
namespace thickening {

void to_json(nlohmann::ordered_json& j, const Partition& p);
void from_json(const nlohmann::ordered_json& j, Partition& p);

void to_json(nlohmann::ordered_json& j, const DominantWeight& w);

/// {"epsilon", "lambda", "lambda_s", "dim"}.
void to_json(nlohmann::ordered_json& j, const LayerSummand& s);

/// {"kind": "zero"|"finite"|"infinite", "value": "<decimal>"}; value only when finite.
void to_json(nlohmann::ordered_json& j, const LengthValue& v);
LengthValue length_value_from_json(const nlohmann::ordered_json& j);

/// {"num": "<decimal>", "den": "<decimal>"}.
nlohmann::ordered_json ratio_to_json(const ExactRatio& r);
ExactRatio ratio_from_json(const nlohmann::ordered_json& j);

}  // namespace thickening
