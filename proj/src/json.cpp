#include "thickening/json.hpp"

#include <stdexcept>

namespace thickening {

using nlohmann::ordered_json;

void to_json(ordered_json& j, const Partition& p) {
  j = ordered_json::array();
  for (std::int64_t v : p.parts()) j.push_back(v);
}

void from_json(const ordered_json& j, Partition& p) {
  p = Partition(j.get<std::vector<std::int64_t>>());
}

void to_json(ordered_json& j, const DominantWeight& w) {
  j = ordered_json::array();
  for (std::int64_t v : w.entries()) j.push_back(v);
}

void to_json(ordered_json& j, const LayerSummand& s) {
  j = ordered_json::object();
  j["epsilon"] = s.epsilon;
  j["lambda"] = s.lambda;
  j["lambda_s"] = s.lambda_s;
  j["dim"] = s.dim.str();
}

void to_json(ordered_json& j, const LengthValue& v) {
  j = ordered_json::object();
  j["kind"] = kind_name(v.kind());
  if (v.is_finite()) j["value"] = v.value().str();
}

LengthValue length_value_from_json(const ordered_json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "zero") return LengthValue::zero();
  if (kind == "infinite") return LengthValue::infinite();
  if (kind == "finite") return LengthValue::finite(BigInt(j.at("value").get<std::string>()));
  throw std::invalid_argument("unknown length kind: " + kind);
}

ordered_json ratio_to_json(const ExactRatio& r) {
  ordered_json j = ordered_json::object();
  j["num"] = numerator(r).str();
  j["den"] = denominator(r).str();
  return j;
}

ExactRatio ratio_from_json(const ordered_json& j) {
  BigInt num(j.at("num").get<std::string>());
  BigInt den(j.at("den").get<std::string>());
  if (den <= 0) throw std::invalid_argument("ratio denominator must be positive");
  return ExactRatio(num, den);
}

}  // namespace thickening
