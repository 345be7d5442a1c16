#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "numsg/apery_hilbert.hpp"
#include "numsg/construction.hpp"
#include "numsg/duplication.hpp"
#include "numsg/ideals.hpp"

namespace numsg {

/// Parses "2,3,7" (whitespace ignored) or a JSON array "[2,3,7]".
/// Throws Error(Parse) on malformed input.
std::vector<Int> parse_generators(std::string_view text);
std::string format_generators(const std::vector<Int>& gens);

/// "[1,27,27,27,26,27,29,30,31,32 ->]" style; the arrow marks stabilization.
std::string format_hilbert(const HilbertFunction& hf);

nlohmann::json to_json(const HilbertFunction& hf);
HilbertFunction hilbert_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RelativeIdeal& ideal);
RelativeIdeal ideal_from_json(const NumericalSemigroup& ambient, const nlohmann::json& j);

nlohmann::json to_json(const LayerSets& layers);
LayerSets layer_sets_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AperyTable& table);
nlohmann::json to_json(const NariPartition& part);

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConstructionData& data);

nlohmann::json to_json(const WitnessReport& report, bool emit_generators);

}  // namespace numsg
