#pragma once

// JSON forms of the result types. Key order is fixed (ordered_json), so the
// same value always serializes to the same bytes.

#include <json.hpp>

#include "socialist/conditions.hpp"
#include "socialist/heuristics.hpp"
#include "socialist/leftfact.hpp"
#include "socialist/oracle.hpp"
#include "socialist/search.hpp"

namespace socialist {

using Json = nlohmann::ordered_json;

Json to_json(const ConditionReport& report);
Json to_json(const SocialistVerdict& verdict);
Json to_json(const HeuristicEstimate& estimate);
Json to_json(const ResidueRecord& record);
Json to_json(const ResidueRecord& record, std::span<const GeneralizedResidue> generalized);
Json to_json(const PrimeRecord& record);
Json to_json(const SearchReport& report);
Json to_json(const SearchCheckpoint& checkpoint);

/// Throws CheckpointError(Corrupt) on any missing or mistyped field.
SearchCheckpoint checkpoint_from_json(const Json& json);

/// Single-line dump used for every line-oriented output.
std::string dump_line(const Json& json);

}  // namespace socialist
