#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "debruijn/families.hpp"
#include "debruijn/fsrgraph.hpp"
#include "debruijn/gpo.hpp"
#include "debruijn/reverse.hpp"

namespace debruijn::io {

// Serialized forms used by the CLI. Schemas are described in docs/formats.md.

nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const GpoRun& run);
nlohmann::json to_json(const FamilyResult& result);
nlohmann::json to_json(const std::vector<PairBlock>& blocks);

/// Vertex count, leaf count, cycle lengths and (with b) the condition report.
nlohmann::json graph_summary(const StateGraph& g, std::optional<State> b = std::nullopt);

/// Header: family,params,initial_state,sequence,canonical
std::string to_csv(const FamilyResult& result);
/// Header: sequence,f,initial_states  (states separated by ';')
std::string to_csv(const std::vector<PairBlock>& blocks);

std::string to_plain(const FamilyResult& result, bool pretty);
std::string to_plain(const std::vector<PairBlock>& blocks);

}  // namespace debruijn::io
