#include "debruijn/io.hpp"

#include <sstream>

namespace debruijn::io {

namespace {

std::vector<std::string> state_strings(const std::vector<State>& states) {
  std::vector<std::string> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.str());
  return out;
}

std::string join_states(const std::vector<State>& states, char sep) {
  std::string out;
  for (const auto& s : states) {
    if (!out.empty()) out += sep;
    out += s.str();
  }
  return out;
}

std::string entry_params(const FamilyResult& r, const FamilyEntry& e) {
  return e.params.empty() ? r.params : r.params + " " + e.params;
}

}  // namespace

nlohmann::json to_json(const ConditionReport& report) {
  return {
      {"two_children_ok", report.two_children_ok},
      {"unique_path_ok", report.unique_path_ok},
      {"two_children_witnesses", state_strings(report.two_children_witnesses)},
      {"unique_path_witnesses", state_strings(report.unique_path_witnesses)},
  };
}

nlohmann::json to_json(const GpoRun& run) {
  std::vector<std::size_t> fallback_steps, forced_steps;
  for (std::size_t i = 0; i < run.steps(); ++i) {
    if (run.fallback[i]) fallback_steps.push_back(i);
    if (run.forced[i]) forced_steps.push_back(i);
  }
  return {
      {"sequence", run.sequence.str()},
      {"completed", run.completed},
      {"trace", state_strings(run.trace)},
      {"fallback_steps", fallback_steps},
      {"forced_steps", forced_steps},
  };
}

nlohmann::json to_json(const FamilyResult& result) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : result.entries) {
    entries.push_back({
        {"params", e.params},
        {"f", format_anf(e.function)},
        {"initial_state", e.initial.str()},
        {"sequence", e.sequence.str()},
        {"canonical", canonical_rotation(e.sequence).str()},
    });
  }
  return {
      {"family", result.family},
      {"params", result.params},
      {"distinct_count", result.distinct_count},
      {"entries", std::move(entries)},
  };
}

nlohmann::json to_json(const std::vector<PairBlock>& blocks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& block : blocks) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : block.groups) {
      groups.push_back({{"f", format_anf(g.function)}, {"initial_states", state_strings(g.initial_states)}});
    }
    out.push_back({{"sequence", block.sequence.str()}, {"groups", std::move(groups)}});
  }
  return out;
}

nlohmann::json graph_summary(const StateGraph& g, std::optional<State> b) {
  const CycleForest forest = decompose(g);
  std::vector<std::size_t> lengths;
  for (const auto& c : forest.cycles) lengths.push_back(c.size());
  nlohmann::json out = {
      {"order", g.order()},
      {"vertex_count", g.size()},
      {"leaf_count", leaf_count(g)},
      {"cycle_lengths", lengths},
  };
  if (b) {
    out["initial_state"] = b->str();
    out["conditions"] = to_json(check_gpo_conditions(g, *b));
  }
  return out;
}

std::string to_csv(const FamilyResult& result) {
  std::ostringstream out;
  out << "family,params,initial_state,sequence,canonical\n";
  for (const auto& e : result.entries) {
    out << result.family << ',' << entry_params(result, e) << ',' << e.initial.str() << ',' << e.sequence.str() << ','
        << canonical_rotation(e.sequence).str() << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<PairBlock>& blocks) {
  std::ostringstream out;
  out << "sequence,f,initial_states\n";
  for (const auto& block : blocks) {
    for (const auto& g : block.groups) {
      out << block.sequence.str() << ',' << format_anf(g.function) << ',' << join_states(g.initial_states, ';') << '\n';
    }
  }
  return out.str();
}

std::string to_plain(const FamilyResult& result, bool pretty) {
  std::ostringstream out;
  for (const auto& e : result.entries) {
    if (!e.params.empty()) out << e.params << ' ';
    out << e.initial.str() << ' ' << (pretty ? e.sequence.pretty() : e.sequence.str()) << '\n';
  }
  out << "distinct=" << result.distinct_count << '\n';
  return out.str();
}

std::string to_plain(const std::vector<PairBlock>& blocks) {
  std::ostringstream out;
  for (const auto& block : blocks) {
    out << "S=" << block.sequence.pretty() << '\n';
    for (const auto& g : block.groups) {
      out << "  " << format_anf(g.function) << "  b in {" << join_states(g.initial_states, ',') << "}\n";
    }
  }
  return out.str();
}

}  // namespace debruijn::io
