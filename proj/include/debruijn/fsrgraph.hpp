#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "debruijn/bitcore.hpp"
#include "debruijn/boolfn.hpp"

namespace debruijn {

/// Functional graph G_f: every state u has the single out-edge
/// u -> shift_append(u, f(u)). In-degrees are 0, 1 or 2 since only
/// 0c_0..c_{n-2} and 1c_0..c_{n-2} can precede c_0..c_{n-1}.
///
/// Following the usual FSR terminology, the in-neighbours of v are its
/// children and v is their parent.
class StateGraph {
 public:
  explicit StateGraph(const AnfFunction& f);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return successor_.size(); }

  State successor(State u) const { return State(order_, successor_[u.value()]); }
  std::uint32_t successor_raw(std::uint32_t u) const noexcept { return successor_[u]; }
  int in_degree(State v) const { return in_degree_[v.value()]; }
  int in_degree_raw(std::uint32_t v) const noexcept { return in_degree_[v]; }

  /// In-neighbours of v, ascending.
  std::vector<State> children(State v) const;

 private:
  int order_;
  std::vector<std::uint32_t> successor_;
  std::vector<std::uint8_t> in_degree_;
};

StateGraph build_graph(const AnfFunction& f);

inline std::vector<State> children(const StateGraph& g, State v) { return g.children(v); }
inline bool is_leaf(const StateGraph& g, State v) { return g.in_degree(v) == 0; }
std::size_t leaf_count(const StateGraph& g);

/// Outcome of checking the two sufficient conditions for a greedy run from b.
struct ConditionReport {
  bool two_children_ok = false;  ///< every non-leaf has exactly two children
  bool unique_path_ok = false;   ///< every state's successor walk reaches b
  std::vector<State> two_children_witnesses;  ///< states with exactly one child
  std::vector<State> unique_path_witnesses;   ///< states that never reach b

  bool ok() const noexcept { return two_children_ok && unique_path_ok; }
};

inline constexpr std::size_t kDefaultWitnessCap = 5;

/// `witness_cap` = 0 lists every violating state.
ConditionReport check_gpo_conditions(const StateGraph& g, State b, std::size_t witness_cap = kDefaultWitnessCap);

/// Cycles of G_f plus, for every state, the first cycle vertex its walk reaches.
struct CycleForest {
  int order = 0;
  /// Each cycle starts at its smallest vertex and follows successor edges;
  /// cycles are sorted by that vertex.
  std::vector<std::vector<State>> cycles;
  /// root[v] for every state value v (cycle vertices are their own root).
  std::vector<std::uint32_t> root;
  /// cycle_of[v] = index into `cycles` of root[v]'s cycle.
  std::vector<std::uint32_t> cycle_of;

  State tree_root(State v) const { return State(order, root[v.value()]); }
  bool on_cycle(State v) const { return root[v.value()] == v.value(); }
};

CycleForest decompose(const StateGraph& g);

/// Graphviz digraph with one node per state; highlighted nodes are filled gray.
std::string to_dot(const StateGraph& g, std::span<const State> highlight = {});

}  // namespace debruijn
