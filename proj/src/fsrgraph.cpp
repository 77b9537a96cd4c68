#include "debruijn/fsrgraph.hpp"

#include <algorithm>
#include <sstream>

namespace debruijn {

StateGraph::StateGraph(const AnfFunction& f) : order_(f.arity()) {
  if (order_ < 2) throw Error(ErrorCode::BadOrder, "state graphs need order >= 2");
  if (order_ > kMaxOrder) throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(order_));
  const std::size_t n_states = std::size_t{1} << order_;
  const std::uint32_t mask = State::mask(order_);
  successor_.resize(n_states);
  in_degree_.assign(n_states, 0);
  for (std::uint32_t u = 0; u < n_states; ++u) {
    const auto y = static_cast<std::uint32_t>(f.evaluate_raw(u));
    const std::uint32_t v = ((u << 1) | y) & mask;
    successor_[u] = v;
    ++in_degree_[v];
  }
}

std::vector<State> StateGraph::children(State v) const {
  std::vector<State> out;
  const std::uint32_t tail = v.value() >> 1;
  for (std::uint32_t head : {0u, 1u}) {
    const std::uint32_t u = (head << (order_ - 1)) | tail;
    if (successor_[u] == v.value()) out.emplace_back(order_, u);
  }
  return out;
}

StateGraph build_graph(const AnfFunction& f) { return StateGraph(f); }

std::size_t leaf_count(const StateGraph& g) {
  std::size_t n = 0;
  for (std::uint32_t v = 0; v < g.size(); ++v) n += g.in_degree_raw(v) == 0;
  return n;
}

ConditionReport check_gpo_conditions(const StateGraph& g, State b, std::size_t witness_cap) {
  if (b.order() != g.order()) throw Error(ErrorCode::ArityMismatch, "initial state order differs from graph order");
  const auto cap = witness_cap == 0 ? g.size() : witness_cap;
  ConditionReport report;

  report.two_children_ok = true;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (g.in_degree_raw(v) == 1) {
      report.two_children_ok = false;
      if (report.two_children_witnesses.size() < cap) report.two_children_witnesses.emplace_back(g.order(), v);
    }
  }

  // Reverse BFS from b. Out-degree 1 makes every path to b unique when it exists.
  std::vector<std::uint8_t> reached(g.size(), 0);
  std::vector<std::uint32_t> queue{b.value()};
  reached[b.value()] = 1;
  const int n = g.order();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    const std::uint32_t tail = v >> 1;
    for (std::uint32_t top : {0u, 1u}) {
      const std::uint32_t u = (top << (n - 1)) | tail;
      if (!reached[u] && g.successor_raw(u) == v) {
        reached[u] = 1;
        queue.push_back(u);
      }
    }
  }
  report.unique_path_ok = queue.size() == g.size();
  for (std::uint32_t v = 0; v < g.size() && report.unique_path_witnesses.size() < cap; ++v) {
    if (!reached[v]) report.unique_path_witnesses.emplace_back(n, v);
  }
  return report;
}

CycleForest decompose(const StateGraph& g) {
  constexpr std::uint32_t kUnset = ~0u;
  const std::size_t size = g.size();
  CycleForest forest;
  forest.order = g.order();
  forest.root.assign(size, kUnset);
  forest.cycle_of.assign(size, kUnset);

  // stamp[v] = id of the walk that first touched v.
  std::vector<std::uint32_t> stamp(size, kUnset);
  std::vector<std::uint32_t> path;
  for (std::uint32_t start = 0; start < size; ++start) {
    if (stamp[start] != kUnset) continue;
    path.clear();
    std::uint32_t v = start;
    while (stamp[v] == kUnset) {
      stamp[v] = start;
      path.push_back(v);
      v = g.successor_raw(v);
    }
    if (stamp[v] == start && forest.root[v] == kUnset) {
      // Walk closed on itself: record the new cycle.
      std::vector<State> cycle;
      std::uint32_t w = v;
      do {
        cycle.emplace_back(g.order(), w);
        w = g.successor_raw(w);
      } while (w != v);
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      const auto idx = static_cast<std::uint32_t>(forest.cycles.size());
      for (const State& c : cycle) {
        forest.root[c.value()] = c.value();
        forest.cycle_of[c.value()] = idx;
      }
      forest.cycles.push_back(std::move(cycle));
    }
    // Everything on the path that is not on a cycle inherits the root of v.
    const std::uint32_t r = forest.root[v];
    const std::uint32_t ci = forest.cycle_of[v];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (forest.root[*it] == kUnset) {
        forest.root[*it] = r;
        forest.cycle_of[*it] = ci;
      }
    }
  }
  std::vector<std::uint32_t> order(forest.cycles.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return forest.cycles[a].front() < forest.cycles[b].front(); });
  std::vector<std::uint32_t> remap(order.size());
  std::vector<std::vector<State>> sorted;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    sorted.push_back(std::move(forest.cycles[order[i]]));
  }
  forest.cycles = std::move(sorted);
  for (auto& c : forest.cycle_of) c = remap[c];
  return forest;
}

std::string to_dot(const StateGraph& g, std::span<const State> highlight) {
  std::vector<std::uint8_t> marked(g.size(), 0);
  for (const State& s : highlight) {
    if (s.order() == g.order()) marked[s.value()] = 1;
  }
  std::ostringstream out;
  out << "digraph G {\n";
  out << "  node [shape=box, style=rounded];\n";
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    out << "  \"" << State(g.order(), v).str() << "\"";
    if (marked[v]) out << " [style=\"rounded,filled\", fillcolor=gray]";
    out << ";\n";
  }
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    out << "  \"" << State(g.order(), u).str() << "\" -> \"" << State(g.order(), g.successor_raw(u)).str() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace debruijn
