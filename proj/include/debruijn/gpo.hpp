#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "debruijn/bitcore.hpp"
#include "debruijn/boolfn.hpp"

namespace debruijn {

/// Result of one greedy run.
///
/// trace holds every visited state in order, starting at the initial state b;
/// when the run completes the final return to b is included as the last
/// element, so trace.size() == sequence.period() + 1. Step i is the transition
/// trace[i] -> trace[i+1].
struct GpoRun {
  PeriodicSequence sequence;
  std::vector<State> trace;
  /// Step i appended f(c) because the preferred successor had already appeared.
  std::vector<bool> fallback;
  /// Step i was dictated by a variant's fixed transition, not the preference rule.
  std::vector<bool> forced;
  bool completed = false;

  std::size_t steps() const noexcept { return fallback.size(); }
};

/// A variant's unconditional transition `from -> to`.
struct ForcedTransition {
  State from;
  State to;
};

struct GreedyOptions {
  /// Maximum number of steps; 0 selects 2^{n+1}.
  std::size_t cap = 0;
  std::optional<ForcedTransition> forced;
};

/// Greedy engine shared by every algorithm: from the current state c, move to
/// c_1..c_{n-1} ~f(c) unless that state has appeared (b counts from step 0),
/// otherwise to c_1..c_{n-1} f(c); stop on returning to b. An optional forced
/// transition overrides the rule at one state.
GpoRun run_greedy(const AnfFunction& f, State b, const GreedyOptions& options = {});

/// Generalized Prefer-Opposite. A run that exhausts `cap` steps has
/// completed == false; see `require_completed`.
GpoRun run_gpo(const AnfFunction& f, State b, std::size_t cap = 0);

/// Throws NonTerminating when the run hit its step cap.
const GpoRun& require_completed(const GpoRun& run);

/// run_gpo(0, 0^n).
GpoRun prefer_one(int n);
/// run_gpo(1, 1^n).
GpoRun prefer_zero(int n);

/// One state per line, fallback arrivals suffixed '*', forced arrivals '!'.
std::string format_trace(const GpoRun& run);

}  // namespace debruijn
