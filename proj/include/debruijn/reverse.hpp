#pragma once

#include <vector>

#include "debruijn/bitcore.hpp"
#include "debruijn/boolfn.hpp"

namespace debruijn {

/// Largest order for which every de Bruijn sequence is enumerated.
inline constexpr int kMaxEnumerationOrder = 5;

/// A feedback function f with run_gpo(f, b) reproducing s from b.
///
/// With s rotated to start at b, g(b_0..b_{n-2}) = b_{n-1} and every other
/// (n-1)-string maps to the complement of the bit following its first
/// occurrence; f(x_0..x_{n-1}) = g(x_1..x_{n-1}).
AnfFunction derive_feedback(const PeriodicSequence& s, State b);

/// The feedback function of the pure FSR that outputs s: f(w) is the bit
/// following window w. s must be de Bruijn.
AnfFunction fsr_feedback(const PeriodicSequence& s);

/// Every de Bruijn sequence of order n (2 <= n <= 5), each rotated to start
/// with 0^n, in ascending order.
std::vector<PeriodicSequence> enumerate_de_bruijn(int n);

struct PairGroup {
  AnfFunction function;
  std::vector<State> initial_states;  ///< ascending
};

struct PairBlock {
  PeriodicSequence sequence;  ///< canonical rotation
  std::vector<PairGroup> groups;  ///< sorted by formatted function text
};

/// derive_feedback for every window of s, grouping initial states that share a function.
PairBlock pair_block(const PeriodicSequence& s);

/// pair_block for every de Bruijn sequence of order n (3 <= n <= 5).
std::vector<PairBlock> enumerate_pairs(int n);

}  // namespace debruijn
