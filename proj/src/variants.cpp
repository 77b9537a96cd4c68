#include "debruijn/variants.hpp"

#include <algorithm>

namespace debruijn {

namespace {

void check_order(int n, int min_order) {
  if (n < min_order) throw Error(ErrorCode::BadOrder, "order " + std::to_string(n) + " below " + std::to_string(min_order));
  if (n > kMaxOrder) throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n));
}

// 0 1^{n-1}
State zero_then_ones(int n) { return State(n, State::mask(n - 1)); }
// 1 0^{n-1}
State one_then_zeros(int n) { return State(n, 1u << (n - 1)); }

void require_member(const std::vector<State>& valid, State b, const char* what) {
  if (std::find(valid.begin(), valid.end(), b) == valid.end()) {
    throw Error(ErrorCode::BadInitialState, b.str() + " is not " + what);
  }
}

void check_prim_degree(int n, const PrimPoly& g) {
  if (g.degree() < 1 || g.degree() >= n) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(g.degree()) + " outside [1, " + std::to_string(n - 1) + "]");
  }
}

}  // namespace

AnfFunction prefer_no_function(int n, int t) {
  Monomial m = 0;
  for (int j = t; j < n; ++j) m |= Monomial{1} << j;
  return AnfFunction(n, {m});
}

GpoRun prefer_no(int n, int t, bool allow_t0) {
  check_order(n, 2);
  if (t >= n || t < 0 || (t == 0 && !allow_t0)) {
    throw Error(ErrorCode::BadT, "t=" + std::to_string(t) + " outside [1, " + std::to_string(n - 1) + "]");
  }
  GreedyOptions options;
  options.forced = ForcedTransition{zero_then_ones(n), State::ones(n)};
  return run_greedy(prefer_no_function(n, t), State::zeros(n), options);
}

std::vector<State> prim_poly_initial_states(const PrimPoly& g, int n) {
  check_order(n, 2);
  check_prim_degree(n, g);
  return wrapped_windows(m_sequence(g), n);
}

std::vector<State> prim_poly_complement_initial_states(const PrimPoly& g, int n) {
  auto states = prim_poly_initial_states(g, n);
  for (auto& s : states) s = complement(s);
  return states;
}

GpoRun prim_poly_run(int n, const PrimPoly& g, State b) {
  require_member(prim_poly_initial_states(g, n), b, "an n-window of the m-sequence");
  GreedyOptions options;
  options.forced = ForcedTransition{one_then_zeros(n), State::zeros(n)};
  return run_greedy(from_primitive_poly(g, n), b, options);
}

AnfFunction prim_poly_complement_function(const PrimPoly& g, int n) {
  const AnfFunction f = from_primitive_poly(g, n);
  // f is linear without constant, so complementing every input adds one per term
  return f.monomials().size() % 2 == 1 ? f : complement_fn(f);
}

GpoRun prim_poly_complement_run(int n, const PrimPoly& g, State b) {
  require_member(prim_poly_complement_initial_states(g, n), b, "the complement of an n-window of the m-sequence");
  GreedyOptions options;
  options.forced = ForcedTransition{zero_then_ones(n), State::ones(n)};
  return run_greedy(prim_poly_complement_function(g, n), b, options);
}

AnfFunction special_function(int n) {
  check_order(n, 4);
  const Monomial a = Monomial{1} << (n - 3), b = Monomial{1} << (n - 2), c = Monomial{1} << (n - 1);
  return AnfFunction(n, {a, b, a | b, a | b | c});
}

std::vector<State> special_fn_initial_states(int n) {
  check_order(n, 4);
  return wrapped_windows(PeriodicSequence({0, 1, 1, 1}), n);
}

GpoRun special_fn_run(int n, State b) {
  check_order(n, 4);
  require_member(special_fn_initial_states(n), b, "an n-stage state of (0111)");
  GreedyOptions options;
  options.forced = ForcedTransition{one_then_zeros(n), State::zeros(n)};
  return run_greedy(special_function(n), b, options);
}

}  // namespace debruijn
