#pragma once

#include <vector>

#include "debruijn/boolfn.hpp"
#include "debruijn/gpo.hpp"
#include "debruijn/primpoly.hpp"

namespace debruijn {

// Modified greedy algorithms for feedback functions whose state graph is
// split into two components. Each one adds a single forced transition that
// bridges the components and otherwise follows the prefer-opposite rule.

/// x_t * x_{t+1} * ... * x_{n-1}.
AnfFunction prefer_no_function(int n, int t);

/// Prefer-No from 0^n with the forced step 01^{n-1} -> 1^n.
/// Requires 1 <= t < n; t = 0 is accepted only with `allow_t0`.
GpoRun prefer_no(int n, int t, bool allow_t0 = false);

/// The 2^m - 1 cyclic n-windows of m_sequence(g), in sequence order.
std::vector<State> prim_poly_initial_states(const PrimPoly& g, int n);

/// Complements of prim_poly_initial_states.
std::vector<State> prim_poly_complement_initial_states(const PrimPoly& g, int n);

/// Prim-Poly: f = from_primitive_poly(g, n), forced step 10^{n-1} -> 0^n.
GpoRun prim_poly_run(int n, const PrimPoly& g, State b);

/// The complement image of from_primitive_poly(g, n), i.e. 1 + f(x0+1, ..., x_{n-1}+1).
/// For every g of degree >= 2 this is f + 1. For g = 1 + x it is f itself.
AnfFunction prim_poly_complement_function(const PrimPoly& g, int n);

/// Complement form: prim_poly_complement_function, forced step 01^{n-1} -> 1^n,
/// b a complemented window.
GpoRun prim_poly_complement_run(int n, const PrimPoly& g, State b);

/// x_{n-3} + x_{n-2} + x_{n-3} x_{n-2} + x_{n-3} x_{n-2} x_{n-1}.
AnfFunction special_function(int n);

/// The n-stage states of the periodic sequence (0111).
std::vector<State> special_fn_initial_states(int n);

/// Greedy run on special_function(n) with the forced step 10^{n-1} -> 0^n.
GpoRun special_fn_run(int n, State b);

}  // namespace debruijn
