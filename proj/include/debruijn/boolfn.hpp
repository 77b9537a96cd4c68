#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/bitcore.hpp"
#include "debruijn/primpoly.hpp"

namespace debruijn {

/// A monomial is the set of variable indices it multiplies; bit i stands for x_i.
/// The empty set (0) is the constant 1.
using Monomial = std::uint32_t;

/// Boolean feedback function f(x_0, ..., x_{n-1}) in algebraic normal form.
///
/// Monomials are kept duplicate-free (XOR semantics) and sorted by degree,
/// then lexicographically on their index lists, so equality is structural.
class AnfFunction {
 public:
  AnfFunction() = default;
  AnfFunction(int arity, std::vector<Monomial> monomials);

  static AnfFunction zero(int arity) { return AnfFunction(arity, {}); }
  static AnfFunction one(int arity) { return AnfFunction(arity, {0}); }

  int arity() const noexcept { return arity_; }
  std::span<const Monomial> monomials() const noexcept { return monomials_; }
  bool has_constant() const noexcept { return !monomials_.empty() && monomials_.front() == 0; }

  /// Throws ArityMismatch when s.order() != arity().
  int evaluate(State s) const;

  /// Evaluates on the big-endian state encoding without checks.
  int evaluate_raw(std::uint32_t state_value) const noexcept;

  bool operator==(const AnfFunction&) const = default;

 private:
  int arity_ = 1;
  std::vector<Monomial> monomials_;
};

/// Parses "1 + x0 + x2*x3"; arity defaults to (largest index + 1), at least 1.
AnfFunction parse_anf(std::string_view text, int arity = 0);
std::string format_anf(const AnfFunction& f);

/// values[i] is f at the state whose big-endian encoding is i.
AnfFunction from_truth_table(std::span<const std::uint8_t> values);
std::vector<std::uint8_t> truth_table(const AnfFunction& f);

bool is_nonsingular(const AnfFunction& f);

/// h(x_{n-m}, ..., x_{n-1}) as a function of n variables.
AnfFunction shift_embed(const AnfFunction& h, int n);

/// x_{n-m} + a_1 x_{n-m+1} + ... + a_{m-1} x_{n-1}.
AnfFunction from_primitive_poly(const PrimPoly& g, int n);

/// f + 1.
AnfFunction complement_fn(const AnfFunction& f);

}  // namespace debruijn
