#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/bitcore.hpp"

namespace debruijn {

/// Largest degree accepted by the orbit-based primitivity test.
inline constexpr int kMaxPolyDegree = 20;

/// g(x) = 1 + a_1 x + ... + a_{m-1} x^{m-1} + x^m over GF(2).
class PrimPoly {
 public:
  PrimPoly() = default;
  /// `coefficients` bit i is the coefficient of x^i; bits 0 and m must be set.
  PrimPoly(int degree, std::uint32_t coefficients);

  /// Descending-degree coefficient string, "1101" is x^3 + x^2 + 1.
  static PrimPoly parse(std::string_view text);

  int degree() const noexcept { return degree_; }
  std::uint32_t coefficients() const noexcept { return coeffs_; }
  /// a_i, 0 <= i <= degree.
  int coefficient(int i) const noexcept { return static_cast<int>((coeffs_ >> i) & 1u); }

  std::string str() const;

  auto operator<=>(const PrimPoly&) const = default;

 private:
  int degree_ = 1;
  std::uint32_t coeffs_ = 0b11;
};

/// Orbit test: the LFSR state cycle through 0^{m-1}1 has length 2^m - 1.
bool is_primitive(const PrimPoly& g);

/// All primitive polynomials of degree m, ascending by descending-degree string.
std::vector<PrimPoly> enumerate_primitive(int m);

/// One period of the LFSR output with characteristic polynomial g, seeded 0^{m-1}1.
PeriodicSequence m_sequence(const PrimPoly& g);

}  // namespace debruijn
