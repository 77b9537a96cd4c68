#include "debruijn/primpoly.hpp"

#include <bit>

namespace debruijn {

namespace {

void check_degree(int m) {
  if (m < 1) throw Error(ErrorCode::BadPolynomial, "degree must be >= 1");
  if (m > kMaxPolyDegree) {
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(m) + " exceeds " + std::to_string(kMaxPolyDegree));
  }
}

// Register holds s_l..s_{l+m-1} with s_l in the most significant position;
// the new bit is sum_{i<m} a_i s_{l+i}.
std::uint32_t lfsr_step(std::uint32_t reg, std::uint32_t taps, int m) {
  const auto fb = static_cast<std::uint32_t>(std::popcount(reg & taps) & 1);
  return ((reg << 1) | fb) & State::mask(m);
}

// a_i sits at register position m-1-i.
std::uint32_t tap_mask(const PrimPoly& g) {
  std::uint32_t taps = 0;
  for (int i = 0; i < g.degree(); ++i) {
    if (g.coefficient(i)) taps |= 1u << (g.degree() - 1 - i);
  }
  return taps;
}

std::uint64_t orbit_length(const PrimPoly& g) {
  const int m = g.degree();
  const std::uint32_t taps = tap_mask(g);
  const std::uint32_t seed = 1;
  std::uint32_t reg = lfsr_step(seed, taps, m);
  std::uint64_t len = 1;
  const std::uint64_t limit = (std::uint64_t{1} << m);
  while (reg != seed && len <= limit) {
    reg = lfsr_step(reg, taps, m);
    ++len;
  }
  return len;
}

}  // namespace

PrimPoly::PrimPoly(int degree, std::uint32_t coefficients) : degree_(degree), coeffs_(coefficients) {
  check_degree(degree);
  if ((coefficients >> (degree + 1)) != 0) throw Error(ErrorCode::BadPolynomial, "coefficient above the degree");
  if (!(coefficients & 1u) || !((coefficients >> degree) & 1u)) {
    throw Error(ErrorCode::BadPolynomial, "constant and leading coefficients must be 1");
  }
}

PrimPoly PrimPoly::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorCode::BadPolynomial, "polynomial string '" + std::string(text) + "' too short");
  const int m = static_cast<int>(text.size()) - 1;
  check_degree(m);
  std::uint32_t c = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch != '0' && ch != '1') throw Error(ErrorCode::BadPolynomial, "invalid character in '" + std::string(text) + "'");
    if (ch == '1') c |= 1u << (m - static_cast<int>(k));
  }
  return PrimPoly(m, c);
}

std::string PrimPoly::str() const {
  std::string out;
  for (int i = degree_; i >= 0; --i) out.push_back(static_cast<char>('0' + coefficient(i)));
  return out;
}

bool is_primitive(const PrimPoly& g) {
  check_degree(g.degree());
  return orbit_length(g) == (std::uint64_t{1} << g.degree()) - 1;
}

std::vector<PrimPoly> enumerate_primitive(int m) {
  check_degree(m);
  std::vector<PrimPoly> out;
  // Middle coefficients a_{m-1}..a_1 read as a big-endian counter gives the
  // ascending order of the descending-degree strings.
  const std::uint32_t middle_count = m >= 2 ? (1u << (m - 1)) : 1u;
  for (std::uint32_t mid = 0; mid < middle_count; ++mid) {
    PrimPoly g(m, (1u << m) | (mid << 1) | 1u);
    if (is_primitive(g)) out.push_back(g);
  }
  return out;
}

PeriodicSequence m_sequence(const PrimPoly& g) {
  if (!is_primitive(g)) throw Error(ErrorCode::NotPrimitive, g.str() + " is not primitive");
  const int m = g.degree();
  const std::uint32_t taps = tap_mask(g);
  const std::size_t period = (std::size_t{1} << m) - 1;
  std::vector<std::uint8_t> bits(period);
  std::uint32_t reg = 1;
  for (std::size_t i = 0; i < period; ++i) {
    bits[i] = static_cast<std::uint8_t>((reg >> (m - 1)) & 1u);
    reg = lfsr_step(reg, taps, m);
  }
  return PeriodicSequence(std::move(bits));
}

}  // namespace debruijn
