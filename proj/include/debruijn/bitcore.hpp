#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/error.hpp"

namespace debruijn {

/// Largest register length any module will enumerate (2^24 states).
inline constexpr int kMaxOrder = 24;

/// An n-bit register content c_0 c_1 ... c_{n-1}, c_0 being the oldest cell.
///
/// Encoded as the big-endian integer of its string form: c_0 is the most
/// significant bit, so "0001" has value 1 and shifting in a new bit is
/// `(value << 1 | y) & mask`.
class State {
 public:
  State() = default;
  State(int order, std::uint32_t value);

  static State parse(std::string_view text);
  static State zeros(int order) { return State(order, 0); }
  static State ones(int order) { return State(order, mask(order)); }

  int order() const noexcept { return order_; }
  std::uint32_t value() const noexcept { return value_; }

  /// c_i, i = 0 is the leftmost character.
  int bit(int i) const noexcept { return static_cast<int>((value_ >> (order_ - 1 - i)) & 1u); }
  int first() const noexcept { return bit(0); }
  int last() const noexcept { return static_cast<int>(value_ & 1u); }

  std::string str() const;

  static constexpr std::uint32_t mask(int order) noexcept {
    return order >= 32 ? ~0u : ((1u << order) - 1u);
  }

  auto operator<=>(const State&) const = default;

 private:
  int order_ = 1;
  std::uint32_t value_ = 0;
};

/// c_1 ... c_{n-1} y
inline State shift_append(State s, int y) {
  return State(s.order(), ((s.value() << 1) | static_cast<std::uint32_t>(y & 1)) & State::mask(s.order()));
}

/// Flips c_0.
inline State conjugate(State s) { return State(s.order(), s.value() ^ (1u << (s.order() - 1))); }

/// Flips c_{n-1}.
inline State companion(State s) { return State(s.order(), s.value() ^ 1u); }

/// The complement of every bit.
inline State complement(State s) { return State(s.order(), s.value() ^ State::mask(s.order())); }

/// One period of a cyclic binary sequence; indices are taken mod period().
class PeriodicSequence {
 public:
  PeriodicSequence() = default;
  explicit PeriodicSequence(std::vector<std::uint8_t> bits);

  /// Accepts '0'/'1' with optional '_' or whitespace grouping and enclosing parentheses.
  static PeriodicSequence parse(std::string_view text);

  std::size_t period() const noexcept { return bits_.size(); }
  int operator[](std::size_t i) const noexcept { return bits_[i % bits_.size()]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Sequence rotated left by `offset` positions.
  PeriodicSequence rotated(std::size_t offset) const;

  std::string str() const;
  /// Bits grouped in fours, e.g. "0000 1111 0110 0101".
  std::string pretty() const;

  bool operator==(const PeriodicSequence&) const = default;
  auto operator<=>(const PeriodicSequence&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// The period-many cyclic n-windows, the i-th starting at bit i.
/// Throws WindowTooLong when n exceeds the period.
std::vector<State> windows(const PeriodicSequence& seq, int n);

/// As `windows` but allows n > period (the sequence is unrolled as often as
/// needed). Used to list the n-stage states of short cycles such as (0111).
std::vector<State> wrapped_windows(const PeriodicSequence& seq, int n);

bool is_de_bruijn(const PeriodicSequence& seq, int n);

bool cyclically_equal(const PeriodicSequence& a, const PeriodicSequence& b);

/// Lexicographically least rotation.
PeriodicSequence canonical_rotation(const PeriodicSequence& seq);

/// Offset of the least rotation (first one if the sequence is not primitive).
std::size_t least_rotation_offset(const PeriodicSequence& seq);

PeriodicSequence complement_sequence(const PeriodicSequence& seq);

/// Index i with windows(seq, b.order())[i] == b, or -1.
long find_window(const PeriodicSequence& seq, State b);

}  // namespace debruijn
