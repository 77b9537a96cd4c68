#include "debruijn/bitcore.hpp"

#include <algorithm>
#include <cctype>

namespace debruijn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadState: return "BadState";
    case ErrorCode::BadSequence: return "BadSequence";
    case ErrorCode::WindowTooLong: return "WindowTooLong";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::BadPolynomial: return "BadPolynomial";
    case ErrorCode::BadT: return "BadT";
    case ErrorCode::BadInitialState: return "BadInitialState";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotDeBruijnSeed: return "NotDeBruijnSeed";
    case ErrorCode::NotDeBruijn: return "NotDeBruijn";
    case ErrorCode::NonTerminating: return "NonTerminating";
  }
  return "Unknown";
}

State::State(int order, std::uint32_t value) : order_(order), value_(value) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "state order " + std::to_string(order) + " outside [1, " + std::to_string(kMaxOrder) + "]");
  }
  if ((value & ~mask(order)) != 0) {
    throw Error(ErrorCode::BadState, "value does not fit in " + std::to_string(order) + " bits");
  }
}

State State::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::BadState, "empty state string");
  if (text.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(ErrorCode::OrderTooLarge, "state '" + std::string(text) + "' is longer than " +
                                              std::to_string(kMaxOrder) + " bits");
  }
  std::uint32_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorCode::BadState, "invalid character in state '" + std::string(text) + "'");
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return State(static_cast<int>(text.size()), v);
}

std::string State::str() const {
  std::string out(static_cast<std::size_t>(order_), '0');
  for (int i = 0; i < order_; ++i) out[static_cast<std::size_t>(i)] = static_cast<char>('0' + bit(i));
  return out;
}

PeriodicSequence::PeriodicSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error(ErrorCode::BadSequence, "a periodic sequence needs period >= 1");
  for (auto& b : bits_) {
    if (b > 1) throw Error(ErrorCode::BadSequence, "sequence bits must be 0 or 1");
  }
}

PeriodicSequence PeriodicSequence::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c == '_' || c == '(' || c == ')' || c == '~' || std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      throw Error(ErrorCode::BadSequence, "invalid character '" + std::string(1, c) + "' in sequence");
    }
  }
  return PeriodicSequence(std::move(bits));
}

PeriodicSequence PeriodicSequence::rotated(std::size_t offset) const {
  std::vector<std::uint8_t> out(bits_.size());
  const std::size_t n = bits_.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = bits_[(i + offset) % n];
  return PeriodicSequence(std::move(out));
}

std::string PeriodicSequence::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::string PeriodicSequence::pretty() const {
  std::string out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i > 0 && i % 4 == 0) out.push_back(' ');
    out.push_back(static_cast<char>('0' + bits_[i]));
  }
  return out;
}

std::vector<State> wrapped_windows(const PeriodicSequence& seq, int n) {
  if (n < 1 || n > kMaxOrder) throw Error(ErrorCode::OrderTooLarge, "window length " + std::to_string(n));
  const std::size_t period = seq.period();
  std::vector<State> out;
  out.reserve(period);
  std::uint32_t v = 0;
  for (int j = 0; j < n; ++j) v = (v << 1) | static_cast<std::uint32_t>(seq[static_cast<std::size_t>(j)]);
  const std::uint32_t m = State::mask(n);
  for (std::size_t i = 0; i < period; ++i) {
    out.emplace_back(n, v);
    v = ((v << 1) | static_cast<std::uint32_t>(seq[i + static_cast<std::size_t>(n)])) & m;
  }
  return out;
}

std::vector<State> windows(const PeriodicSequence& seq, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > seq.period()) {
    throw Error(ErrorCode::WindowTooLong, "window length " + std::to_string(n) + " exceeds period " +
                                              std::to_string(seq.period()));
  }
  return wrapped_windows(seq, n);
}

bool is_de_bruijn(const PeriodicSequence& seq, int n) {
  if (n < 1 || n > kMaxOrder) return false;
  if (seq.period() != (std::size_t{1} << n)) return false;
  std::vector<std::uint8_t> seen(seq.period(), 0);
  for (const State& w : windows(seq, n)) {
    if (seen[w.value()]++) return false;
  }
  return true;
}

std::size_t least_rotation_offset(const PeriodicSequence& seq) {
  // Two-candidate scan for the minimal rotation, O(N).
  const std::size_t n = seq.period();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = seq[i + k], b = seq[j + k];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i = i + k + 1;
    } else {
      j = j + k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

PeriodicSequence canonical_rotation(const PeriodicSequence& seq) {
  return seq.rotated(least_rotation_offset(seq));
}

bool cyclically_equal(const PeriodicSequence& a, const PeriodicSequence& b) {
  if (a.period() != b.period()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

PeriodicSequence complement_sequence(const PeriodicSequence& seq) {
  std::vector<std::uint8_t> out(seq.bits());
  for (auto& b : out) b ^= 1u;
  return PeriodicSequence(std::move(out));
}

long find_window(const PeriodicSequence& seq, State b) {
  const auto ws = wrapped_windows(seq, b.order());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (ws[i] == b) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace debruijn
