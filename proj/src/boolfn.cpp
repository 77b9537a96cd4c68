#include "debruijn/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace debruijn {

namespace {

bool monomial_less(Monomial a, Monomial b) {
  const int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da < db;
  // Same degree: compare ascending index lists; the first differing index decides.
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

// Variable mask of a state: bit i set iff c_i = 1.
std::uint32_t variable_mask(std::uint32_t state_value, int arity) {
  std::uint32_t out = 0;
  for (int i = 0; i < arity; ++i) {
    out |= ((state_value >> (arity - 1 - i)) & 1u) << i;
  }
  return out;
}

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxOrder) {
    throw Error(ErrorCode::BadOrder, "arity " + std::to_string(arity) + " outside [1, " + std::to_string(kMaxOrder) + "]");
  }
}

class AnfParser {
 public:
  explicit AnfParser(std::string_view text) : text_(text) {}

  std::vector<Monomial> parse() {
    std::vector<Monomial> terms;
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    terms.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '+') throw SyntaxError(pos_, "expected '+'");
      ++pos_;
      skip_ws();
      terms.push_back(term());
      skip_ws();
    }
    return terms;
  }

  int max_index() const { return max_index_; }

 private:
  // Constant 0 is encoded as a sentinel that the caller drops.
  static constexpr Monomial kZeroTerm = ~0u;

  Monomial term() {
    if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
      const char c = text_[pos_++];
      return c == '1' ? Monomial{0} : kZeroTerm;
    }
    Monomial m = factor();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      m |= factor();
      skip_ws();
    }
    return m;
  }

  Monomial factor() {
    if (pos_ >= text_.size() || text_[pos_] != 'x') throw SyntaxError(pos_, "expected variable 'x<index>' or constant");
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    const std::size_t start = pos_;
    int idx = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      idx = idx * 10 + (text_[pos_] - '0');
      if (idx >= kMaxOrder) throw SyntaxError(start, "variable index too large");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "expected variable index");
    max_index_ = std::max(max_index_, idx);
    return Monomial{1} << idx;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = -1;

 public:
  static bool is_zero_term(Monomial m) { return m == kZeroTerm; }
};

}  // namespace

AnfFunction::AnfFunction(int arity, std::vector<Monomial> monomials) : arity_(arity) {
  check_arity(arity);
  for (Monomial m : monomials) {
    if ((m >> arity) != 0) {
      throw Error(ErrorCode::ArityMismatch, "monomial uses a variable index >= arity " + std::to_string(arity));
    }
  }
  std::sort(monomials.begin(), monomials.end());
  // XOR semantics: pairs of equal monomials cancel.
  std::vector<Monomial> reduced;
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(monomials[i]);
    i = j;
  }
  std::sort(reduced.begin(), reduced.end(), monomial_less);
  monomials_ = std::move(reduced);
}

int AnfFunction::evaluate(State s) const {
  if (s.order() != arity_) {
    throw Error(ErrorCode::ArityMismatch, "state of order " + std::to_string(s.order()) + " for a function of arity " +
                                              std::to_string(arity_));
  }
  return evaluate_raw(s.value());
}

int AnfFunction::evaluate_raw(std::uint32_t state_value) const noexcept {
  const std::uint32_t vars = variable_mask(state_value, arity_);
  int out = 0;
  for (Monomial m : monomials_) out ^= static_cast<int>((vars & m) == m);
  return out;
}

AnfFunction parse_anf(std::string_view text, int arity) {
  AnfParser parser(text);
  std::vector<Monomial> terms = parser.parse();
  std::erase_if(terms, AnfParser::is_zero_term);
  const int needed = parser.max_index() + 1;
  if (arity == 0) arity = std::max(needed, 1);
  if (needed > arity) {
    throw Error(ErrorCode::ArityMismatch, "expression uses x" + std::to_string(needed - 1) + " but arity is " +
                                              std::to_string(arity));
  }
  return AnfFunction(arity, std::move(terms));
}

std::string format_anf(const AnfFunction& f) {
  if (f.monomials().empty()) return "0";
  std::string out;
  for (Monomial m : f.monomials()) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (Monomial rest = m; rest != 0; rest &= rest - 1) {
      if (!first) out += "*";
      out += "x" + std::to_string(std::countr_zero(rest));
      first = false;
    }
  }
  return out;
}

AnfFunction from_truth_table(std::span<const std::uint8_t> values) {
  const std::size_t len = values.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw Error(ErrorCode::BadLength, "truth table length " + std::to_string(len) + " is not a power of two >= 2");
  }
  const int k = std::countr_zero(len);
  check_arity(k);
  std::vector<std::uint8_t> coeff(values.begin(), values.end());
  for (auto& c : coeff) c &= 1u;
  // Binary Moebius transform.
  for (std::size_t step = 1; step < len; step <<= 1) {
    for (std::size_t i = 0; i < len; ++i) {
      if (i & step) coeff[i] ^= coeff[i ^ step];
    }
  }
  std::vector<Monomial> monomials;
  for (std::size_t u = 0; u < len; ++u) {
    if (coeff[u]) monomials.push_back(variable_mask(static_cast<std::uint32_t>(u), k));
  }
  return AnfFunction(k, std::move(monomials));
}

std::vector<std::uint8_t> truth_table(const AnfFunction& f) {
  const std::size_t len = std::size_t{1} << f.arity();
  std::vector<std::uint8_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<std::uint8_t>(f.evaluate_raw(static_cast<std::uint32_t>(i)));
  return out;
}

bool is_nonsingular(const AnfFunction& f) {
  bool linear_x0 = false;
  for (Monomial m : f.monomials()) {
    if (m == 1u) {
      linear_x0 = true;
    } else if (m & 1u) {
      return false;
    }
  }
  return linear_x0;
}

AnfFunction shift_embed(const AnfFunction& h, int n) {
  const int m = h.arity();
  if (n <= m) throw Error(ErrorCode::BadOrder, "embedding needs n > m (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  check_arity(n);
  std::vector<Monomial> out;
  out.reserve(h.monomials().size());
  for (Monomial mono : h.monomials()) out.push_back(mono << (n - m));
  return AnfFunction(n, std::move(out));
}

AnfFunction from_primitive_poly(const PrimPoly& g, int n) {
  const int m = g.degree();
  if (n <= m) throw Error(ErrorCode::BadOrder, "need n > deg g (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  check_arity(n);
  std::vector<Monomial> out{Monomial{1} << (n - m)};
  for (int i = 1; i < m; ++i) {
    if (g.coefficient(i)) out.push_back(Monomial{1} << (n - m + i));
  }
  return AnfFunction(n, std::move(out));
}

AnfFunction complement_fn(const AnfFunction& f) {
  std::vector<Monomial> out(f.monomials().begin(), f.monomials().end());
  out.push_back(0);
  return AnfFunction(f.arity(), std::move(out));
}

}  // namespace debruijn
