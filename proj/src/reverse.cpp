#include "debruijn/reverse.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace debruijn {

namespace {

void require_de_bruijn(const PeriodicSequence& s, int n) {
  if (!is_de_bruijn(s, n)) {
    throw Error(ErrorCode::NotDeBruijn, "sequence of period " + std::to_string(s.period()) +
                                            " is not de Bruijn of order " + std::to_string(n));
  }
}

void check_enumeration_order(int n, int min_order) {
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::OrderTooLarge, "exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  if (n < min_order) throw Error(ErrorCode::BadOrder, "order " + std::to_string(n) + " below " + std::to_string(min_order));
}

// Depth-first Hamiltonian-cycle search in the order-n de Bruijn graph, from 0^n.
class CycleSearch {
 public:
  explicit CycleSearch(int n) : n_(n), size_(std::uint32_t{1} << n), seen_(size_, 0) {}

  std::vector<PeriodicSequence> run() {
    path_.push_back(0);
    seen_[0] = 1;
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::uint32_t v) {
    if (path_.size() == size_) {
      if (((v << 1) & State::mask(n_)) == 0) record();
      return;
    }
    for (std::uint32_t y : {0u, 1u}) {
      const std::uint32_t w = ((v << 1) | y) & State::mask(n_);
      if (seen_[w]) continue;
      seen_[w] = 1;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      seen_[w] = 0;
    }
  }

  void record() {
    std::vector<std::uint8_t> bits(size_);
    for (std::uint32_t i = 0; i < size_; ++i) bits[i] = static_cast<std::uint8_t>(path_[i] >> (n_ - 1));
    found_.emplace_back(std::move(bits));
  }

  int n_;
  std::uint32_t size_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint32_t> path_;
  std::vector<PeriodicSequence> found_;
};

}  // namespace

AnfFunction derive_feedback(const PeriodicSequence& s, State b) {
  const int n = b.order();
  require_de_bruijn(s, n);
  const long start = find_window(s, b);
  if (start < 0) throw Error(ErrorCode::BadInitialState, b.str() + " is not a window of the sequence");
  const PeriodicSequence r = s.rotated(static_cast<std::size_t>(start));

  const int k = n - 1;
  const std::size_t table_size = std::size_t{1} << k;
  std::vector<std::uint8_t> g(table_size, 0);
  std::vector<std::uint8_t> defined(table_size, 0);
  const std::uint32_t root = b.value() >> 1;
  g[root] = static_cast<std::uint8_t>(b.last());
  defined[root] = 1;

  const auto prefixes = wrapped_windows(r, k);
  for (std::size_t j = 0; j < r.period(); ++j) {
    const std::uint32_t w = prefixes[j].value();
    if (defined[w]) continue;
    g[w] = static_cast<std::uint8_t>(r[j + static_cast<std::size_t>(k)] ^ 1);
    defined[w] = 1;
  }
  return shift_embed(from_truth_table(g), n);
}

AnfFunction fsr_feedback(const PeriodicSequence& s) {
  const int n = std::countr_zero(s.period());
  require_de_bruijn(s, n);
  std::vector<std::uint8_t> table(s.period());
  const auto ws = windows(s, n);
  for (std::size_t i = 0; i < ws.size(); ++i) table[ws[i].value()] = static_cast<std::uint8_t>(s[i + static_cast<std::size_t>(n)]);
  return from_truth_table(table);
}

std::vector<PeriodicSequence> enumerate_de_bruijn(int n) {
  check_enumeration_order(n, 2);
  auto out = CycleSearch(n).run();
  std::sort(out.begin(), out.end());
  return out;
}

PairBlock pair_block(const PeriodicSequence& s) {
  const int n = std::countr_zero(s.period());
  require_de_bruijn(s, n);
  std::map<std::string, PairGroup> by_text;
  for (const State& b : windows(s, n)) {
    AnfFunction f = derive_feedback(s, b);
    auto [it, inserted] = by_text.try_emplace(format_anf(f), PairGroup{f, {}});
    it->second.initial_states.push_back(b);
  }
  PairBlock block{canonical_rotation(s), {}};
  for (auto& [text, group] : by_text) {
    std::sort(group.initial_states.begin(), group.initial_states.end());
    block.groups.push_back(std::move(group));
  }
  return block;
}

std::vector<PairBlock> enumerate_pairs(int n) {
  check_enumeration_order(n, 3);
  std::vector<PairBlock> out;
  for (const auto& s : enumerate_de_bruijn(n)) out.push_back(pair_block(s));
  return out;
}

}  // namespace debruijn
