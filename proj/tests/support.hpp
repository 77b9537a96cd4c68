#pragma once

// Independent oracles and random generators for the test suites. Everything
// here works on plain strings and small integers and avoids the library, so
// that agreement with the library means something.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '0' || c == '1') out += c;
  }
  return out;
}

inline std::string rotate(const std::string& s, std::size_t k) {
  k %= s.size();
  return s.substr(k) + s.substr(0, k);
}

inline std::string cyclic_substr(const std::string& s, std::size_t start, std::size_t len) {
  std::string out;
  for (std::size_t i = 0; i < len; ++i) out += s[(start + i) % s.size()];
  return out;
}

inline std::string least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t k = 1; k < s.size(); ++k) best = std::min(best, rotate(s, k));
  return best;
}

inline bool is_de_bruijn(const std::string& s, int n) {
  if (s.size() != (std::size_t{1} << n)) return false;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < s.size(); ++i) seen.insert(cyclic_substr(s, i, static_cast<std::size_t>(n)));
  return seen.size() == s.size();
}

inline std::string to_bits(std::uint32_t v, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v >> (n - 1 - i)) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

inline std::uint32_t from_bits(const std::string& s) {
  std::uint32_t v = 0;
  for (char c : s) v = (v << 1) | static_cast<std::uint32_t>(c == '1');
  return v;
}

// A polynomial over GF(2) as a list of monomials, each a list of variable indices.
using Poly = std::vector<std::vector<int>>;

inline int eval(const Poly& p, const std::string& x) {
  int acc = 0;
  for (const auto& mono : p) {
    int term = 1;
    for (int i : mono) term &= x[static_cast<std::size_t>(i)] - '0';
    acc ^= term;
  }
  return acc;
}

using Feedback = std::function<int(const std::string&)>;

struct Walk {
  std::vector<std::string> states;  // excludes the final return to b; may repeat
  std::vector<bool> fallback;       // arrival at states[i + 1] (or b) used the fallback
  std::string output;
  bool completed = false;
};

// Greedy prefer-opposite on strings, with an optional forced successor and a
// step limit of 2^{n+1}.
inline Walk greedy(const Feedback& f, const std::string& b,
                   std::optional<std::pair<std::string, std::string>> forced = std::nullopt) {
  Walk w;
  std::set<std::string> seen{b};
  std::string cur = b;
  const std::size_t limit = std::size_t{2} << b.size();
  for (std::size_t step = 0; step < limit; ++step) {
    w.states.push_back(cur);
    w.output += cur[0];
    std::string next;
    bool fb = false;
    if (forced && cur == forced->first) {
      next = forced->second;
    } else {
      const int y = f(cur);
      const std::string pref = cur.substr(1) + static_cast<char>('0' + (1 - y));
      if (!seen.count(pref)) {
        next = pref;
      } else {
        next = cur.substr(1) + static_cast<char>('0' + y);
        fb = true;
      }
    }
    w.fallback.push_back(fb);
    if (next == b) {
      w.completed = true;
      return w;
    }
    seen.insert(next);
    cur = next;
  }
  return w;
}

// ANF coefficients by the subset sum a_u = XOR_{v subset of u} f(v), variable i at bit i.
inline std::vector<int> anf_coefficients(const std::vector<int>& table, int n) {
  std::vector<int> coeff(table.size(), 0);
  for (std::uint32_t u = 0; u < table.size(); ++u) {
    int acc = 0;
    for (std::uint32_t v = u;; v = (v - 1) & u) {
      std::uint32_t idx = 0;  // table index is big-endian in x_0..x_{n-1}
      for (int i = 0; i < n; ++i) {
        if ((v >> i) & 1u) idx |= 1u << (n - 1 - i);
      }
      acc ^= table[idx];
      if (v == 0) break;
    }
    coeff[u] = acc;
  }
  return coeff;
}

// Linear recurrence s_{m+l} = sum a_i s_{l+i} from 0^{m-1}1, g in descending coefficient text.
inline std::string lfsr(const std::string& g, std::size_t length) {
  const int m = static_cast<int>(g.size()) - 1;
  std::vector<int> a(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) a[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(m - i)] - '0';
  std::string s(static_cast<std::size_t>(m) - 1, '0');
  s += '1';
  while (s.size() < length) {
    const std::size_t l = s.size() - static_cast<std::size_t>(m);
    int v = 0;
    for (int i = 0; i < m; ++i) v ^= a[static_cast<std::size_t>(i)] & (s[l + static_cast<std::size_t>(i)] - '0');
    s += static_cast<char>('0' + v);
  }
  return s.substr(0, length);
}

// Polynomial arithmetic mod g, polynomials as bit masks (bit i = x^i).
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t g, int m) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> m) & 1) a ^= g;
  }
  return r;
}

inline std::uint64_t powmod_x(std::uint64_t e, std::uint64_t g, int m) {
  std::uint64_t result = 1, base = m == 1 ? (2 ^ g) : 2;
  while (e) {
    if (e & 1) result = mulmod(result, base, g, m);
    base = mulmod(base, base, g, m);
    e >>= 1;
  }
  return result;
}

// Primitive iff x has multiplicative order exactly 2^m - 1 modulo g.
inline bool is_primitive(std::uint64_t g, int m) {
  if (!(g & 1)) return false;
  const std::uint64_t order = (std::uint64_t{1} << m) - 1;
  if (powmod_x(order, g, m) != 1) return false;
  std::uint64_t rest = order;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    if (powmod_x(order / p, g, m) == 1) return false;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1 && rest != order && powmod_x(order / rest, g, m) == 1) return false;
  return true;
}

inline std::uint64_t totient(std::uint64_t k) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= k; ++i) c += std::gcd(i, k) == 1;
  return c;
}

}  // namespace oracle

namespace gen {

inline std::mt19937& rng() {
  static std::mt19937 engine(20240611u);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline std::string bits(std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += static_cast<char>('0' + uniform(0, 1));
  return s;
}

inline oracle::Poly poly(int n, int max_terms) {
  oracle::Poly p;
  const int terms = uniform(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> mono;
    for (int i = 0; i < n; ++i) {
      if (uniform(0, 2) == 0) mono.push_back(i);
    }
    p.push_back(mono);
  }
  return p;
}

inline std::string poly_text(const oracle::Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& mono : p) {
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t j = 0; j < mono.size(); ++j) out += (j ? "*x" : "x") + std::to_string(mono[j]);
  }
  return out;
}

// Uniformly random de Bruijn sequence of order n: a random spanning in-tree of
// the order-(n-1) graph (loop-erased walks) fixes each vertex's last exit edge.
inline std::string de_bruijn(int n) {
  const int k = n - 1;
  const std::uint32_t size = std::uint32_t{1} << k, mask = size - 1;
  const std::uint32_t root = 0;
  std::vector<int> last_exit(size, -1);
  std::vector<bool> in_tree(size, false);
  in_tree[root] = true;
  std::vector<int> next(size, -1);
  for (std::uint32_t start = 0; start < size; ++start) {
    std::uint32_t u = start;
    while (!in_tree[u]) {
      next[u] = uniform(0, 1);
      u = ((u << 1) | static_cast<std::uint32_t>(next[u])) & mask;
    }
    u = start;
    while (!in_tree[u]) {
      last_exit[u] = next[u];
      in_tree[u] = true;
      u = ((u << 1) | static_cast<std::uint32_t>(next[u])) & mask;
    }
  }
  std::vector<int> used(size, 0);
  std::string out;
  std::uint32_t v = root;
  for (std::uint32_t step = 0; step < 2 * size; ++step) {
    int y;
    if (used[v] == 0) {
      y = last_exit[v] < 0 ? 1 : 1 - last_exit[v];
    } else {
      y = last_exit[v] < 0 ? 0 : last_exit[v];
    }
    ++used[v];
    out += static_cast<char>('0' + y);
    v = ((v << 1) | static_cast<std::uint32_t>(y)) & mask;
  }
  return out;
}

}  // namespace gen
