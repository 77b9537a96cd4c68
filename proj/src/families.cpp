#include "debruijn/families.hpp"

#include <map>
#include <set>

#include "debruijn/variants.hpp"

namespace debruijn {

namespace {

void check_order(int n, int min_order) {
  if (n < min_order) throw Error(ErrorCode::BadOrder, "order " + std::to_string(n) + " below " + std::to_string(min_order));
  if (n > kMaxOrder) throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n));
}

FamilyEntry make_entry(std::string params, const AnfFunction& f, State b, const GpoRun& run) {
  require_completed(run);
  return FamilyEntry{std::move(params), f, b, run.sequence};
}

FamilyResult gpo_family(std::string family, std::string params, const AnfFunction& f, const std::vector<State>& starts) {
  FamilyResult result{std::move(family), std::move(params), {}, 0};
  for (const State& b : starts) result.entries.push_back(make_entry("", f, b, run_gpo(f, b)));
  result.distinct_count = count_distinct(result.entries);
  return result;
}

void check_extra(bool ok, int kind, int n) {
  if (!ok) {
    throw Error(ErrorCode::BadParams, "parameters violate the condition of extra row " + std::to_string(kind) +
                                          " at n=" + std::to_string(n));
  }
}

}  // namespace

std::size_t count_distinct(const std::vector<FamilyEntry>& entries) {
  std::set<PeriodicSequence> canon;
  for (const auto& e : entries) canon.insert(canonical_rotation(e.sequence));
  return canon.size();
}

std::vector<std::vector<State>> collision_groups(const FamilyResult& result) {
  std::map<PeriodicSequence, std::vector<State>> groups;
  for (const auto& e : result.entries) groups[canonical_rotation(e.sequence)].push_back(e.initial);
  std::vector<std::vector<State>> out;
  for (auto& [seq, states] : groups) {
    if (states.size() > 1) out.push_back(std::move(states));
  }
  return out;
}

PeriodicSequence de_bruijn_seed_sequence(const AnfFunction& h) {
  const int m = h.arity();
  if (m < 2 || m > kMaxOrder) throw Error(ErrorCode::BadOrder, "seed order must be in [2, " + std::to_string(kMaxOrder) + "]");
  const std::size_t period = std::size_t{1} << m;
  std::vector<std::uint8_t> bits(period);
  std::uint32_t c = 0;
  for (std::size_t i = 0; i < period; ++i) {
    bits[i] = static_cast<std::uint8_t>(c >> (m - 1));
    c = ((c << 1) | static_cast<std::uint32_t>(h.evaluate_raw(c))) & State::mask(m);
  }
  PeriodicSequence seq(std::move(bits));
  if (c != 0 || !is_de_bruijn(seq, m)) {
    throw Error(ErrorCode::NotDeBruijnSeed, format_anf(h) + " does not generate a de Bruijn sequence of order " +
                                                std::to_string(m));
  }
  return seq;
}

FamilyResult f1_generate(const AnfFunction& h, int n) {
  const int m = h.arity();
  if (m < 2 || n <= m) throw Error(ErrorCode::BadOrder, "need n > m >= 2");
  check_order(n, 3);
  const PeriodicSequence seed = de_bruijn_seed_sequence(h);
  const AnfFunction f = shift_embed(h, n);
  return gpo_family("F1", "n=" + std::to_string(n) + " m=" + std::to_string(m) + " h=" + format_anf(h), f,
                    wrapped_windows(seed, n));
}

std::uint64_t f1_count(int m, int n) {
  if (m < 2 || n <= m) throw Error(ErrorCode::BadOrder, "need n > m >= 2");
  const std::uint64_t full = std::uint64_t{1} << m;
  return n == m + 1 ? full - 2 : full;
}

AnfFunction f2_function(int n, int t) {
  check_order(n, 2);
  if (t <= 0 || t >= n) throw Error(ErrorCode::BadT, "t=" + std::to_string(t) + " outside (0, " + std::to_string(n) + ")");
  Monomial prod = 0;
  for (int i = t; i < n; ++i) prod |= Monomial{1} << i;
  return AnfFunction(n, {0, prod});
}

FamilyResult f2_generate(int n, int t) {
  const AnfFunction f = f2_function(n, t);
  // The cycle (0, 1^{n-t}).
  std::vector<std::uint8_t> cycle(static_cast<std::size_t>(n - t + 1), 1);
  cycle[0] = 0;
  return gpo_family("F2", "n=" + std::to_string(n) + " t=" + std::to_string(t), f,
                    wrapped_windows(PeriodicSequence(std::move(cycle)), n));
}

AnfFunction f3_function(int n) {
  check_order(n, 4);
  const Monomial a = Monomial{1} << (n - 3), b = Monomial{1} << (n - 2), c = Monomial{1} << (n - 1);
  return AnfFunction(n, {0, a, c, a | b, b | c, a | b | c});
}

FamilyResult f3_generate(int n) {
  const AnfFunction f = f3_function(n);
  return gpo_family("F3", "n=" + std::to_string(n), f, wrapped_windows(PeriodicSequence({1, 1, 1, 0}), n));
}

AnfFunction extra_function(int kind, int n, const ExtraParams& p) {
  if (n > kMaxOrder) throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n));
  const Monomial last = n >= 1 ? Monomial{1} << (n - 1) : 0;
  switch (kind) {
    case 1:
      check_extra(n >= 3 && p.t > 0 && p.t < n - 1, kind, n);
      return AnfFunction(n, {last, (Monomial{1} << p.t) | last});
    case 2: {
      check_extra(n >= 3, kind, n);
      Monomial prod = 0;
      for (int i = 1; i < n; ++i) prod |= Monomial{1} << i;
      return AnfFunction(n, {last, prod});
    }
    case 3:
      check_extra(n >= 4 && p.t > 0 && p.t < n - 2, kind, n);
      return AnfFunction(n, {(Monomial{1} << p.t) | (Monomial{1} << (p.t + 1)), (Monomial{1} << (p.t + 1)) | last});
    case 4:
      check_extra(n >= 4 && p.k > 0 && p.k < p.l && p.l < n - 1, kind, n);
      return AnfFunction(n, {(Monomial{1} << p.k) | last, (Monomial{1} << p.l) | last});
    default:
      throw Error(ErrorCode::BadParams, "extra row must be 1..4, got " + std::to_string(kind));
  }
}

std::vector<ExtraParams> extra_parameter_space(int kind, int n) {
  std::vector<ExtraParams> out;
  switch (kind) {
    case 1:
      if (n >= 3)
        for (int t = 1; t < n - 1; ++t) out.push_back({t, 0, 0});
      break;
    case 2:
      if (n >= 3) out.push_back({});
      break;
    case 3:
      if (n >= 4)
        for (int t = 1; t < n - 2; ++t) out.push_back({t, 0, 0});
      break;
    case 4:
      if (n >= 4)
        for (int k = 1; k < n - 1; ++k)
          for (int l = k + 1; l < n - 1; ++l) out.push_back({0, k, l});
      break;
    default:
      throw Error(ErrorCode::BadParams, "extra row must be 1..4, got " + std::to_string(kind));
  }
  return out;
}

FamilyResult extra_generate(int kind, int n, const ExtraParams& p) {
  const AnfFunction f = extra_function(kind, n, p);
  std::string params = "n=" + std::to_string(n);
  if (kind == 1 || kind == 3) params += " t=" + std::to_string(p.t);
  if (kind == 4) params += " k=" + std::to_string(p.k) + " l=" + std::to_string(p.l);
  return gpo_family("Extra" + std::to_string(kind), params, f, {State::zeros(n)});
}

FamilyResult f4_generate(int n) {
  check_order(n, 2);
  FamilyResult result{"F4", "n=" + std::to_string(n), {}, 0};
  for (int t = 1; t < n; ++t) {
    result.entries.push_back(
        make_entry("t=" + std::to_string(t), prefer_no_function(n, t), State::zeros(n), prefer_no(n, t)));
  }
  result.distinct_count = count_distinct(result.entries);
  return result;
}

FamilyResult f5_enumerate(int n) {
  check_order(n, 3);
  FamilyResult result{"F5", "n=" + std::to_string(n), {}, 0};
  for (int m = 1; m < n && m <= kMaxPolyDegree; ++m) {
    for (const PrimPoly& g : enumerate_primitive(m)) {
      const AnfFunction f = from_primitive_poly(g, n);
      for (const State& b : prim_poly_initial_states(g, n)) {
        result.entries.push_back(make_entry("g=" + g.str(), f, b, prim_poly_run(n, g, b)));
      }
    }
  }
  result.distinct_count = count_distinct(result.entries);
  return result;
}

FamilyResult f6_enumerate(int n) {
  check_order(n, 3);
  FamilyResult result{"F6", "n=" + std::to_string(n), {}, 0};
  for (int m = 1; m < n && m <= kMaxPolyDegree; ++m) {
    for (const PrimPoly& g : enumerate_primitive(m)) {
      const AnfFunction f = prim_poly_complement_function(g, n);
      for (const State& b : prim_poly_complement_initial_states(g, n)) {
        result.entries.push_back(make_entry("g=" + g.str(), f, b, prim_poly_complement_run(n, g, b)));
      }
    }
  }
  result.distinct_count = count_distinct(result.entries);
  return result;
}

std::uint64_t euler_totient(std::uint64_t k) {
  if (k == 0) return 0;
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

std::uint64_t f5_count_formula(int n) {
  if (n <= 2) throw Error(ErrorCode::BadOrder, "formula needs n > 2");
  if (n > 40) throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n));
  auto prim_count = [](int m) { return euler_totient((std::uint64_t{1} << m) - 1) / static_cast<std::uint64_t>(m); };
  const int top = n - 1;
  std::uint64_t total = prim_count(top) * ((std::uint64_t{1} << top) - 2);
  for (int m = 1; m <= n - 2; ++m) total += prim_count(m) * ((std::uint64_t{1} << m) - 1);
  return total;
}

}  // namespace debruijn
