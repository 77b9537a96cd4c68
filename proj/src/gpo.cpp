#include "debruijn/gpo.hpp"

namespace debruijn {

GpoRun run_greedy(const AnfFunction& f, State b, const GreedyOptions& options) {
  const int n = b.order();
  if (f.arity() != n) {
    throw Error(ErrorCode::ArityMismatch,
                "function arity " + std::to_string(f.arity()) + " but initial state has order " + std::to_string(n));
  }
  if (n < 2) throw Error(ErrorCode::BadOrder, "greedy runs need order >= 2");
  if (options.forced && (options.forced->from.order() != n || options.forced->to.order() != n)) {
    throw Error(ErrorCode::ArityMismatch, "forced transition has the wrong order");
  }
  const std::size_t n_states = std::size_t{1} << n;
  const std::size_t cap = options.cap == 0 ? 2 * n_states : options.cap;
  const std::uint32_t mask = State::mask(n);

  std::vector<std::uint8_t> seen(n_states, 0);
  std::vector<std::uint32_t> trace{b.value()};
  std::vector<bool> fallback, forced;
  trace.reserve(n_states + 1);
  seen[b.value()] = 1;

  GpoRun run;
  std::uint32_t c = b.value();
  for (std::size_t step = 0; step < cap; ++step) {
    std::uint32_t next;
    bool took_fallback = false, took_forced = false;
    if (options.forced && c == options.forced->from.value()) {
      next = options.forced->to.value();
      took_forced = true;
    } else {
      const auto y = static_cast<std::uint32_t>(f.evaluate_raw(c));
      const std::uint32_t preferred = ((c << 1) | (y ^ 1u)) & mask;
      if (!seen[preferred]) {
        next = preferred;
      } else {
        next = ((c << 1) | y) & mask;
        took_fallback = true;
      }
    }
    trace.push_back(next);
    fallback.push_back(took_fallback);
    forced.push_back(took_forced);
    seen[next] = 1;
    c = next;
    if (c == b.value()) {
      run.completed = true;
      break;
    }
  }

  const std::size_t printed = run.completed ? trace.size() - 1 : trace.size();
  std::vector<std::uint8_t> bits(printed);
  run.trace.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i < printed) bits[i] = static_cast<std::uint8_t>(trace[i] >> (n - 1));
    run.trace.emplace_back(n, trace[i]);
  }
  run.sequence = PeriodicSequence(std::move(bits));
  run.fallback = std::move(fallback);
  run.forced = std::move(forced);
  return run;
}

GpoRun run_gpo(const AnfFunction& f, State b, std::size_t cap) {
  GreedyOptions options;
  options.cap = cap;
  return run_greedy(f, b, options);
}

const GpoRun& require_completed(const GpoRun& run) {
  if (!run.completed) {
    throw Error(ErrorCode::NonTerminating, "no return to the initial state within " + std::to_string(run.steps()) +
                                               " steps (initial state is a leaf or the conditions fail)");
  }
  return run;
}

GpoRun prefer_one(int n) { return run_gpo(AnfFunction::zero(n), State::zeros(n)); }

GpoRun prefer_zero(int n) { return run_gpo(AnfFunction::one(n), State::ones(n)); }

std::string format_trace(const GpoRun& run) {
  std::string out;
  for (std::size_t i = 0; i < run.trace.size(); ++i) {
    out += run.trace[i].str();
    if (i > 0 && run.fallback[i - 1]) out += '*';
    if (i > 0 && run.forced[i - 1]) out += '!';
    out += '\n';
  }
  return out;
}

}  // namespace debruijn
