#include "debruijn/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "debruijn/families.hpp"
#include "debruijn/fsrgraph.hpp"
#include "debruijn/gpo.hpp"
#include "debruijn/io.hpp"
#include "debruijn/reverse.hpp"
#include "debruijn/variants.hpp"

namespace debruijn::cli {

namespace {

constexpr const char* kVersion = "0.3.0";

const std::vector<std::string> kAlgos = {"gpo", "prefer-one", "prefer-zero", "prefer-no",
                                         "prim-poly", "prim-poly-complement", "special"};
const std::vector<std::string> kFamilies = {"f1", "f2", "f3", "f4", "f5", "f6", "extra"};

void need(bool present, const std::string& what, const Command& cmd) {
  if (!present) throw UsageError(cmd.verb + ": missing required option " + what);
}

void need_format(const Command& cmd, const std::vector<std::string>& allowed) {
  if (std::find(allowed.begin(), allowed.end(), cmd.format) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : "|") + a;
    throw UsageError(cmd.verb + ": --format must be one of " + list);
  }
}

void validate(const Command& c) {
  if (c.verb == "gen") {
    if (std::find(kAlgos.begin(), kAlgos.end(), c.algo) == kAlgos.end()) throw UsageError("gen: unknown --algo " + c.algo);
    need_format(c, {"plain", "json"});
    if (c.algo == "gpo") {
      need(c.function.has_value(), "--f", c);
      need(c.init.has_value(), "--init", c);
    } else if (c.algo == "prefer-one" || c.algo == "prefer-zero") {
      need(c.n.has_value(), "--n", c);
    } else if (c.algo == "prefer-no") {
      need(c.n.has_value(), "--n", c);
      need(c.t.has_value(), "--t", c);
    } else if (c.algo == "prim-poly" || c.algo == "prim-poly-complement") {
      need(c.poly.has_value(), "--g", c);
      need(c.init.has_value(), "--init", c);
    } else if (c.algo == "special") {
      need(c.init.has_value(), "--init", c);
    }
  } else if (c.verb == "check") {
    need_format(c, {"plain", "json"});
    const bool seq_mode = c.seq.has_value();
    const bool fn_mode = c.function.has_value();
    if (seq_mode == fn_mode) throw UsageError("check: give either --seq (with --n) or --f (with --init)");
    if (seq_mode) need(c.n.has_value(), "--n", c);
    if (fn_mode) need(c.init.has_value(), "--init", c);
  } else if (c.verb == "graph") {
    need(c.function.has_value(), "--f", c);
    need_format(c, {"dot", "json"});
  } else if (c.verb == "families") {
    need(c.family.has_value(), "--family", c);
    if (std::find(kFamilies.begin(), kFamilies.end(), *c.family) == kFamilies.end()) {
      throw UsageError("families: unknown --family " + *c.family);
    }
    need_format(c, {"plain", "json", "csv"});
    need(c.n.has_value(), "--n", c);
    if (*c.family == "f1") need(c.seed.has_value(), "--h", c);
    if (*c.family == "f2") need(c.t.has_value(), "--t", c);
    if (*c.family == "extra") need(c.kind.has_value(), "--kind", c);
  } else if (c.verb == "reverse") {
    need_format(c, {"plain", "json", "csv"});
    if (c.table) {
      need(c.n.has_value(), "--n", c);
    } else {
      need(c.seq.has_value(), "--seq", c);
      need(c.init.has_value(), "--init", c);
    }
  } else if (c.verb == "primpoly") {
    if (c.m.has_value() == c.poly.has_value()) throw UsageError("primpoly: give exactly one of --m or --g");
  } else if (c.verb == "count") {
    need(c.family.has_value(), "--family", c);
    need(c.n.has_value(), "--n", c);
    if (*c.family == "f1") {
      need(c.seed.has_value(), "--h", c);
    } else if (*c.family != "f5" && *c.family != "f6") {
      throw UsageError("count: --family must be f1, f5 or f6");
    }
  } else {
    throw UsageError("unknown verb '" + c.verb + "'");
  }
}

std::string bits(const PeriodicSequence& s, bool pretty) { return pretty ? s.pretty() : s.str(); }

int emit_run(const Command& c, const GpoRun& run, int order, std::ostream& out, std::ostream& err) {
  if (c.format == "json") {
    auto j = io::to_json(run);
    j["de_bruijn"] = run.completed && is_de_bruijn(run.sequence, order);
    out << j.dump(2) << '\n';
  } else if (c.trace) {
    out << format_trace(run);
  } else if (run.completed) {
    out << bits(run.sequence, c.pretty) << '\n';
  }
  if (!run.completed) {
    err << "error: NonTerminating: no return to the initial state within " << run.steps() << " steps\n";
    return kExitDomainError;
  }
  if (c.strict && !is_de_bruijn(run.sequence, order)) {
    err << "error: output is not a de Bruijn sequence of order " << order << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

int do_gen(const Command& c, std::ostream& out, std::ostream& err) {
  if (c.algo == "gpo") {
    const State b = State::parse(*c.init);
    const AnfFunction f = parse_anf(*c.function, b.order());
    return emit_run(c, run_gpo(f, b, c.cap), b.order(), out, err);
  }
  if (c.algo == "prefer-one") return emit_run(c, prefer_one(*c.n), *c.n, out, err);
  if (c.algo == "prefer-zero") return emit_run(c, prefer_zero(*c.n), *c.n, out, err);
  if (c.algo == "prefer-no") return emit_run(c, prefer_no(*c.n, *c.t, c.allow_t0), *c.n, out, err);
  const State b = State::parse(*c.init);
  if (c.n && *c.n != b.order()) throw Error(ErrorCode::BadOrder, "--n disagrees with the length of --init");
  if (c.algo == "prim-poly") return emit_run(c, prim_poly_run(b.order(), PrimPoly::parse(*c.poly), b), b.order(), out, err);
  if (c.algo == "prim-poly-complement") {
    return emit_run(c, prim_poly_complement_run(b.order(), PrimPoly::parse(*c.poly), b), b.order(), out, err);
  }
  return emit_run(c, special_fn_run(b.order(), b), b.order(), out, err);
}

void print_report(const ConditionReport& r, std::ostream& out) {
  auto list = [](const std::vector<State>& states) {
    std::string s;
    for (const auto& st : states) s += (s.empty() ? "" : ",") + st.str();
    return s;
  };
  out << "two_children_ok=" << (r.two_children_ok ? "true" : "false");
  if (!r.two_children_witnesses.empty()) out << " witnesses=" << list(r.two_children_witnesses);
  out << '\n';
  out << "unique_path_ok=" << (r.unique_path_ok ? "true" : "false");
  if (!r.unique_path_witnesses.empty()) out << " witnesses=" << list(r.unique_path_witnesses);
  out << '\n';
}

int do_check(const Command& c, std::ostream& out) {
  if (c.seq) {
    const PeriodicSequence s = PeriodicSequence::parse(*c.seq);
    const bool ok = is_de_bruijn(s, *c.n);
    if (c.format == "json") {
      out << nlohmann::json{{"de_bruijn", ok}, {"n", *c.n}, {"period", s.period()}}.dump(2) << '\n';
    } else {
      out << "de_bruijn=" << (ok ? "true" : "false") << " n=" << *c.n << " period=" << s.period() << '\n';
    }
    return c.strict && !ok ? kExitDomainError : kExitOk;
  }
  const State b = State::parse(*c.init);
  const AnfFunction f = parse_anf(*c.function, b.order());
  const ConditionReport report = check_gpo_conditions(build_graph(f), b, c.all_witnesses ? 0 : kDefaultWitnessCap);
  if (c.format == "json") {
    out << io::to_json(report).dump(2) << '\n';
  } else {
    print_report(report, out);
  }
  return c.strict && !report.ok() ? kExitDomainError : kExitOk;
}

int do_graph(const Command& c, std::ostream& out) {
  std::optional<State> b;
  if (c.init) b = State::parse(*c.init);
  int arity = c.n.value_or(b ? b->order() : 0);
  const AnfFunction f = parse_anf(*c.function, arity);
  if (b && b->order() != f.arity()) throw Error(ErrorCode::ArityMismatch, "--init length differs from the function arity");
  const StateGraph g = build_graph(f);
  if (c.format == "json") {
    out << io::graph_summary(g, b).dump(2) << '\n';
    return kExitOk;
  }
  std::vector<State> marks;
  for (const auto& h : c.highlight) marks.push_back(State::parse(h));
  out << to_dot(g, marks);
  return kExitOk;
}

void print_family(const Command& c, const FamilyResult& r, std::ostream& out) {
  if (c.format == "json") {
    out << io::to_json(r).dump(2) << '\n';
  } else if (c.format == "csv") {
    out << io::to_csv(r);
  } else {
    out << io::to_plain(r, c.pretty);
  }
}

FamilyResult family_result(const Command& c) {
  const std::string& fam = *c.family;
  const int n = *c.n;
  if (fam == "f1") {
    const AnfFunction h = parse_anf(*c.seed, c.m.value_or(0));
    return f1_generate(h, n);
  }
  if (fam == "f2") return f2_generate(n, *c.t);
  if (fam == "f3") return f3_generate(n);
  if (fam == "f4") return f4_generate(n);
  if (fam == "f5") return f5_enumerate(n);
  if (fam == "f6") return f6_enumerate(n);
  return extra_generate(*c.kind, n, ExtraParams{c.t.value_or(0), c.k.value_or(0), c.l.value_or(0)});
}

int do_families(const Command& c, std::ostream& out) {
  print_family(c, family_result(c), out);
  return kExitOk;
}

int do_reverse(const Command& c, std::ostream& out) {
  if (c.table) {
    const auto blocks = enumerate_pairs(*c.n);
    if (c.format == "json") {
      out << io::to_json(blocks).dump(2) << '\n';
    } else if (c.format == "csv") {
      out << io::to_csv(blocks);
    } else {
      out << io::to_plain(blocks);
    }
    return kExitOk;
  }
  const PeriodicSequence s = PeriodicSequence::parse(*c.seq);
  const State b = State::parse(*c.init);
  const AnfFunction f = derive_feedback(s, b);
  if (c.format == "json") {
    out << nlohmann::json{{"sequence", s.str()}, {"initial_state", b.str()}, {"f", format_anf(f)}}.dump(2) << '\n';
  } else {
    out << format_anf(f) << '\n';
  }
  return kExitOk;
}

int do_primpoly(const Command& c, std::ostream& out) {
  if (c.m) {
    for (const auto& g : enumerate_primitive(*c.m)) out << g.str() << '\n';
    return kExitOk;
  }
  const PrimPoly g = PrimPoly::parse(*c.poly);
  const bool prim = is_primitive(g);
  out << "primitive=" << (prim ? "true" : "false");
  if (prim) out << " m_sequence=" << m_sequence(g).str();
  out << '\n';
  return c.strict && !prim ? kExitDomainError : kExitOk;
}

int do_count(const Command& c, std::ostream& out) {
  const int n = *c.n;
  std::uint64_t formula = 0, enumerated = 0;
  if (*c.family == "f1") {
    const AnfFunction h = parse_anf(*c.seed, c.m.value_or(0));
    formula = f1_count(h.arity(), n);
    enumerated = f1_generate(h, n).distinct_count;
  } else {
    formula = f5_count_formula(n);
    enumerated = (*c.family == "f5" ? f5_enumerate(n) : f6_enumerate(n)).distinct_count;
  }
  const bool match = formula == enumerated;
  out << "formula=" << formula << " enumerated=" << enumerated << " match=" << (match ? "true" : "false") << '\n';
  return c.strict && !match ? kExitDomainError : kExitOk;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Greedy de Bruijn sequence generator", "debruijn"};
  app.require_subcommand(1, 1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_help_all_flag("--help-all", "Show help for every verb");

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--verbose", cmd.verbose, "Print a version banner on stderr");
  };

  auto* gen = app.add_subcommand("gen", "Run a greedy algorithm and print the sequence");
  gen->add_option("--algo", cmd.algo, "gpo|prefer-one|prefer-zero|prefer-no|prim-poly|prim-poly-complement|special");
  gen->add_option("--f", cmd.function, "Feedback function in ANF, e.g. \"1 + x1*x2*x3\"");
  gen->add_option("--init", cmd.init, "Initial state, e.g. 1110");
  gen->add_option("--n", cmd.n, "Order");
  gen->add_option("--t", cmd.t, "Prefer-No parameter t");
  gen->add_option("--g", cmd.poly, "Primitive polynomial, descending coefficients (e.g. 1011)");
  gen->add_option("--cap", cmd.cap, "Step cap (default 2^(n+1))");
  gen->add_flag("--trace", cmd.trace, "Print the visited states, fallback arrivals marked '*', forced ones '!'");
  gen->add_flag("--pretty", cmd.pretty, "Group output bits in fours");
  gen->add_flag("--strict", cmd.strict, "Exit 1 if the output is not de Bruijn");
  gen->add_flag("--allow-t0", cmd.allow_t0, "Permit t=0 for prefer-no");
  common(gen);

  auto* check = app.add_subcommand("check", "Test a sequence for the de Bruijn property, or (f, b) for the greedy conditions");
  check->add_option("--seq", cmd.seq, "Sequence bits (underscores/spaces ignored)");
  check->add_option("--n", cmd.n, "Order");
  check->add_option("--f", cmd.function, "Feedback function in ANF");
  check->add_option("--init", cmd.init, "Initial state b");
  check->add_flag("--strict", cmd.strict, "Exit 1 if the check fails");
  check->add_flag("--all-witnesses", cmd.all_witnesses, "List every violating state");
  common(check);

  auto* graph = app.add_subcommand("graph", "Export the state graph as DOT or a JSON summary");
  graph->add_option("--f", cmd.function, "Feedback function in ANF");
  graph->add_option("--n", cmd.n, "Order (defaults to the --init length or the largest variable index + 1)");
  graph->add_option("--init", cmd.init, "Initial state for the condition report");
  graph->add_option("--highlight", cmd.highlight, "States to fill gray")->delimiter(',');
  common(graph);

  auto* fam = app.add_subcommand("families", "Enumerate a family of de Bruijn sequences");
  fam->add_option("--family", cmd.family, "f1|f2|f3|f4|f5|f6|extra");
  fam->add_option("--n", cmd.n, "Order");
  fam->add_option("--t", cmd.t, "t for f2 and extra rows 1, 3");
  fam->add_option("--h", cmd.seed, "Seed function for f1");
  fam->add_option("--m", cmd.m, "Arity of --h (defaults to the largest variable index + 1)");
  fam->add_option("--kind", cmd.kind, "Extra row 1..4");
  fam->add_option("--k", cmd.k, "k for extra row 4");
  fam->add_option("--l", cmd.l, "l for extra row 4");
  fam->add_flag("--pretty", cmd.pretty, "Group output bits in fours");
  common(fam);

  auto* rev = app.add_subcommand("reverse", "Derive a feedback function that regenerates a sequence");
  rev->add_option("--seq", cmd.seq, "de Bruijn sequence");
  rev->add_option("--init", cmd.init, "Initial state b (a window of the sequence)");
  rev->add_flag("--table", cmd.table, "Tabulate (f, b) groups for every sequence of order --n");
  rev->add_option("--n", cmd.n, "Order for --table (3..5)");
  common(rev);

  auto* prim = app.add_subcommand("primpoly", "List primitive polynomials or test one");
  prim->add_option("--m", cmd.m, "Degree to enumerate");
  prim->add_option("--g", cmd.poly, "Polynomial to test, descending coefficients");
  prim->add_flag("--strict", cmd.strict, "Exit 1 if --g is not primitive");
  common(prim);

  auto* count = app.add_subcommand("count", "Compare a counting formula with enumeration");
  count->add_option("--family", cmd.family, "f1|f5|f6");
  count->add_option("--n", cmd.n, "Order");
  count->add_option("--h", cmd.seed, "Seed function for f1");
  count->add_option("--m", cmd.m, "Arity of --h");
  count->add_flag("--strict", cmd.strict, "Exit 1 on mismatch");
  common(count);

  std::string format_gen = "plain", format_graph = "dot", format_other = "plain";
  gen->add_option("--format", format_gen, "plain|json");
  check->add_option("--format", format_other, "plain|json");
  graph->add_option("--format", format_graph, "dot|json");
  fam->add_option("--format", format_other, "plain|json|csv");
  rev->add_option("--format", format_other, "plain|json|csv");

  std::vector<const char*> argv{"debruijn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto* sub : app.get_subcommands()) cmd.verb = sub->get_name();
  if (cmd.verb == "gen") {
    cmd.format = format_gen;
  } else if (cmd.verb == "graph") {
    cmd.format = format_graph;
  } else {
    cmd.format = format_other;
  }
  validate(cmd);
  return cmd;
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.verbose) err << "debruijn " << kVersion << '\n';
  try {
    if (cmd.verb == "gen") return do_gen(cmd, out, err);
    if (cmd.verb == "check") return do_check(cmd, out);
    if (cmd.verb == "graph") return do_graph(cmd, out);
    if (cmd.verb == "families") return do_families(cmd, out);
    if (cmd.verb == "reverse") return do_reverse(cmd, out);
    if (cmd.verb == "primpoly") return do_primpoly(cmd, out);
    if (cmd.verb == "count") return do_count(cmd, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  err << "error: unknown verb '" << cmd.verb << "'\n";
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return execute(cmd, out, err);
}

}  // namespace debruijn::cli
