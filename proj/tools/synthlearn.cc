// Command-line front-end: synthesize a Mealy machine from a problem file,
// check a machine against a specification, or emit a characteristic sample.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "synthlearn/problem.hh"
#include "synthlearn/synth.hh"

using namespace synthlearn;

namespace {

constexpr int exit_error = 3;

void write_file (const std::string& path, const std::string& text) {
  std::ofstream out (path, std::ios::binary);
  if (!out)
    throw std::runtime_error ("cannot write '" + path + "'");
  out << text;
}

std::string format_trace (const alphabet& ab, const io_word& w) {
  std::string s;
  for (std::size_t j = 0; j < w.size (); ++j)
    s += (j ? " # " : "") + ab.format (side::input, w[j].in) + "." + ab.format (side::output, w[j].out);
  return s;
}

merge_strategy merge_by_name (const std::string& name, std::uint64_t seed) {
  if (name == "min-cf")
    return sigma_g_min_cf ();
  if (name == "first")
    return sigma_g_first ();
  return sigma_g_random (seed);
}

completion_strategy complete_by_name (const std::string& name, std::uint64_t seed) {
  if (name == "lazy-min-cf")
    return sigma_c_lazy_min_cf ();
  if (name == "lazy-first")
    return sigma_c_lazy_first ();
  return sigma_c_lazy_random (seed);
}

nlohmann::json attempt_json (const attempt_stats& a) {
  return {{"event", "attempt"},
          {"k", a.k},
          {"antichain_size", a.antichain_size},
          {"game_iterations", a.game_iterations},
          {"spec_realizable", a.spec_realizable},
          {"pta_states", a.pta_states},
          {"gen_merges", a.gen_merges},
          {"gen_states", a.gen_states},
          {"comp_iterations", a.comp_iterations},
          {"fresh_states", a.fresh_states},
          {"result", a.result},
          {"seconds", a.seconds}};
}

struct synth_args {
    std::string problem_file;
    std::string spec_automaton;
    int max_k = -1;
    bool complete_bound = false;
    std::string strategy_merge = "min-cf";
    std::string strategy_complete = "lazy-min-cf";
    std::string dot;
    std::string out;
    std::string dump_antichain;
    std::string stats;
    std::string gen_trace;
    std::uint64_t seed = 0;
};

int run_synth (const synth_args& args) {
  auto p = load_problem (args.problem_file);
  std::shared_ptr<const ucw> a;
  if (!args.spec_automaton.empty ()) {
    a = std::make_shared<const ucw> (parse_automaton (read_file (args.spec_automaton)));
    if (!(a->ab == p.ab))
      throw parse_error ("propositions of the automaton differ from those of the problem");
  } else
    a = problem_automaton (p);
  auto examples = problem_examples (p);

  synth_options opts;
  opts.merge = merge_by_name (args.strategy_merge, args.seed);
  opts.complete = complete_by_name (args.strategy_complete, args.seed);
  opts.max_k = args.max_k >= 0 ? args.max_k : p.max_k.value_or (10);
  opts.complete_bound = args.complete_bound;
  std::string antichains;
  if (!args.dump_antichain.empty ())
    opts.on_context = [&] (const safety_context& ctx) {
      antichains += "k=" + std::to_string (ctx.k) + " elements=" + std::to_string (ctx.winning.size ()) + "\n";
      for (const auto& f : ctx.winning.sorted ())
        antichains += cf_dump (f, ctx.k) + "\n";
    };

  auto r = synth_learn (examples, a, opts);

  if (!args.dump_antichain.empty ())
    write_file (args.dump_antichain, antichains);
  if (!args.gen_trace.empty () && r.generalization)
    write_file (args.gen_trace, format_gen_trace (p.ab, *r.generalization));
  if (!args.stats.empty ()) {
    std::string lines;
    for (const auto& at : r.attempts)
      lines += attempt_json (at).dump () + "\n";
    nlohmann::json summary = {{"event", "result"},
                              {"outcome", to_string (r.result)},
                              {"k", r.k},
                              {"examples", examples.size ()},
                              {"spec_states", a->num_states},
                              {"seconds", r.seconds}};
    if (r.machine)
      summary["states"] = r.machine->num_states ();
    lines += summary.dump () + "\n";
    write_file (args.stats, lines);
  }

  switch (r.result) {
    case outcome::machine: {
      const auto& m = r.machine->machine ();
      if (!args.out.empty ())
        write_file (args.out, serialize_machine (m));
      if (!args.dot.empty ())
        write_file (args.dot, to_dot (m));
      else
        std::cout << to_dot (m);
      std::cerr << "machine with " << m.num_states () << " states found at k=" << r.k << "\n";
      return 0;
    }
    case outcome::unreal:
      std::cerr << "UNREAL\n";
      return 1;
    default:
      std::cerr << "UNKNOWN: no machine up to k=" << r.k << "\n";
      return 2;
  }
}

struct check_args {
    std::string machine_file;
    std::string problem_file;
    std::string formula;
    std::string spec_automaton;
};

int run_check (const check_args& args) {
  auto m = mealy (parse_machine (read_file (args.machine_file)));
  const alphabet& ab = m.ab ();
  int given = !args.problem_file.empty () + !args.formula.empty () + !args.spec_automaton.empty ();
  if (given != 1)
    throw std::invalid_argument ("give exactly one of --problem, --formula, --spec-automaton");
  std::shared_ptr<const ucw> a;
  if (!args.problem_file.empty ()) {
    auto p = load_problem (args.problem_file);
    if (!(p.ab == ab))
      throw parse_error ("propositions of the machine differ from those of the problem");
    a = problem_automaton (p);
  } else if (!args.formula.empty ())
    a = std::make_shared<const ucw> (ucw_of_formula (parse_formula (args.formula, ab), ab));
  else {
    a = std::make_shared<const ucw> (parse_automaton (read_file (args.spec_automaton)));
    if (!(a->ab == ab))
      throw parse_error ("propositions of the machine differ from those of the automaton");
  }
  if (machine_realizes (m, *a)) {
    std::cout << "yes\n";
    return 0;
  }
  std::cout << "no\n";
  if (auto cex = product_counterexample (m, nba_of_ucw (*a))) {
    std::cout << "prefix: " << format_trace (ab, cex->prefix) << "\n";
    std::cout << "loop: " << format_trace (ab, cex->loop) << "\n";
  }
  return 1;
}

int run_sample (const std::string& machine_file, const std::string& out, bool separating) {
  auto m = mealy (parse_machine (read_file (machine_file)));
  std::string text;
  for (const auto& w : characteristic_sample (m, separating ? sample_kind::separating : sample_kind::minimal))
    text += format_trace (m.ab (), w) + "\n";
  if (out.empty ())
    std::cout << text;
  else
    write_file (out, text);
  return 0;
}

}  // namespace

int main (int argc, char** argv) {
  CLI::App app {"Synthesis of Mealy machines from temporal specifications and example traces"};
  app.require_subcommand (1);

  synth_args sa;
  auto* synth = app.add_subcommand ("synth", "synthesize a machine for a problem file");
  synth->add_option ("problem", sa.problem_file, "problem file")->required ()->check (CLI::ExistingFile);
  synth->add_option ("--max-k", sa.max_k, "largest bound tried (default 10 or the problem's max_k)");
  synth->add_flag ("--complete-bound", sa.complete_bound, "run up to the theoretical bound and report UNREAL past it");
  synth->add_option ("--strategy-merge", sa.strategy_merge, "merging strategy")
      ->check (CLI::IsMember ({"min-cf", "first", "random"}));
  synth->add_option ("--strategy-complete", sa.strategy_complete, "completion strategy")
      ->check (CLI::IsMember ({"lazy-min-cf", "lazy-first", "lazy-random"}));
  synth->add_option ("--dot", sa.dot, "write the machine as DOT to this file instead of stdout");
  synth->add_option ("--out", sa.out, "write the machine in text format to this file");
  synth->add_option ("--dump-antichain", sa.dump_antichain, "write the maximal winning counting functions");
  synth->add_option ("--stats", sa.stats, "write JSON-lines statistics");
  synth->add_option ("--gen-trace", sa.gen_trace, "write the merge decisions of the generalization phase");
  synth->add_option ("--spec-automaton", sa.spec_automaton, "use this automaton as the specification")
      ->check (CLI::ExistingFile);
  synth->add_option ("--seed", sa.seed, "seed of the random strategies");

  check_args ca;
  auto* check = app.add_subcommand ("check", "check that a machine realizes a specification");
  check->add_option ("machine", ca.machine_file, "machine file")->required ()->check (CLI::ExistingFile);
  check->add_option ("--problem", ca.problem_file, "problem file giving the specification")->check (CLI::ExistingFile);
  check->add_option ("--formula", ca.formula, "LTL specification");
  check->add_option ("--spec-automaton", ca.spec_automaton, "automaton specification")->check (CLI::ExistingFile);

  std::string sample_machine, sample_out;
  bool sample_separating = false;
  auto* sample = app.add_subcommand ("sample", "emit a characteristic sample of a minimal machine");
  sample->add_option ("machine", sample_machine, "machine file")->required ()->check (CLI::ExistingFile);
  sample->add_option ("-o,--out", sample_out, "trace file to write (default stdout)");
  sample->add_flag ("--separating", sample_separating,
                    "also separate the target of every transition from every other state");

  try {
    app.parse (argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit (e);
    return code == 0 ? 0 : exit_error;
  }

  try {
    if (*synth)
      return run_synth (sa);
    if (*check)
      return run_check (ca);
    return run_sample (sample_machine, sample_out, sample_separating);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what () << "\n";
    return exit_error;
  }
}
