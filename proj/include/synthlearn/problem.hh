#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synthlearn/automata.hh"
#include "synthlearn/ltl.hh"
#include "synthlearn/machines.hh"

namespace synthlearn {

/// One trace per non-empty line; lines starting with "//" or ";" are
/// comments.  trace := step ("#" step)*, step := "{" lits "}" "."? "{" lits "}",
/// lits separated by "," or "&", each "p", "!p" or "true".  Propositions a
/// step leaves unmentioned take every value: one line yields the cartesian
/// product of the completions of its steps.
example_set parse_traces (std::string_view text, const alphabet& ab);

/// Key-value problem description.  Keys: inputs, outputs, formula
/// (repeatable, conjoined), assume (repeatable, conjoined, the guarantee
/// must hold when all assumptions do), automaton, traces (repeatable file
/// paths), trace (repeatable inline trace), max_k.  Paths are relative to
/// the problem file.
struct problem {
    alphabet ab;
    std::vector<std::string> formulas;
    std::vector<std::string> assumptions;
    std::optional<std::filesystem::path> automaton;
    std::vector<std::filesystem::path> trace_files;
    std::vector<std::string> inline_traces;
    std::optional<int> max_k;
};

problem parse_problem (std::string_view text, const std::filesystem::path& base_dir);
problem load_problem (const std::filesystem::path& file);

/// assumptions -> conjunction of formulas; nullopt when the problem uses an
/// automaton.  "true" when neither is given.
std::optional<formula_ptr> problem_formula (const problem& p);
std::shared_ptr<const ucw> problem_automaton (const problem& p, const translation_options& opts = {});
example_set problem_examples (const problem& p);

std::string read_file (const std::filesystem::path& file);

}  // namespace synthlearn
