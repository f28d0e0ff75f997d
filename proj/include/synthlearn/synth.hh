#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "synthlearn/games.hh"
#include "synthlearn/machines.hh"
#include "synthlearn/realize.hh"

namespace synthlearn {

/// Merge request seen by a merging strategy: the example state of the
/// current quotient, the candidate states it may be merged with (in
/// increasing index order) and the F* labels of the current quotient.
struct merge_query {
    const pre_mealy& machine;
    int state;
    const std::vector<int>& candidates;
    const std::vector<counting_function>& labels;
};

/// Returns an index into query.candidates.
using merge_strategy = std::function<std::size_t (const merge_query&)>;

struct completion_candidate {
    valuation out;
    /// Existing target state, or nullopt for a fresh one.
    std::optional<int> target;
    /// F* label of the target in the current machine; for a fresh target,
    /// the label it would receive.
    counting_function target_label;
    /// cf_step of the hole state's label on (input, out).
    counting_function step_label;
};

/// Hole (state, input) of the current machine and its realizable
/// candidates, existing targets in index order first, then fresh; outputs
/// in valuation order within a target.
struct completion_query {
    const pre_mealy& machine;
    int state;
    valuation input;
    const std::vector<completion_candidate>& candidates;
    const std::vector<counting_function>& labels;
};

using completion_strategy = std::function<std::size_t (const completion_query&)>;

/// Candidate with a minimal F* label; the lowest index among those.
merge_strategy sigma_g_min_cf ();
merge_strategy sigma_g_first ();
merge_strategy sigma_g_random (std::uint64_t seed);

/// Lazy: existing targets whenever possible.  Among them, minimal target
/// label, then minimal step label, then the first in query order.
completion_strategy sigma_c_lazy_min_cf ();
completion_strategy sigma_c_lazy_first ();
completion_strategy sigma_c_lazy_random (std::uint64_t seed);

/// One iteration of the generalization loop.
struct gen_step {
    /// PTA state (index in length-lexicographic order) and its io word.
    int example = 0;
    io_word word;
    /// Already in the class of an earlier example.
    bool already_merged = false;
    /// Candidate classes, each named by its smallest PTA state.
    std::vector<int> not_mergeable;
    std::vector<int> not_realizable;
    std::vector<int> realizable;
    std::optional<int> chosen;
};

struct gen_result {
    /// nullopt means UNREAL.
    std::optional<pre_mealy> machine;
    std::string unreal_reason;
    prefix_tree pta;
    state_partition congruence;
    std::vector<gen_step> trace;
    int merges = 0;
};

gen_result gen (const example_set& e, const safety_context& ctx, const merge_strategy& sigma);

/// Human-readable listing of the generalization decisions.
std::string format_gen_trace (const alphabet& ab, const gen_result& r);

struct comp_stats {
    int iterations = 0;
    int fresh_states = 0;
};

/// nullopt means UNREAL.  Holes are filled in breadth-first order of the
/// current machine, inputs in valuation order.
std::optional<mealy> comp (const pre_mealy& p, const safety_context& ctx, const completion_strategy& sigma,
                           comp_stats* stats = nullptr);

enum class outcome { machine, unreal, unknown };

std::string to_string (outcome o);

struct attempt_stats {
    int k = 0;
    std::size_t antichain_size = 0;
    int game_iterations = 0;
    bool spec_realizable = false;
    int pta_states = 0;
    int gen_merges = 0;
    int gen_states = 0;
    int comp_iterations = 0;
    int fresh_states = 0;
    std::string result;
    double seconds = 0;
};

struct synth_result {
    outcome result = outcome::unknown;
    std::optional<mealy> machine;
    /// The k that succeeded, or the last one tried.
    int k = 0;
    std::optional<gen_result> generalization;
    std::vector<attempt_stats> attempts;
    double seconds = 0;
};

/// Generalization then completion against one safety context.
synth_result synth_safe (const example_set& e, const safety_context& ctx, const merge_strategy& sg,
                         const completion_strategy& sc);

struct synth_options {
    merge_strategy merge = sigma_g_min_cf ();
    completion_strategy complete = sigma_c_lazy_min_cf ();
    int max_k = 10;
    /// Run up to the theoretical bound and answer UNREAL past it.
    bool complete_bound = false;
    /// Called with the solved context of every k tried.
    std::function<void (const safety_context&)> on_context;
};

/// Theoretical bound n * m * |I| * 2^(n log2 n) with constant 1,
/// saturated at INT32_MAX.
std::int64_t completeness_bound (const ucw& a, const example_set& e);

/// Tries k = 0, 1, ... until a machine is found.
synth_result synth_learn (const example_set& e, std::shared_ptr<const ucw> a, const synth_options& opts = {});

/// minimal: one example per transition (access word then input) and one per
/// ordered state pair (access word then minimal distinguishing word).
/// separating: additionally, for every transition and every state other
/// than its target, the transition word followed by the minimal word
/// distinguishing the two states.
enum class sample_kind { minimal, separating };

/// Characteristic sample of a minimal machine; throws std::invalid_argument
/// when t is not minimal.
example_set characteristic_sample (const mealy& t, sample_kind kind = sample_kind::minimal);

}  // namespace synthlearn
