#pragma once

#include <optional>
#include <vector>

#include "synthlearn/games.hh"
#include "synthlearn/machines.hh"

namespace synthlearn {

/// Least fixpoint labelling every machine state with the join of the
/// counting functions reached by the words leading to it.
struct fstar_result {
    std::vector<counting_function> labels;
    /// Rounds of the worklist iteration; a round handles every state whose
    /// label changed in the previous round.
    std::size_t rounds = 0;
};

/// Throws std::logic_error if the round count exceeds |M| * |Q| * (k + 2).
fstar_result fstar_labels (const pre_mealy& m, const ucw& a, int k);
inline fstar_result fstar_labels (const pre_mealy& m, const safety_context& ctx) {
  return fstar_labels (m, ctx.a (), ctx.k);
}

/// Resumes the fixpoint after transitions were added leaving the states in
/// changed.  labels must be the fixpoint for a subgraph of m (states of m
/// missing from labels start inactive).  When stop_unless_winning is given,
/// returns false as soon as a label leaves its winning region; labels are
/// then partial.
bool fstar_update (const pre_mealy& m, const ucw& a, int k, std::vector<counting_function>& labels,
                   std::vector<int> changed, const safety_context* stop_unless_winning = nullptr);

/// The spec can be realized by a completion of m.
bool p_realizable (const pre_mealy& m, const safety_context& ctx);

/// Every behaviour of m is in the universal language of a; uses the bound
/// k = |Q| * |M|.
bool machine_realizes (const mealy& m, const ucw& a);

}  // namespace synthlearn
