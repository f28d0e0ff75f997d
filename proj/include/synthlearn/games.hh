#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "synthlearn/counting.hh"

namespace synthlearn {

/// Safety game on the counting-function determinization of a UCW for one
/// bound k, solved once and shared by all realizability queries.
struct safety_context {
    std::shared_ptr<const ucw> automaton;
    int k = 0;
    /// Maximal winning counting functions.
    cf_antichain winning;
    /// Number of greatest-fixpoint iterations used to compute winning.
    int iterations = 0;

    const ucw& a () const { return *automaton; }
    bool is_winning (const counting_function& f) const { return winning.member_below (f); }
    /// The k-bounded language is realizable.
    bool realizable () const { return is_winning (cf_initial (a (), k)); }
};

/// Maximal g such that every input admits an output whose successor of g
/// is below some element of ac.
cf_antichain cpre_antichain (const ucw& a, int k, const cf_antichain& ac);

/// Greatest fixpoint of cpre_antichain from the constant-k function.
cf_antichain winning_antichain (const ucw& a, int k, int* iterations = nullptr);

safety_context make_safety_context (std::shared_ptr<const ucw> a, int k);

/// Outputs o for input i whose successor of f stays winning, with that successor.
std::vector<std::pair<valuation, counting_function>> allowed_moves (const safety_context& ctx,
                                                                   const counting_function& f, valuation in);

}  // namespace synthlearn
