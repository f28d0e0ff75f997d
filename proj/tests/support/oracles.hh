#pragma once

// Independent reference implementations and random instance generators used
// by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "synthlearn/automata.hh"
#include "synthlearn/counting.hh"
#include "synthlearn/ltl.hh"
#include "synthlearn/machines.hh"

namespace oracle {

using namespace synthlearn;
using rng = std::mt19937_64;

int uniform (rng& g, int lo, int hi);
bool coin (rng& g, double p = 0.5);

/// Inputs named i0.., outputs o0..; between 1 and the given maximum each.
alphabet random_alphabet (rng& g, int max_inputs, int max_outputs);

/// Complete UCW with states 0..n-1, initial state 0, every (state, letter)
/// with one to two successors.
ucw random_ucw (rng& g, const alphabet& ab, int max_states, double counted_p = 0.35);

/// Complete machine with n states, all reachable from state 0.
mealy random_mealy (rng& g, const alphabet& ab, int n);
/// Machine with some transitions removed.
pre_mealy random_pre_mealy (rng& g, const alphabet& ab, int n, double hole_p);
/// Random complete minimal machine with at most max_states states.
mealy random_minimal_mealy (rng& g, const alphabet& ab, int max_states);

formula_ptr random_formula (rng& g, const alphabet& ab, int size);
std::vector<unsigned> random_letters (rng& g, const alphabet& ab, int length);
lasso_word random_lasso (rng& g, const alphabet& ab, int max_prefix, int max_loop);
/// io word of the given length produced by m on random inputs.
io_word random_member (rng& g, const pre_mealy& m, int length);
/// Prefix-closed random tree of examples over a machine-free alphabet.
example_set random_examples (rng& g, const alphabet& ab, int count, int max_length);

/// For every automaton state q: the largest number of counted states seen on
/// a run over word ending in q (capped at k+1), or -1 when no run ends in q.
/// Computed by enumerating every run explicitly.
std::vector<int> run_counts (const ucw& a, int k, const std::vector<unsigned>& word);

/// Every function {0..n-1} -> {-1..k+1}.
std::vector<counting_function> all_counting_functions (int n, int k);
/// Winning region of the counting-function safety game, by attractor
/// iteration over the fully enumerated state space.
std::set<counting_function> explicit_winning (const ucw& a, int k);

/// prefix.loop^omega is in the universal co-Büchi language of a: no run
/// visits counted states infinitely often (cycle search in the run graph).
bool universal_accepts (const ucw& a, const lasso_word& w);
/// prefix.loop^omega is in the existential Büchi language of b.
bool existential_accepts (const nba& b, const lasso_word& w);

/// Every behaviour of the complete machine m is accepted by a (no reachable
/// product cycle through a counted state).
bool machine_satisfies (const mealy& m, const ucw& a);

/// F* by exploring the reachable (machine state, counting function) pairs
/// and joining per machine state.
std::vector<counting_function> reachable_join (const pre_mealy& m, const ucw& a, int k);

/// Synchronous iteration F_{j+1}(m) = F_j(m) join the successors of all
/// predecessors; returns the fixpoint and the first j with F_{j+1} = F_j.
struct jacobi_result {
    std::vector<counting_function> labels;
    std::size_t stable_at = 0;
};
jacobi_result jacobi_fixpoint (const pre_mealy& m, const ucw& a, int k);

/// Pairs of reachable states of a complete machine that no input word
/// distinguishes.
bool has_equivalent_states (const mealy& m);

/// Safety UCW whose language contains every behaviour of t: states are the
/// machine states, a non-counted sink "top" and a counted sink "bad".  An
/// output different from the machine's goes to top or bad at random; the
/// machine's own output follows the machine.  Realizable with k = 0.
ucw behaviour_spec (rng& g, const mealy& t, double relax_p = 0.5);

}  // namespace oracle
