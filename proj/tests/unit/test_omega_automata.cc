#include <doctest.h>

#include "fixtures.hh"
#include "oracles.hh"
#include "synthlearn/automata.hh"
#include "synthlearn/problem.hh"
#include "synthlearn/realize.hh"

using namespace synthlearn;
using fixtures::step;

namespace {

nba random_nba (oracle::rng& g, const alphabet& ab) {
  auto u = oracle::random_ucw (g, ab, 4);
  nba b = nba::empty (ab, u.num_states);
  b.initial = u.initial;
  b.accepting = u.counted;
  b.successors = u.successors;
  for (auto& s : b.successors)
    if (oracle::coin (g, 0.3))
      s.clear ();
  return b;
}

nba nba_of_negation (const char* text, const alphabet& ab) {
  return ltl_to_nba (to_nnf (formula::make_unary (op::not_, parse_formula (text, ab))), ab);
}

}  // namespace

TEST_SUITE ("omega-automata") {
  TEST_CASE ("small translations") {
    alphabet ab ({"r"}, {"p"});
    auto gp = ltl_to_nba (to_nnf (parse_formula ("G p", ab)), ab);
    CHECK (gp.num_states == 1);
    CHECK (gp.accepting[0]);
    for (unsigned l = 0; l < ab.letter_count (); ++l)
      CHECK (gp.succ (0, l).size () == (ab.holds (*ab.find ("p"), ab.letter_at (l)) ? 1u : 0u));

    auto t = ltl_to_nba (to_nnf (parse_formula ("true", ab)), ab);
    CHECK (t.num_states == 1);
    CHECK (t.accepting[0]);
    CHECK (t.is_complete ());

    oracle::rng g (21);
    for (int n = 0; n < 100; ++n) {
      auto w = oracle::random_lasso (g, ab, 3, 3);
      CHECK (oracle::existential_accepts (gp, w) == eval_lasso (*parse_formula ("G p", ab), w, ab));
    }
  }

  TEST_CASE ("F g1 accepts exactly the words granting once") {
    auto ab = fixtures::mutex_alphabet ();
    auto b = ltl_to_nba (to_nnf (parse_formula ("F g1", ab)), ab);
    CHECK (oracle::existential_accepts (b, {{}, {step (ab, "{}", "{g1}")}}));
    CHECK_FALSE (oracle::existential_accepts (b, {{}, {step (ab, "{}", "{}")}}));
  }

  TEST_CASE ("translation agrees with the lasso evaluator") {
    oracle::rng g (22);
    for (int n = 0; n < 200; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto f = oracle::random_formula (g, ab, oracle::uniform (g, 1, 8));
      auto b = ltl_to_nba (to_nnf (f), ab);
      for (int j = 0; j < 5; ++j) {
        auto w = oracle::random_lasso (g, ab, 3, 3);
        CHECK_MESSAGE (oracle::existential_accepts (b, w) == eval_lasso (*f, w, ab), to_string (*f, ab));
      }
    }
  }

  TEST_CASE ("universal automata of formulas") {
    auto ab = fixtures::mutex_alphabet ();
    auto never = ucw_of_formula (parse_formula ("false", ab), ab);
    oracle::rng g (23);
    for (int n = 0; n < 20; ++n)
      CHECK_FALSE (oracle::universal_accepts (never, oracle::random_lasso (g, ab, 3, 3)));

    auto mutex = ucw_of_formula (parse_formula ("G(!g1 | !g2)", ab), ab);
    auto idle = step (ab, "{}", "{}"), clash = step (ab, "{}", "{g1,g2}");
    CHECK (oracle::universal_accepts (mutex, {{}, {idle}}));
    CHECK_FALSE (oracle::universal_accepts (mutex, {{idle, clash}, {idle}}));
    CHECK_FALSE (oracle::universal_accepts (mutex, {{}, {idle, idle, clash}}));

    auto core = ucw_of_formula (parse_formula (fixtures::mutex_core, ab), ab);
    lasso_word natural {{step (ab, "{r1,r2}", "{g1}"), step (ab, "{}", "{g2}")}, {idle}};
    CHECK (oracle::universal_accepts (core, natural));
  }

  TEST_CASE ("universal language is the set of models") {
    oracle::rng g (24);
    for (int n = 0; n < 100; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto f = oracle::random_formula (g, ab, oracle::uniform (g, 1, 8));
      auto a = ucw_of_formula (f, ab);
      a.check_complete ();
      auto w = oracle::random_lasso (g, ab, 3, 3);
      CHECK_MESSAGE (oracle::universal_accepts (a, w) == eval_lasso (*f, w, ab), to_string (*f, ab));
    }
  }

  TEST_CASE ("complete_nba") {
    alphabet ab ({"a"}, {"b"});
    auto bare = nba::empty (ab, 1);
    bare.initial = {0};
    auto c = complete_nba (bare);
    CHECK (c.num_states == 2);
    CHECK (c.is_complete ());
    auto t = ltl_to_nba (to_nnf (parse_formula ("true", ab)), ab);
    CHECK (complete_nba (t).num_states == t.num_states);

    oracle::rng g (25);
    for (int n = 0; n < 20; ++n) {
      auto b = random_nba (g, ab);
      auto cb = complete_nba (b);
      CHECK (cb.is_complete ());
      for (int j = 0; j < 5; ++j) {
        auto w = oracle::random_lasso (g, ab, 3, 3);
        CHECK (oracle::existential_accepts (b, w) == oracle::existential_accepts (cb, w));
      }
    }
  }

  TEST_CASE ("automaton text format") {
    auto ab = fixtures::mutex_alphabet ();
    auto never = ucw_of_formula (parse_formula ("false", ab), ab);
    auto back = parse_automaton (serialize_automaton (never));
    CHECK (back.num_states == never.num_states);
    CHECK (back.successors == never.successors);
    CHECK (back.counted == never.counted);
    CHECK (back.initial == never.initial);

    auto two = parse_automaton (read_file (fixtures::data ("two_state.ucw")));
    CHECK (two.num_states == 2);
    CHECK (two.num_counted () == 1);
    CHECK_THROWS_AS (parse_automaton (read_file (fixtures::data ("incomplete.ucw"))), parse_error);
    CHECK_THROWS_AS (parse_automaton ("inputs: a\noutputs: b\nstates: 1\ninitial: 3\n0 */* -> 0\n"), parse_error);

    oracle::rng g (26);
    for (int n = 0; n < 20; ++n) {
      auto a = oracle::random_ucw (g, oracle::random_alphabet (g, 2, 2), 4);
      auto b = parse_automaton (serialize_automaton (a));
      CHECK (b.successors == a.successors);
      CHECK (b.counted == a.counted);
    }
  }

  TEST_CASE ("product emptiness on the arbiter machines") {
    auto ab = fixtures::mutex_alphabet ();
    auto rr = mealy (parse_machine (read_file (fixtures::data ("mutex_round_robin.machine"))));
    CHECK (product_empty (rr, nba_of_negation (fixtures::mutex_core, ab)));

    pre_mealy always (ab, 1);
    for (valuation i = 0; i < ab.input_count (); ++i)
      always.set (0, i, {ab.parse_valuation (side::output, "{g1}"), 0});
    mealy m (always);
    auto b = nba_of_negation ("G(r2 -> F g2)", ab);
    CHECK_FALSE (product_empty (m, b));
    auto cex = product_counterexample (m, b);
    REQUIRE (cex);
    CHECK_FALSE (eval_lasso (*parse_formula ("G(r2 -> F g2)", ab), *cex, ab));
    for (const auto& l : cex->prefix)
      CHECK (l.out == m.at (0, l.in).out);

    auto none = b;
    none.accepting.assign (none.num_states, false);
    CHECK (product_empty (m, none));
  }

  TEST_CASE ("product emptiness agrees with the counting check and the cycle oracle") {
    oracle::rng g (27);
    for (int n = 0; n < 100; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto f = oracle::random_formula (g, ab, oracle::uniform (g, 1, 6));
      auto m = oracle::random_mealy (g, ab, oracle::uniform (g, 1, 3));
      auto a = ucw_of_formula (f, ab);
      bool empty = product_empty (m, ltl_to_nba (to_nnf (formula::make_unary (op::not_, f)), ab));
      CHECK (empty == machine_realizes (m, a));
      CHECK (empty == oracle::machine_satisfies (m, a));
      if (!empty) {
        auto cex = product_counterexample (m, nba_of_ucw (a));
        REQUIRE (cex);
        CHECK_FALSE (eval_lasso (*f, *cex, ab));
      }
    }
  }
}
