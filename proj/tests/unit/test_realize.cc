#include <doctest.h>

#include "fixtures.hh"
#include "oracles.hh"
#include "synthlearn/games.hh"
#include "synthlearn/problem.hh"
#include "synthlearn/realize.hh"

using namespace synthlearn;

namespace {

std::shared_ptr<const ucw> spec (const char* text, const alphabet& ab) {
  return std::make_shared<const ucw> (ucw_of_formula (parse_formula (text, ab), ab));
}

void add (pre_mealy& m, int s, const char* in, const char* out, int t) {
  const auto& ab = m.ab ();
  m.set (s, ab.parse_valuation (side::input, in), {ab.parse_valuation (side::output, out), t});
}

/// The configuration of the rejected merge with its clashing edge removed.
pre_mealy rejected_merge () {
  pre_mealy m (fixtures::mutex_alphabet (), 3);
  add (m, 0, "{!r1,!r2}", "{!g1,!g2}", 0);
  add (m, 0, "{r1,r2}", "{g1,!g2}", 0);
  add (m, 0, "{r1,!r2}", "{g1,!g2}", 1);
  add (m, 1, "{!r1,r2}", "{!g1,g2}", 2);
  return m;
}

mealy always_g1 () {
  auto ab = fixtures::mutex_alphabet ();
  pre_mealy m (ab, 1);
  for (valuation i = 0; i < ab.input_count (); ++i)
    m.set (0, i, {ab.parse_valuation (side::output, "{g1}"), 0});
  return mealy (m);
}

std::size_t round_bound (const pre_mealy& m, const ucw& a, int k) {
  return static_cast<std::size_t> (m.num_states ()) * static_cast<std::size_t> (a.num_states) *
         static_cast<std::size_t> (k + 1);
}

}  // namespace

TEST_SUITE ("realize") {
  TEST_CASE ("labels of small machines") {
    alphabet ab ({"x"}, {"y"});
    oracle::rng g (61);
    auto a = oracle::random_ucw (g, ab, 3);
    pre_mealy single (ab, 1);
    auto r = fstar_labels (single, a, 2);
    REQUIRE (r.labels.size () == 1);
    CHECK (r.labels[0] == cf_initial (a, 2));

    pre_mealy chain (ab, 4);
    std::vector<unsigned> word;
    for (int s = 0; s < 3; ++s) {
      letter l {static_cast<valuation> (s % 2), static_cast<valuation> ((s + 1) % 2)};
      chain.set (s, l.in, {l.out, s + 1});
      word.push_back (ab.index (l));
    }
    auto labels = fstar_labels (chain, a, 2).labels;
    auto f = cf_initial (a, 2);
    for (std::size_t j = 0; j < word.size (); ++j) {
      f = cf_step (a, 2, f, word[j]);
      CHECK (labels[j + 1] == f);
    }
  }

  TEST_CASE ("labels equal the join over reachable configurations") {
    oracle::rng g (62);
    std::size_t worst = 0;
    for (int n = 0; n < 200; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto a = oracle::random_ucw (g, ab, 4);
      int k = oracle::uniform (g, 0, 2);
      auto m = oracle::random_pre_mealy (g, ab, oracle::uniform (g, 1, 4), 0.3);
      auto r = fstar_labels (m, a, k);
      CHECK (r.labels == oracle::reachable_join (m, a, k));
      auto jac = oracle::jacobi_fixpoint (m, a, k);
      CHECK (jac.labels == r.labels);
      CHECK (jac.stable_at <= round_bound (m, a, k));
      worst = std::max (worst, jac.stable_at);
      auto reach = reach_sets (m, a);
      for (int s = 0; s < m.num_states (); ++s)
        for (int q = 0; q < a.num_states; ++q)
          CHECK ((r.labels[s][q] >= 0) == reach[s][q]);
    }
    MESSAGE ("largest stabilization round: " << worst);
  }

  TEST_CASE ("incremental update reaches the same fixpoint") {
    oracle::rng g (63);
    for (int n = 0; n < 100; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto a = oracle::random_ucw (g, ab, 4);
      int k = oracle::uniform (g, 0, 2);
      auto m = oracle::random_pre_mealy (g, ab, oracle::uniform (g, 1, 4), 0.2);
      auto sub = m;
      std::vector<int> changed;
      for (int s = 0; s < m.num_states (); ++s)
        for (valuation i = 0; i < ab.input_count (); ++i)
          if (sub.at (s, i) && oracle::coin (g, 0.3)) {
            sub.erase (s, i);
            changed.push_back (s);
          }
      auto labels = fstar_labels (sub, a, k).labels;
      auto full = fstar_labels (m, a, k).labels;
      for (int s = 0; s < m.num_states (); ++s)
        CHECK (cf_leq (labels[s], full[s]));
      CHECK (fstar_update (m, a, k, labels, changed));
      CHECK (labels == full);
    }
  }

  TEST_CASE ("realizability of partial machines") {
    auto ab = fixtures::mutex_alphabet ();
    auto core = spec (fixtures::mutex_core, ab);
    auto ctx = make_safety_context (core, 1);
    auto e = parse_traces (read_file (fixtures::cases ("mutex.traces")), ab);
    CHECK (p_realizable (pta_build (e, ab).machine, ctx));
    CHECK_FALSE (p_realizable (rejected_merge (), ctx));
    CHECK_FALSE (p_realizable (always_g1 ().machine (), ctx));

    pre_mealy empty (ab, 1);
    CHECK (p_realizable (empty, ctx));
    CHECK_FALSE (p_realizable (empty, make_safety_context (core, 0)));
    auto never = spec ("false", ab);
    CHECK_FALSE (p_realizable (empty, make_safety_context (never, 2)));
  }

  TEST_CASE ("realizability is inherited by subgraphs") {
    oracle::rng g (64);
    for (int n = 0; n < 60; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto a = std::make_shared<const ucw> (oracle::random_ucw (g, ab, 3));
      auto ctx = make_safety_context (a, oracle::uniform (g, 0, 2));
      auto m = oracle::random_pre_mealy (g, ab, oracle::uniform (g, 1, 3), 0.2);
      auto sub = m;
      for (int s = 0; s < m.num_states (); ++s)
        for (valuation i = 0; i < ab.input_count (); ++i)
          if (oracle::coin (g, 0.4))
            sub.erase (s, i);
      if (p_realizable (m, ctx))
        CHECK (p_realizable (sub, ctx));
    }
  }

  TEST_CASE ("complete machines against specifications") {
    auto ab = fixtures::mutex_alphabet ();
    auto core = ucw_of_formula (parse_formula (fixtures::mutex_core, ab), ab);
    CHECK (machine_realizes (mealy (parse_machine (read_file (fixtures::data ("mutex_natural.machine")))), core));
    CHECK (machine_realizes (mealy (parse_machine (read_file (fixtures::data ("mutex_round_robin.machine")))), core));
    CHECK_FALSE (machine_realizes (always_g1 (), core));
    CHECK (machine_realizes (always_g1 (), ucw_of_formula (parse_formula ("true", ab), ab)));
  }
}
