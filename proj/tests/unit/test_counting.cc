#include <doctest.h>

#include "oracles.hh"
#include "synthlearn/counting.hh"

using namespace synthlearn;

namespace {

using cf = counting_function;

cf make (std::vector<counting_function::value_type> v) {
  return cf (std::move (v));
}

/// Same successors on every letter.
ucw uniform_ucw (const alphabet& ab, std::vector<std::vector<int>> succ, std::vector<bool> counted,
                 std::vector<int> initial = {0}) {
  ucw a;
  a.ab = ab;
  a.num_states = static_cast<int> (succ.size ());
  a.initial = std::move (initial);
  a.counted = std::move (counted);
  for (int q = 0; q < a.num_states; ++q)
    for (unsigned l = 0; l < ab.letter_count (); ++l)
      a.successors.push_back (succ[q]);
  return a;
}

cf random_cf (oracle::rng& g, int n, int k) {
  cf f (static_cast<std::size_t> (n));
  for (int q = 0; q < n; ++q)
    f[q] = static_cast<counting_function::value_type> (oracle::uniform (g, -1, k + 1));
  return f;
}

}  // namespace

TEST_SUITE ("counting") {
  TEST_CASE ("initial functions") {
    alphabet ab ({"x"}, {"y"});
    CHECK (cf_initial (uniform_ucw (ab, {{0}, {1}}, {false, true}), 2) == make ({0, -1}));
    CHECK (cf_initial (uniform_ucw (ab, {{0}}, {true}), 2) == make ({1}));
    CHECK (cf_initial (uniform_ucw (ab, {{0}, {1}}, {false, true}, {0, 1}), 2) == make ({0, 1}));
    CHECK (cf_initial (uniform_ucw (ab, {{0}}, {true}), 0) == make ({1}));
  }

  TEST_CASE ("successor functions") {
    alphabet ab ({"x"}, {"y"});
    auto a = uniform_ucw (ab, {{0, 1}, {1}}, {false, true});
    CHECK (cf_step (a, 1, make ({0, -1}), 0u) == make ({0, 1}));
    auto u = cf_step (a, 1, make ({0, 1}), 0u);
    CHECK (u == make ({0, 2}));
    CHECK (cf_is_unsafe (u, 1));
    CHECK (cf_step (a, 1, make ({-1, -1}), 0u) == make ({-1, -1}));
    CHECK (cf_step (a, 1, make ({0, 2}), 0u) == make ({0, 2}));
  }

  TEST_CASE ("lattice operations") {
    CHECK (cf_join (make ({0, 1}), make ({1, 0})) == make ({1, 1}));
    CHECK (cf_meet (make ({0, 1}), make ({1, 0})) == make ({0, 0}));
    CHECK (cf_leq (make ({-1, 0}), make ({0, 0})));
    CHECK_FALSE (cf_leq (make ({0, 1}), make ({1, 0})));
    CHECK (cf_dump (make ({0, -1}), 2) == "q0:0 q1:-1 | k=2");
  }

  TEST_CASE ("antichains keep maximal elements") {
    cf_antichain ac;
    CHECK (ac.insert (make ({0, 0})));
    CHECK (ac.insert (make ({1, 1})));
    CHECK (ac.size () == 1);
    CHECK_FALSE (ac.insert (make ({0, 1})));
    CHECK (ac.member_below (make ({0, 1})));
    CHECK_FALSE (ac.member_below (make ({2, 0})));

    cf_antichain two;
    two.insert (make ({0, 1}));
    two.insert (make ({1, 0}));
    CHECK (two.size () == 2);
    auto three = antichain_insert (two, make ({1, 1}));
    CHECK (three.size () == 1);
    CHECK (two.size () == 2);

    oracle::rng g (31);
    for (int n = 0; n < 50; ++n) {
      cf_antichain r;
      std::vector<cf> all;
      for (int j = 0; j < 8; ++j) {
        all.push_back (random_cf (g, 3, 2));
        r.insert (all.back ());
      }
      for (const auto& x : r.elements ())
        for (const auto& y : r.elements ())
          if (&x != &y)
            CHECK_FALSE (cf_leq (x, y));
      for (const auto& f : oracle::all_counting_functions (3, 2)) {
        bool below = false;
        for (const auto& x : all)
          below = below || cf_leq (f, x);
        CHECK (r.member_below (f) == below);
      }
    }
  }

  TEST_CASE ("largest predecessor is exact") {
    oracle::rng g (32);
    for (int n = 0; n < 60; ++n) {
      auto ab = oracle::random_alphabet (g, 1, 1);
      auto a = oracle::random_ucw (g, ab, 3);
      int k = oracle::uniform (g, 0, 2);
      auto f = random_cf (g, a.num_states, k - 1);
      for (unsigned l = 0; l < ab.letter_count (); ++l) {
        auto pre = cf_pre_max (a, k, f, l);
        CHECK (cf_leq (cf_step (a, k, pre, l), f));
        for (const auto& h : oracle::all_counting_functions (a.num_states, k))
          if (cf_leq (cf_step (a, k, h, l), f))
            CHECK (cf_leq (h, pre));
      }
    }
  }

  TEST_CASE ("inactive successors force inactive predecessors") {
    alphabet ab ({"x"}, {"y"});
    auto a = uniform_ucw (ab, {{1}, {1}}, {false, false});
    CHECK (cf_pre_max (a, 2, make ({2, -1}), 0u) == make ({-1, -1}));
    auto det = uniform_ucw (ab, {{1}, {0}}, {false, true});
    CHECK (cf_pre_max (det, 2, make ({2, 2}), 0u) == make ({1, 2}));
  }

  TEST_CASE ("iterated steps equal run enumeration") {
    oracle::rng g (33);
    for (int n = 0; n < 100; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto a = oracle::random_ucw (g, ab, 4);
      int k = oracle::uniform (g, 0, 2);
      auto w = oracle::random_letters (g, ab, oracle::uniform (g, 0, 6));
      auto f = cf_initial (a, k);
      for (unsigned l : w)
        f = cf_step (a, k, f, l);
      auto expect = oracle::run_counts (a, k, w);
      for (int q = 0; q < a.num_states; ++q)
        CHECK (f[q] == expect[q]);
    }
  }

  TEST_CASE ("steps are monotone and preserve joins") {
    oracle::rng g (34);
    for (int n = 0; n < 200; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto a = oracle::random_ucw (g, ab, 4);
      int k = oracle::uniform (g, 0, 3);
      auto f = random_cf (g, a.num_states, k), h = random_cf (g, a.num_states, k);
      auto l = static_cast<unsigned> (oracle::uniform (g, 0, static_cast<int> (ab.letter_count ()) - 1));
      auto lo = cf_meet (f, h);
      CHECK (cf_leq (cf_step (a, k, lo, l), cf_step (a, k, f, l)));
      CHECK (cf_step (a, k, cf_join (f, h), l) == cf_join (cf_step (a, k, f, l), cf_step (a, k, h, l)));
    }
  }
}
