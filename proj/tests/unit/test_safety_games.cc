#include <doctest.h>

#include "fixtures.hh"
#include "oracles.hh"
#include "synthlearn/games.hh"

using namespace synthlearn;

namespace {

std::shared_ptr<const ucw> spec (const char* text, const alphabet& ab) {
  return std::make_shared<const ucw> (ucw_of_formula (parse_formula (text, ab), ab));
}

void check_against_explicit (const ucw& a, int k) {
  auto w = winning_antichain (a, k);
  auto expect = oracle::explicit_winning (a, k);
  for (const auto& f : oracle::all_counting_functions (a.num_states, k))
    CHECK_MESSAGE (w.member_below (f) == (expect.count (f) > 0), cf_dump (f, k));
}

}  // namespace

TEST_SUITE ("safety-games") {
  TEST_CASE ("no counted state: everything wins") {
    alphabet ab ({"a"}, {"b"});
    auto a = spec ("true", ab);
    for (int k = 0; k < 3; ++k) {
      auto w = winning_antichain (*a, k);
      REQUIRE (w.size () == 1);
      CHECK (w.elements ()[0] == cf_constant (*a, k));
      CHECK (make_safety_context (a, k).realizable ());
    }
    auto ctx = make_safety_context (a, 1);
    CHECK (allowed_moves (ctx, cf_initial (*a, 1), 0).size () == ab.output_count ());
  }

  TEST_CASE ("false is never realizable") {
    alphabet ab ({"a"}, {"b"});
    auto a = spec ("false", ab);
    for (int k = 0; k < 3; ++k)
      CHECK_FALSE (make_safety_context (a, k).realizable ());
  }

  TEST_CASE ("one predecessor step matches the explicit condition") {
    oracle::rng g (41);
    for (int n = 0; n < 40; ++n) {
      auto ab = oracle::random_alphabet (g, 1, 2);
      auto a = oracle::random_ucw (g, ab, 3);
      int k = oracle::uniform (g, 0, 2);
      cf_antichain ac;
      for (int j = 0; j < 3; ++j) {
        counting_function f (static_cast<std::size_t> (a.num_states));
        for (int q = 0; q < a.num_states; ++q)
          f[q] = static_cast<counting_function::value_type> (oracle::uniform (g, -1, k));
        ac.insert (f);
      }
      auto pre = cpre_antichain (a, k, ac);
      for (const auto& f : oracle::all_counting_functions (a.num_states, k)) {
        bool all_inputs = true;
        for (valuation i = 0; all_inputs && i < ab.input_count (); ++i) {
          bool some = false;
          for (valuation o = 0; !some && o < ab.output_count (); ++o)
            some = ac.member_below (cf_step (a, k, f, letter {i, o}));
          all_inputs = some;
        }
        CHECK (pre.member_below (f) == all_inputs);
      }
    }
  }

  TEST_CASE ("mutual exclusion game matches the explicit solver") {
    auto ab = fixtures::mutex_alphabet ();
    auto a = spec (fixtures::mutex_core, ab);
    CHECK_FALSE (make_safety_context (a, 0).realizable ());
    CHECK (make_safety_context (a, 1).realizable ());
    check_against_explicit (*a, 0);
    check_against_explicit (*a, 1);
  }

  TEST_CASE ("random games match the explicit solver") {
    oracle::rng g (42);
    for (int n = 0; n < 40; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      check_against_explicit (oracle::random_ucw (g, ab, 3), oracle::uniform (g, 0, 2));
    }
  }

  TEST_CASE ("allowed moves") {
    auto ab = fixtures::mutex_alphabet ();
    auto a = spec ("G !g1", ab);
    auto ctx = make_safety_context (a, 0);
    REQUIRE (ctx.realizable ());
    auto g1 = ab.bit (*ab.find ("g1"));
    for (valuation i = 0; i < ab.input_count (); ++i) {
      auto moves = allowed_moves (ctx, cf_initial (*a, 0), i);
      CHECK (moves.size () == 2);
      for (const auto& [o, f] : moves) {
        CHECK ((o & g1) == 0u);
        CHECK (ctx.is_winning (f));
      }
    }
  }

  TEST_CASE ("winning regions are downward closed and grow with k") {
    oracle::rng g (43);
    for (int n = 0; n < 40; ++n) {
      auto ab = oracle::random_alphabet (g, 2, 2);
      auto a = std::make_shared<const ucw> (oracle::random_ucw (g, ab, 3));
      int k = oracle::uniform (g, 0, 2);
      auto ctx = make_safety_context (a, k);
      auto next = make_safety_context (a, k + 1);
      if (ctx.realizable ())
        CHECK (next.realizable ());
      for (const auto& f : ctx.winning.elements ()) {
        CHECK (next.is_winning (f));
        auto lower = f;
        for (std::size_t q = 0; q < lower.size (); ++q)
          if (lower[q] >= 0 && oracle::coin (g))
            --lower[q];
        CHECK (ctx.is_winning (lower));
      }
    }
  }
}
