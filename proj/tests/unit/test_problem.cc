#include <doctest.h>

#include <set>

#include "fixtures.hh"
#include "synthlearn/problem.hh"

using namespace synthlearn;

namespace {

const alphabet ebike ({"brk", "spd", "ful"}, {"as", "re", "ri"});

std::size_t error_column (const char* text, const alphabet& ab) {
  try {
    parse_traces (text, ab);
  } catch (const parse_error& e) {
    return e.column ();
  }
  return 0;
}

}  // namespace

TEST_SUITE ("cli") {
  TEST_CASE ("partial steps expand to every completion") {
    auto first = parse_traces ("{!brk,spd}{!as,!re,!ri} # {brk,!ful}{!as,re,!ri} # {brk,!ful}{!as,re,!ri}", ebike);
    CHECK (first.size () == 8);
    CHECK (std::set<io_word> (first.begin (), first.end ()).size () == 8);
    for (const auto& w : first) {
      REQUIRE (w.size () == 3);
      CHECK (ebike.holds (*ebike.find ("spd"), w[0]));
      CHECK (ebike.holds (*ebike.find ("re"), w[1]));
    }
    CHECK (parse_traces ("{brk,ful}{!as,!re,ri}", ebike).size () == 2);
    CHECK (parse_traces ("{brk,spd,ful} . {as,!re,!ri}", ebike).size () == 1);
    CHECK (parse_traces ("{brk & spd & ful}{as & !re & !ri}", ebike).size () == 1);
    CHECK (parse_traces ("{true}{as,re,ri}", ebike).size () == 8);

    auto p = load_problem (fixtures::cases ("ebike.problem"));
    CHECK (problem_examples (p).size () == 10);
  }

  TEST_CASE ("comments and blank lines") {
    auto e = parse_traces ("// header\n\n; note\n{brk,spd,ful}{as,re,ri}\n", ebike);
    CHECK (e.size () == 1);
  }

  TEST_CASE ("trace errors carry positions") {
    CHECK_THROWS_AS (parse_traces ("{brk,spd,ful}{as,zz}", ebike), parse_error);
    CHECK_THROWS_AS (parse_traces ("{brk,!brk}{as}", ebike), parse_error);
    CHECK_THROWS_AS (parse_traces ("{brk}{as", ebike), parse_error);
    CHECK_THROWS_AS (parse_traces ("{brk}{as} #", ebike), parse_error);
    CHECK (error_column ("{brk}{as,zz}", ebike) == 10);
    try {
      parse_traces ("{brk}{as}\n{brk}{qq}", ebike);
      FAIL ("no error");
    } catch (const parse_error& e) {
      CHECK (e.line () == 2);
    }
  }

  TEST_CASE ("problem files") {
    auto p = parse_problem ("inputs: r1, r2\noutputs: g1, g2\nformula: G(r1 -> F g1)\nformula: G(!g1 | !g2)\n"
                            "assume: G F !r1\nmax_k: 4\ntrace: {r1,!r2}{g1,!g2}\n",
                            ".");
    CHECK (p.ab.inputs () == std::vector<std::string> {"r1", "r2"});
    CHECK (p.max_k == 4);
    auto f = problem_formula (p);
    REQUIRE (f);
    CHECK (equal (*f, parse_formula ("!(G F !r1) | (G(r1 -> F g1) & G(!g1 | !g2))", p.ab)));
    CHECK (problem_examples (p).size () == 1);

    auto bare = parse_problem ("inputs: a\noutputs: b\n", ".");
    CHECK ((*problem_formula (bare))->kind == op::true_);

    CHECK_THROWS_AS (parse_problem ("inputs: a\noutputs: a\n", "."), std::exception);
    CHECK_THROWS_AS (parse_problem ("inputs: a\noutputs: b\ncolour: red\n", "."), parse_error);

    auto mutex = load_problem (fixtures::cases ("mutex.problem"));
    CHECK (problem_examples (mutex).size () == 2);
    CHECK (problem_automaton (mutex)->num_states > 0);
  }
}
