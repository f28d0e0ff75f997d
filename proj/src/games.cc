#include "synthlearn/games.hh"

#include <cassert>
#include <stdexcept>

namespace synthlearn {

namespace {

cf_antichain pairwise_meets (const cf_antichain& x, const cf_antichain& y) {
  cf_antichain r;
  for (const auto& f : x.elements ())
    for (const auto& g : y.elements ())
      r.insert (cf_meet (f, g));
  return r;
}

}  // namespace

cf_antichain cpre_antichain (const ucw& a, int k, const cf_antichain& ac) {
  const alphabet& ab = a.ab;
  cf_antichain acc;
  for (valuation i = 0; i < ab.input_count (); ++i) {
    cf_antichain big;
    for (valuation o = 0; o < ab.output_count (); ++o) {
      unsigned l = ab.index ({i, o});
      for (const auto& f : ac.elements ())
        big.insert (cf_pre_max (a, k, f, l));
    }
    acc = i == 0 ? std::move (big) : pairwise_meets (acc, big);
    if (acc.empty ())
      break;
  }
  return acc;
}

cf_antichain winning_antichain (const ucw& a, int k, int* iterations) {
  if (k < 0)
    throw std::invalid_argument ("k must be non-negative");
  cf_antichain w;
  w.insert (cf_constant (a, k));
  int n = 0;
  for (;;) {
    ++n;
    auto next = pairwise_meets (w, cpre_antichain (a, k, w));
    if (next == w)
      break;
    w = std::move (next);
  }
  if (iterations)
    *iterations = n;
  return w;
}

safety_context make_safety_context (std::shared_ptr<const ucw> a, int k) {
  safety_context ctx;
  ctx.k = k;
  ctx.winning = winning_antichain (*a, k, &ctx.iterations);
  ctx.automaton = std::move (a);
  return ctx;
}

std::vector<std::pair<valuation, counting_function>> allowed_moves (const safety_context& ctx,
                                                                   const counting_function& f, valuation in) {
  std::vector<std::pair<valuation, counting_function>> out;
  for (valuation o = 0; o < ctx.a ().ab.output_count (); ++o) {
    auto g = cf_step (ctx.a (), ctx.k, f, letter {in, o});
    if (ctx.is_winning (g))
      out.emplace_back (o, std::move (g));
  }
  if (out.empty () && ctx.is_winning (f))
    throw std::logic_error ("winning counting function without a winning move");
  return out;
}

}  // namespace synthlearn
