#include "synthlearn/realize.hh"

#include <stdexcept>

namespace synthlearn {

bool fstar_update (const pre_mealy& m, const ucw& a, int k, std::vector<counting_function>& labels,
                   std::vector<int> changed, const safety_context* stop_unless_winning) {
  const int n = m.num_states ();
  while (static_cast<int> (labels.size ()) < n)
    labels.emplace_back (a.num_states);
  const std::size_t bound = static_cast<std::size_t> (n) * a.num_states * (k + 2);
  std::vector<char> marked (n, 0);
  std::size_t rounds = 0;
  while (!changed.empty ()) {
    if (++rounds > bound + 1)
      throw std::logic_error ("F* iteration exceeded its round bound");
    std::vector<int> next;
    for (int s : changed) {
      for (valuation i = 0; i < m.ab ().input_count (); ++i) {
        const auto& t = m.at (s, i);
        if (!t)
          continue;
        auto g = cf_step (a, k, labels[s], letter {i, t->out});
        if (cf_leq (g, labels[t->target]))
          continue;
        labels[t->target] = cf_join (labels[t->target], g);
        if (stop_unless_winning && !stop_unless_winning->is_winning (labels[t->target]))
          return false;
        if (!marked[t->target]) {
          marked[t->target] = 1;
          next.push_back (t->target);
        }
      }
    }
    for (int s : next)
      marked[s] = 0;
    changed = std::move (next);
  }
  return true;
}

fstar_result fstar_labels (const pre_mealy& m, const ucw& a, int k) {
  fstar_result r;
  const int n = m.num_states ();
  r.labels.assign (n, counting_function (a.num_states));
  if (n == 0)
    return r;
  r.labels[m.initial ()] = cf_initial (a, k);
  const std::size_t bound = static_cast<std::size_t> (n) * a.num_states * (k + 2);
  std::vector<int> changed {m.initial ()};
  std::vector<char> marked (n, 0);
  while (!changed.empty ()) {
    ++r.rounds;
    if (r.rounds > bound + 1)
      throw std::logic_error ("F* iteration exceeded its round bound");
    std::vector<int> next;
    for (int s : changed)
      for (valuation i = 0; i < m.ab ().input_count (); ++i) {
        const auto& t = m.at (s, i);
        if (!t)
          continue;
        auto g = cf_step (a, k, r.labels[s], letter {i, t->out});
        if (cf_leq (g, r.labels[t->target]))
          continue;
        r.labels[t->target] = cf_join (r.labels[t->target], g);
        if (!marked[t->target]) {
          marked[t->target] = 1;
          next.push_back (t->target);
        }
      }
    for (int s : next)
      marked[s] = 0;
    changed = std::move (next);
  }
  return r;
}

bool p_realizable (const pre_mealy& m, const safety_context& ctx) {
  if (m.num_states () == 0)
    return ctx.realizable ();
  for (const auto& f : fstar_labels (m, ctx).labels)
    if (!ctx.is_winning (f))
      return false;
  return true;
}

bool machine_realizes (const mealy& m, const ucw& a) {
  int k = m.num_states () * a.num_states;
  for (const auto& f : fstar_labels (m.machine (), a, k).labels)
    if (cf_is_unsafe (f, k))
      return false;
  return true;
}

}  // namespace synthlearn
