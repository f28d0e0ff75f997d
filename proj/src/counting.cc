#include "synthlearn/counting.hh"

#include <algorithm>
#include <cassert>
#include <limits>

namespace synthlearn {

counting_function cf_initial (const ucw& a, int k) {
  counting_function f (a.num_states);
  for (int q : a.initial)
    f[q] = static_cast<counting_function::value_type> (std::min (a.counted[q] ? 1 : 0, k + 1));
  return f;
}

counting_function cf_constant (const ucw& a, int value) {
  return counting_function (a.num_states, static_cast<counting_function::value_type> (value));
}

counting_function cf_step (const ucw& a, int k, const counting_function& f, unsigned letter_index) {
  assert (f.size () == static_cast<std::size_t> (a.num_states));
  counting_function g (f.size ());
  for (int q = 0; q < a.num_states; ++q) {
    if (f[q] < 0)
      continue;
    for (int d : a.succ (q, letter_index))
      g[d] = std::max (g[d], f[q]);
  }
  for (int q = 0; q < a.num_states; ++q)
    if (g[q] >= 0)
      g[q] = static_cast<counting_function::value_type> (std::min (g[q] + (a.counted[q] ? 1 : 0), k + 1));
  return g;
}

bool cf_leq (const counting_function& f, const counting_function& g) {
  assert (f.size () == g.size ());
  for (std::size_t q = 0; q < f.size (); ++q)
    if (f[q] > g[q])
      return false;
  return true;
}

counting_function cf_join (const counting_function& f, const counting_function& g) {
  counting_function r = f;
  for (std::size_t q = 0; q < f.size (); ++q)
    r[q] = std::max (f[q], g[q]);
  return r;
}

counting_function cf_meet (const counting_function& f, const counting_function& g) {
  counting_function r = f;
  for (std::size_t q = 0; q < f.size (); ++q)
    r[q] = std::min (f[q], g[q]);
  return r;
}

bool cf_is_unsafe (const counting_function& f, int k) {
  return std::any_of (f.values ().begin (), f.values ().end (), [k] (auto v) { return v == k + 1; });
}

counting_function cf_pre_max (const ucw& a, int k, const counting_function& f, unsigned letter_index) {
  assert (!cf_is_unsafe (f, k));
  counting_function g (f.size ());
  for (int q = 0; q < a.num_states; ++q) {
    int best = k;
    for (int d : a.succ (q, letter_index))
      best = std::min (best, f[d] - (a.counted[d] ? 1 : 0));
    g[q] = static_cast<counting_function::value_type> (best < 0 ? -1 : best);
  }
  return g;
}

std::string cf_dump (const counting_function& f, int k) {
  std::string out;
  for (std::size_t q = 0; q < f.size (); ++q)
    out += "q" + std::to_string (q) + ":" + std::to_string (f[q]) + " ";
  return out + "| k=" + std::to_string (k);
}

bool cf_antichain::insert (const counting_function& f) {
  for (const auto& g : elems_)
    if (cf_leq (f, g))
      return false;
  std::erase_if (elems_, [&] (const counting_function& g) { return cf_leq (g, f); });
  elems_.push_back (f);
  return true;
}

bool cf_antichain::member_below (const counting_function& f) const {
  return std::any_of (elems_.begin (), elems_.end (), [&] (const counting_function& g) { return cf_leq (f, g); });
}

std::vector<counting_function> cf_antichain::sorted () const {
  auto s = elems_;
  std::sort (s.begin (), s.end ());
  return s;
}

cf_antichain antichain_insert (cf_antichain ac, const counting_function& f) {
  ac.insert (f);
  return ac;
}

}  // namespace synthlearn
