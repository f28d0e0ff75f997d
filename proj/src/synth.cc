#include "synthlearn/synth.hh"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace synthlearn {

namespace {

/// Indices whose key is minimal (no other key strictly below).
template <typename Key>
std::vector<std::size_t> minimal_indices (const std::vector<std::size_t>& among, Key key) {
  std::vector<std::size_t> out;
  for (std::size_t a : among) {
    bool dominated = false;
    for (std::size_t b : among)
      if (b != a && cf_leq (key (b), key (a)) && !(key (b) == key (a))) {
        dominated = true;
        break;
      }
    if (!dominated)
      out.push_back (a);
  }
  return out;
}

std::vector<std::size_t> iota_indices (std::size_t n) {
  std::vector<std::size_t> v (n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = i;
  return v;
}

std::vector<std::size_t> lazy_filter (const std::vector<completion_candidate>& cs) {
  std::vector<std::size_t> existing;
  for (std::size_t j = 0; j < cs.size (); ++j)
    if (cs[j].target)
      existing.push_back (j);
  return existing.empty () ? iota_indices (cs.size ()) : existing;
}

double seconds_since (std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double> (std::chrono::steady_clock::now () - t0).count ();
}

}  // namespace

merge_strategy sigma_g_min_cf () {
  return [] (const merge_query& q) {
    auto mins = minimal_indices (iota_indices (q.candidates.size ()),
                                 [&] (std::size_t j) -> const counting_function& { return q.labels[q.candidates[j]]; });
    return mins.front ();
  };
}

merge_strategy sigma_g_first () {
  return [] (const merge_query&) { return std::size_t {0}; };
}

merge_strategy sigma_g_random (std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64> (seed);
  return [rng] (const merge_query& q) {
    return std::uniform_int_distribution<std::size_t> (0, q.candidates.size () - 1) (*rng);
  };
}

completion_strategy sigma_c_lazy_min_cf () {
  return [] (const completion_query& q) {
    const auto& cs = q.candidates;
    auto pool = lazy_filter (cs);
    pool = minimal_indices (pool, [&] (std::size_t j) -> const counting_function& { return cs[j].target_label; });
    pool = minimal_indices (pool, [&] (std::size_t j) -> const counting_function& { return cs[j].step_label; });
    return pool.front ();
  };
}

completion_strategy sigma_c_lazy_first () {
  return [] (const completion_query& q) { return lazy_filter (q.candidates).front (); };
}

completion_strategy sigma_c_lazy_random (std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64> (seed);
  return [rng] (const completion_query& q) {
    auto pool = lazy_filter (q.candidates);
    return pool[std::uniform_int_distribution<std::size_t> (0, pool.size () - 1) (*rng)];
  };
}

gen_result gen (const example_set& e, const safety_context& ctx, const merge_strategy& sigma) {
  gen_result r;
  try {
    r.pta = pta_build (e, ctx.a ().ab);
  } catch (const inconsistent_examples& ex) {
    r.unreal_reason = ex.what ();
    return r;
  }
  const pre_mealy& pta = r.pta.machine;
  const int n = pta.num_states ();
  r.congruence = state_partition (n);
  if (!p_realizable (pta, ctx)) {
    r.unreal_reason = "the specification is not realizable by any completion of the prefix tree";
    return r;
  }
  for (int x = 0; x < n; ++x) {
    gen_step step;
    step.example = x;
    step.word = r.pta.words[x];
    if (r.congruence.find (x) != x) {
      step.already_merged = true;
      r.trace.push_back (std::move (step));
      continue;
    }
    std::vector<state_partition> merged;
    for (int y = 0; y < x; ++y) {
      if (r.congruence.find (y) != y)
        continue;
      if (!mergeable (pta, r.congruence, x, y)) {
        step.not_mergeable.push_back (y);
        continue;
      }
      auto p = merge_class (pta, r.congruence, x, y);
      if (p_realizable (quotient (pta, p), ctx)) {
        step.realizable.push_back (y);
        merged.push_back (std::move (p));
      } else
        step.not_realizable.push_back (y);
    }
    if (!merged.empty ()) {
      auto current = quotient (pta, r.congruence);
      auto labels = fstar_labels (current, ctx).labels;
      auto idx = r.congruence.class_index ();
      std::vector<int> cands;
      for (int y : step.realizable)
        cands.push_back (idx[y]);
      std::size_t pick = sigma (merge_query {current, idx[x], cands, labels});
      if (pick >= cands.size ())
        throw std::logic_error ("merging strategy returned an invalid candidate");
      step.chosen = step.realizable[pick];
      r.congruence = std::move (merged[pick]);
      ++r.merges;
    }
    r.trace.push_back (std::move (step));
  }
  r.machine = quotient (pta, r.congruence);
  return r;
}

std::string format_gen_trace (const alphabet& ab, const gen_result& r) {
  std::ostringstream os;
  auto list = [] (const std::vector<int>& v) {
    if (v.empty ())
      return std::string ("-");
    std::string s;
    for (int x : v)
      s += (s.empty () ? "" : ",") + std::to_string (x);
    return s;
  };
  for (const auto& st : r.trace) {
    os << "example " << st.example << " [";
    for (std::size_t j = 0; j < st.word.size (); ++j)
      os << (j ? " " : "") << ab.format (st.word[j]);
    os << "]: ";
    if (st.already_merged) {
      os << "already merged\n";
      continue;
    }
    os << "not mergeable " << list (st.not_mergeable) << "; not realizable " << list (st.not_realizable)
       << "; realizable " << list (st.realizable) << "; ";
    if (st.chosen)
      os << "merged with " << *st.chosen << '\n';
    else
      os << "kept\n";
  }
  if (r.machine)
    os << "classes:";
  if (r.machine)
    for (const auto& c : r.congruence.classes ()) {
      os << " {";
      for (std::size_t j = 0; j < c.size (); ++j)
        os << (j ? "," : "") << c[j];
      os << "}";
    }
  if (r.machine)
    os << '\n';
  else
    os << "UNREAL: " << r.unreal_reason << '\n';
  return os.str ();
}

std::optional<mealy> comp (const pre_mealy& p, const safety_context& ctx, const completion_strategy& sigma,
                           comp_stats* stats) {
  comp_stats local;
  comp_stats& st = stats ? *stats : local;
  if (!p_realizable (p, ctx))
    return std::nullopt;
  const ucw& a = ctx.a ();
  const int k = ctx.k;
  pre_mealy m = p;
  if (m.num_states () == 0)
    m.add_state ();
  auto labels = fstar_labels (m, ctx).labels;
  const std::size_t holes0 = m.holes ().size ();
  const unsigned I = m.ab ().input_count ();
  // Fresh states are only created when no existing state fits; their count
  // is bounded by the number of counting functions.
  const double cf_count = std::pow (static_cast<double> (k + 3), a.num_states);
  const double fresh_cap = std::min (cf_count, 1e15);
  for (;;) {
    auto holes = m.holes ();
    if (holes.empty ())
      break;
    auto [s, in] = holes.front ();
    ++st.iterations;
    if (static_cast<double> (st.iterations) > static_cast<double> (holes0) + static_cast<double> (I) * st.fresh_states ||
        st.fresh_states > fresh_cap)
      throw std::logic_error ("completion exceeded its iteration bound");
    std::vector<completion_candidate> cands;
    std::vector<std::vector<counting_function>> cand_labels;
    for (int t = 0; t <= m.num_states (); ++t) {
      bool fresh = t == m.num_states ();
      for (valuation o = 0; o < m.ab ().output_count (); ++o) {
        auto g = cf_step (a, k, labels[s], letter {in, o});
        if (!ctx.is_winning (g))
          continue;
        if (fresh) {
          cands.push_back ({o, std::nullopt, g, g});
          cand_labels.emplace_back ();
          continue;
        }
        if (cf_leq (g, labels[t])) {
          cands.push_back ({o, t, labels[t], g});
          cand_labels.push_back (labels);
          continue;
        }
        auto trial = m;
        trial.set (s, in, {o, t});
        auto lab = labels;
        lab[t] = cf_join (lab[t], g);
        if (!ctx.is_winning (lab[t]))
          continue;
        if (!fstar_update (trial, a, k, lab, {t}, &ctx))
          continue;
        cands.push_back ({o, t, labels[t], g});
        cand_labels.push_back (std::move (lab));
      }
    }
    if (cands.empty ())
      throw std::logic_error ("no realizable completion candidate for a realizable machine");
    std::size_t pick = sigma (completion_query {m, s, in, cands, labels});
    if (pick >= cands.size ())
      throw std::logic_error ("completion strategy returned an invalid candidate");
    const auto& c = cands[pick];
    if (c.target) {
      m.set (s, in, {c.out, *c.target});
      labels = std::move (cand_labels[pick]);
    } else {
      int t = m.add_state ();
      m.set (s, in, {c.out, t});
      labels.push_back (c.step_label);
      ++st.fresh_states;
    }
  }
  return mealy (std::move (m));
}

std::string to_string (outcome o) {
  switch (o) {
    case outcome::machine: return "machine";
    case outcome::unreal: return "unreal";
    default: return "unknown";
  }
}

synth_result synth_safe (const example_set& e, const safety_context& ctx, const merge_strategy& sg,
                         const completion_strategy& sc) {
  auto t0 = std::chrono::steady_clock::now ();
  synth_result r;
  r.k = ctx.k;
  attempt_stats at;
  at.k = ctx.k;
  at.antichain_size = ctx.winning.size ();
  at.game_iterations = ctx.iterations;
  at.spec_realizable = ctx.realizable ();
  r.result = outcome::unreal;
  if (at.spec_realizable) {
    auto g = gen (e, ctx, sg);
    at.pta_states = g.pta.machine.num_states ();
    at.gen_merges = g.merges;
    if (g.machine) {
      at.gen_states = g.machine->num_states ();
      comp_stats cs;
      auto m = comp (*g.machine, ctx, sc, &cs);
      at.comp_iterations = cs.iterations;
      at.fresh_states = cs.fresh_states;
      if (m) {
        r.result = outcome::machine;
        r.machine = std::move (m);
      }
    }
    r.generalization = std::move (g);
  }
  at.result = to_string (r.result);
  at.seconds = r.seconds = seconds_since (t0);
  r.attempts.push_back (at);
  return r;
}

std::int64_t completeness_bound (const ucw& a, const example_set& e) {
  const double n = a.num_states;
  double m = 1;
  for (const auto& w : e)
    m += static_cast<double> (w.size ());
  const double exponent = n > 1 ? std::ceil (n * std::log2 (n)) : 0;
  const double k = n * m * a.ab.input_count () * std::pow (2.0, exponent);
  const double cap = std::numeric_limits<std::int32_t>::max ();
  return static_cast<std::int64_t> (std::min (k, cap));
}

synth_result synth_learn (const example_set& e, std::shared_ptr<const ucw> a, const synth_options& opts) {
  auto t0 = std::chrono::steady_clock::now ();
  synth_result out;
  std::int64_t limit = opts.complete_bound ? completeness_bound (*a, e) : opts.max_k;
  for (std::int64_t k = 0; k <= limit; ++k) {
    auto ctx = make_safety_context (a, static_cast<int> (k));
    if (opts.on_context)
      opts.on_context (ctx);
    auto r = synth_safe (e, ctx, opts.merge, opts.complete);
    out.attempts.push_back (r.attempts.front ());
    out.k = static_cast<int> (k);
    if (r.result == outcome::machine) {
      out.result = outcome::machine;
      out.machine = std::move (r.machine);
      out.generalization = std::move (r.generalization);
      out.seconds = seconds_since (t0);
      return out;
    }
    out.generalization = std::move (r.generalization);
  }
  out.result = opts.complete_bound ? outcome::unreal : outcome::unknown;
  out.seconds = seconds_since (t0);
  return out;
}

example_set characteristic_sample (const mealy& t, sample_kind kind) {
  if (!is_minimal (t))
    throw std::invalid_argument ("characteristic samples are defined for minimal machines only");
  const int n = t.num_states ();
  const unsigned I = t.ab ().input_count ();
  // Length-lexicographically minimal access words, by breadth-first search
  // with inputs in increasing order.
  std::vector<std::optional<std::vector<valuation>>> access (n);
  access[t.initial ()] = std::vector<valuation> {};
  std::deque<int> work {t.initial ()};
  while (!work.empty ()) {
    int s = work.front ();
    work.pop_front ();
    for (valuation i = 0; i < I; ++i) {
      int d = t.at (s, i).target;
      if (!access[d]) {
        auto w = *access[s];
        w.push_back (i);
        access[d] = std::move (w);
        work.push_back (d);
      }
    }
  }
  // Minimal distinguishing words, by breadth-first search on state pairs.
  auto distinguish = [&] (int x, int y) {
    std::vector<std::optional<std::vector<valuation>>> seen (static_cast<std::size_t> (n) * n);
    std::deque<std::pair<int, int>> q {{x, y}};
    seen[static_cast<std::size_t> (x) * n + y] = std::vector<valuation> {};
    while (!q.empty ()) {
      auto [a, b] = q.front ();
      q.pop_front ();
      const auto path = *seen[static_cast<std::size_t> (a) * n + b];
      for (valuation i = 0; i < I; ++i)
        if (t.at (a, i).out != t.at (b, i).out) {
          auto w = path;
          w.push_back (i);
          return w;
        }
      for (valuation i = 0; i < I; ++i) {
        int na = t.at (a, i).target, nb = t.at (b, i).target;
        auto& slot = seen[static_cast<std::size_t> (na) * n + nb];
        if (!slot) {
          auto w = path;
          w.push_back (i);
          slot = std::move (w);
          q.emplace_back (na, nb);
        }
      }
    }
    throw std::logic_error ("equivalent states in a minimal machine");
  };
  example_set out;
  auto add = [&] (const std::vector<valuation>& inputs) {
    auto w = io_image (t.machine (), inputs);
    if (std::find (out.begin (), out.end (), w) == out.end ())
      out.push_back (std::move (w));
  };
  for (int s = 0; s < n; ++s)
    for (valuation i = 0; i < I; ++i) {
      auto w = *access[s];
      w.push_back (i);
      add (w);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) {
        auto w = *access[x];
        auto d = distinguish (x, y);
        w.insert (w.end (), d.begin (), d.end ());
        add (w);
      }
  if (kind == sample_kind::separating)
    for (int s = 0; s < n; ++s)
      for (valuation i = 0; i < I; ++i) {
        int d = t.at (s, i).target;
        for (int y = 0; y < n; ++y)
          if (y != d) {
            auto w = *access[s];
            w.push_back (i);
            auto suffix = distinguish (d, y);
            w.insert (w.end (), suffix.begin (), suffix.end ());
            add (w);
          }
      }
  return out;
}

}  // namespace synthlearn
