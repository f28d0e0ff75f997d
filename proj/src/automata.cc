#include "synthlearn/automata.hh"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "synthlearn/machines.hh"
#include "text_util.hh"

namespace synthlearn {

letter_set::letter_set (unsigned universe, bool full) : universe_ (universe), words_ ((universe + 63) / 64, 0) {
  if (full)
    for (unsigned l = 0; l < universe; ++l)
      insert (l);
}

bool letter_set::empty () const {
  return std::all_of (words_.begin (), words_.end (), [] (std::uint64_t w) { return w == 0; });
}

bool letter_set::subset_of (const letter_set& o) const {
  for (std::size_t i = 0; i < words_.size (); ++i)
    if (words_[i] & ~o.words_[i])
      return false;
  return true;
}

letter_set letter_set::operator& (const letter_set& o) const {
  letter_set r = *this;
  for (std::size_t i = 0; i < words_.size (); ++i)
    r.words_[i] &= o.words_[i];
  return r;
}

letter_set letter_set::operator| (const letter_set& o) const {
  letter_set r = *this;
  for (std::size_t i = 0; i < words_.size (); ++i)
    r.words_[i] |= o.words_[i];
  return r;
}

nba nba::empty (alphabet ab, int n) {
  nba a;
  a.num_states = n;
  a.accepting.assign (n, false);
  a.successors.assign (static_cast<std::size_t> (n) * ab.letter_count (), {});
  a.ab = std::move (ab);
  return a;
}

bool nba::is_complete () const {
  return std::none_of (successors.begin (), successors.end (), [] (const auto& s) { return s.empty (); });
}

std::size_t ucw::num_counted () const { return static_cast<std::size_t> (std::count (counted.begin (), counted.end (), true)); }

void ucw::check_complete () const {
  if (initial.empty ())
    throw std::logic_error ("automaton has no initial state");
  for (int q = 0; q < num_states; ++q)
    for (unsigned l = 0; l < ab.letter_count (); ++l)
      if (succ (q, l).empty ())
        throw std::logic_error ("automaton is not complete: state " + std::to_string (q) + " has no successor on " +
                                ab.format (ab.letter_at (l)));
}

namespace {

using state_set = std::vector<int>;  // sorted

state_set set_union (const state_set& a, const state_set& b) {
  state_set r;
  std::set_union (a.begin (), a.end (), b.begin (), b.end (), std::back_inserter (r));
  return r;
}

struct move {
    letter_set letters;
    state_set next;
};

struct formula_less {
    bool operator() (const formula_ptr& a, const formula_ptr& b) const { return compare (*a, *b) < 0; }
};

/// Very-weak alternating automaton of an NNF formula: states are the
/// temporal subformulas and literals; transitions are DNFs of moves.
class vwaa {
  public:
    vwaa (const alphabet& ab) : ab_ (ab), all_ (ab.letter_count (), true) {}

    int intern (const formula_ptr& f) {
      auto [it, fresh] = ids_.try_emplace (f, static_cast<int> (nodes_.size ()));
      if (fresh) {
        nodes_.push_back (f);
        delta_.emplace_back ();
        done_.push_back (false);
      }
      return it->second;
    }

    /// DNF of state sets of a formula seen as a conjunction of obligations.
    std::vector<state_set> obligations (const formula_ptr& f) {
      switch (f->kind) {
        case op::true_: return {state_set {}};
        case op::false_: return {};
        case op::and_: {
          std::vector<state_set> r;
          for (const auto& a : obligations (f->lhs))
            for (const auto& b : obligations (f->rhs))
              r.push_back (set_union (a, b));
          return r;
        }
        case op::or_: {
          auto r = obligations (f->lhs);
          for (auto& b : obligations (f->rhs))
            r.push_back (std::move (b));
          return r;
        }
        default: return {state_set {intern (f)}};
      }
    }

    const std::vector<move>& delta (int s) {
      if (!done_[s]) {
        formula_ptr f = nodes_[s];
        auto d = expand (f);
        delta_[s] = simplify (std::move (d));
        done_[s] = true;
      }
      return delta_[s];
    }

    bool is_until (int s) const { return nodes_[s]->kind == op::until; }
    std::size_t size () const { return nodes_.size (); }

  private:
    static std::vector<move> product (const std::vector<move>& a, const std::vector<move>& b) {
      std::vector<move> r;
      for (const auto& x : a)
        for (const auto& y : b) {
          auto l = x.letters & y.letters;
          if (!l.empty ())
            r.push_back ({std::move (l), set_union (x.next, y.next)});
        }
      return r;
    }

    static std::vector<move> simplify (std::vector<move> d) {
      std::vector<char> keep (d.size (), 1);
      for (std::size_t i = 0; i < d.size (); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < d.size () && !dominated; ++j) {
          if (i == j)
            continue;
          bool sub = d[i].letters.subset_of (d[j].letters) &&
                     std::includes (d[i].next.begin (), d[i].next.end (), d[j].next.begin (), d[j].next.end ());
          bool same = d[i].letters == d[j].letters && d[i].next == d[j].next;
          dominated = sub && (!same || j < i);
        }
        keep[i] = !dominated;
      }
      std::vector<move> r;
      for (std::size_t i = 0; i < d.size (); ++i)
        if (keep[i])
          r.push_back (std::move (d[i]));
      return r;
    }

    letter_set literal (const formula& f) const {
      letter_set s (ab_.letter_count ());
      bool neg = f.kind == op::not_;
      prop p = neg ? f.lhs->atom : f.atom;
      for (unsigned l = 0; l < ab_.letter_count (); ++l)
        if (ab_.holds (p, ab_.letter_at (l)) != neg)
          s.insert (l);
      return s;
    }

    std::vector<move> expand (const formula_ptr& f) {
      switch (f->kind) {
        case op::true_: return {{all_, {}}};
        case op::false_: return {};
        case op::atom:
        case op::not_: {
          auto s = literal (*f);
          if (s.empty ())
            return {};
          return {{std::move (s), {}}};
        }
        case op::and_: return product (expand (f->lhs), expand (f->rhs));
        case op::or_: {
          auto r = expand (f->lhs);
          for (auto& m : expand (f->rhs))
            r.push_back (std::move (m));
          return r;
        }
        case op::next: {
          std::vector<move> r;
          for (auto& s : obligations (f->lhs))
            r.push_back ({all_, std::move (s)});
          return r;
        }
        case op::until: {
          auto r = expand (f->rhs);
          for (auto& m : product (expand (f->lhs), {{all_, {intern (f)}}}))
            r.push_back (std::move (m));
          return r;
        }
        case op::release: {
          auto r = product (expand (f->lhs), expand (f->rhs));
          for (auto& m : product (expand (f->rhs), {{all_, {intern (f)}}}))
            r.push_back (std::move (m));
          return r;
        }
        default: throw std::invalid_argument ("ltl_to_nba expects a formula in negation normal form");
      }
    }

    const alphabet& ab_;
    letter_set all_;
    std::map<formula_ptr, int, formula_less> ids_;
    std::vector<formula_ptr> nodes_;
    std::vector<std::vector<move>> delta_;
    std::vector<char> done_;
};

struct gba_edge {
    letter_set letters;
    int target;
    std::uint64_t acc;
};

/// Keeps states that are reachable and can reach an accepting cycle, then
/// merges bisimilar states.  Initial states keep their relative order.
nba reduce (const nba& a) {
  const unsigned L = a.ab.letter_count ();
  const int n = a.num_states;
  std::vector<std::vector<int>> adj (n);
  for (int q = 0; q < n; ++q) {
    for (unsigned l = 0; l < L; ++l)
      for (int t : a.succ (q, l))
        adj[q].push_back (t);
    std::sort (adj[q].begin (), adj[q].end ());
    adj[q].erase (std::unique (adj[q].begin (), adj[q].end ()), adj[q].end ());
  }
  // Tarjan, iterative.
  std::vector<int> index (n, -1), low (n, 0), comp (n, -1);
  std::vector<char> on_stack (n, 0);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1)
      continue;
    std::vector<std::pair<int, std::size_t>> call {{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back (root);
    on_stack[root] = 1;
    while (!call.empty ()) {
      auto& [v, i] = call.back ();
      if (i < adj[v].size ()) {
        int w = adj[v][i++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back (w);
          on_stack[w] = 1;
          call.emplace_back (w, 0);
        } else if (on_stack[w])
          low[v] = std::min (low[v], index[w]);
      } else {
        int vv = v;
        call.pop_back ();
        if (!call.empty ())
          low[call.back ().first] = std::min (low[call.back ().first], low[vv]);
        if (low[vv] == index[vv]) {
          int w;
          do {
            w = stack.back ();
            stack.pop_back ();
            on_stack[w] = 0;
            comp[w] = ncomp;
          } while (w != vv);
          ++ncomp;
        }
      }
    }
  }
  std::vector<char> good_comp (ncomp, 0);
  for (int q = 0; q < n; ++q)
    if (a.accepting[q])
      for (int t : adj[q])
        if (comp[t] == comp[q])
          good_comp[comp[q]] = 1;
  // Live states: can reach a good component.
  std::vector<std::vector<int>> radj (n);
  for (int q = 0; q < n; ++q)
    for (int t : adj[q])
      radj[t].push_back (q);
  std::vector<char> live (n, 0);
  std::vector<int> work;
  for (int q = 0; q < n; ++q)
    if (good_comp[comp[q]]) {
      live[q] = 1;
      work.push_back (q);
    }
  while (!work.empty ()) {
    int q = work.back ();
    work.pop_back ();
    for (int p : radj[q])
      if (!live[p]) {
        live[p] = 1;
        work.push_back (p);
      }
  }
  // Reachable live states in BFS order.
  std::vector<int> order, rename (n, -1);
  for (int q : a.initial)
    if (live[q] && rename[q] == -1) {
      rename[q] = static_cast<int> (order.size ());
      order.push_back (q);
    }
  for (std::size_t h = 0; h < order.size (); ++h)
    for (int t : adj[order[h]])
      if (live[t] && rename[t] == -1) {
        rename[t] = static_cast<int> (order.size ());
        order.push_back (t);
      }
  if (order.empty ()) {
    nba e = nba::empty (a.ab, 1);
    e.initial = {0};
    return e;
  }
  const int m = static_cast<int> (order.size ());
  // Bisimulation refinement.
  std::vector<int> cls (m);
  for (int i = 0; i < m; ++i)
    cls[i] = a.accepting[order[i]] ? 1 : 0;
  for (int rounds = 0;; ++rounds) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next (m);
    for (int i = 0; i < m; ++i) {
      std::vector<int> sig {cls[i]};
      for (unsigned l = 0; l < L; ++l) {
        std::vector<int> cs;
        for (int t : a.succ (order[i], l))
          if (rename[t] != -1)
            cs.push_back (cls[rename[t]]);
        std::sort (cs.begin (), cs.end ());
        cs.erase (std::unique (cs.begin (), cs.end ()), cs.end ());
        sig.push_back (-1);
        sig.insert (sig.end (), cs.begin (), cs.end ());
      }
      next[i] = sig_ids.try_emplace (std::move (sig), static_cast<int> (sig_ids.size ())).first->second;
    }
    int before = static_cast<int> (std::set<int> (cls.begin (), cls.end ()).size ());
    int after = static_cast<int> (sig_ids.size ());
    cls = std::move (next);
    if (after == before)
      break;
  }
  // Number classes by first occurrence in BFS order.
  std::vector<int> cid (m, -1);
  int k = 0;
  std::vector<int> cls_id (m, -1);
  for (int i = 0; i < m; ++i) {
    if (cls_id[cls[i]] == -1)
      cls_id[cls[i]] = k++;
    cid[i] = cls_id[cls[i]];
  }
  nba r = nba::empty (a.ab, k);
  std::vector<char> seen (k, 0);
  for (int i = 0; i < m; ++i) {
    int c = cid[i];
    r.accepting[c] = a.accepting[order[i]];
    if (seen[c])
      continue;
    seen[c] = 1;
    for (unsigned l = 0; l < L; ++l) {
      auto& out = r.succ (c, l);
      for (int t : a.succ (order[i], l))
        if (rename[t] != -1)
          out.push_back (cid[rename[t]]);
      std::sort (out.begin (), out.end ());
      out.erase (std::unique (out.begin (), out.end ()), out.end ());
    }
  }
  for (int q : a.initial)
    if (rename[q] != -1) {
      int c = cid[rename[q]];
      if (std::find (r.initial.begin (), r.initial.end (), c) == r.initial.end ())
        r.initial.push_back (c);
    }
  return r;
}

}  // namespace

nba ltl_to_nba (const formula_ptr& f, const alphabet& ab, const translation_options& opts) {
  const unsigned L = ab.letter_count ();
  vwaa va (ab);
  auto init_sets = va.obligations (f);

  // Generalized Büchi automaton over sets of VWAA states; one acceptance
  // set per until-subformula.
  std::map<state_set, int> gba_ids;
  std::vector<state_set> gba_states;
  std::vector<std::vector<gba_edge>> gba_edges;
  auto gba_id = [&] (const state_set& s) {
    auto [it, fresh] = gba_ids.try_emplace (s, static_cast<int> (gba_states.size ()));
    if (fresh) {
      if (gba_states.size () >= opts.state_cap)
        throw translation_too_large ("LTL translation exceeds " + std::to_string (opts.state_cap) + " states");
      gba_states.push_back (s);
    }
    return it->second;
  };
  std::vector<int> gba_init;
  for (const auto& s : init_sets) {
    int id = gba_id (s);
    if (std::find (gba_init.begin (), gba_init.end (), id) == gba_init.end ())
      gba_init.push_back (id);
  }

  std::vector<int> untils;  // VWAA ids of until-states, discovered lazily
  std::vector<std::vector<move>> combos_cache;
  for (std::size_t h = 0; h < gba_states.size (); ++h) {
    state_set cur = gba_states[h];
    std::vector<move> combos {{letter_set (L, true), {}}};
    for (int s : cur) {
      std::vector<move> next;
      for (const auto& c : combos)
        for (const auto& m : va.delta (s)) {
          auto l = c.letters & m.letters;
          if (!l.empty ())
            next.push_back ({std::move (l), set_union (c.next, m.next)});
        }
      combos = std::move (next);
    }
    std::vector<gba_edge> edges;
    for (auto& c : combos)
      edges.push_back ({std::move (c.letters), gba_id (c.next), 0});
    gba_edges.push_back (std::move (edges));
  }
  for (std::size_t s = 0; s < va.size (); ++s)
    if (va.is_until (static_cast<int> (s)))
      untils.push_back (static_cast<int> (s));
  if (untils.size () > 63)
    throw translation_too_large ("too many until-subformulas");
  const int nacc = static_cast<int> (untils.size ());

  // Acceptance marks: edge (S, a, S') is in the set of until u iff u is not
  // in S', or some move (b, X) of u with a within b, u not in X and X within S'.
  for (std::size_t h = 0; h < gba_states.size (); ++h)
    for (auto& e : gba_edges[h]) {
      const auto& tgt = gba_states[e.target];
      for (int j = 0; j < nacc; ++j) {
        int u = untils[j];
        bool ok = !std::binary_search (tgt.begin (), tgt.end (), u);
        if (!ok)
          for (const auto& m : va.delta (u))
            if (e.letters.subset_of (m.letters) && !std::binary_search (m.next.begin (), m.next.end (), u) &&
                std::includes (tgt.begin (), tgt.end (), m.next.begin (), m.next.end ())) {
              ok = true;
              break;
            }
        if (ok)
          e.acc |= std::uint64_t {1} << j;
      }
    }

  // Degeneralize: states (S, level), accepting at level == nacc.
  std::map<std::pair<int, int>, int> ba_ids;
  std::vector<std::pair<int, int>> ba_states;
  auto ba_id = [&] (int s, int lvl) {
    auto [it, fresh] = ba_ids.try_emplace ({s, lvl}, static_cast<int> (ba_states.size ()));
    if (fresh) {
      if (ba_states.size () >= opts.state_cap * 4)
        throw translation_too_large ("degeneralized automaton exceeds state cap");
      ba_states.emplace_back (s, lvl);
    }
    return it->second;
  };
  std::vector<int> ba_init;
  for (int s : gba_init)
    ba_init.push_back (ba_id (s, 0));
  std::vector<std::vector<std::pair<unsigned, int>>> ba_trans;
  for (std::size_t h = 0; h < ba_states.size (); ++h) {
    auto [s, lvl] = ba_states[h];
    std::vector<std::pair<unsigned, int>> out;
    for (const auto& e : gba_edges[s]) {
      int nl = lvl == nacc ? 0 : lvl;
      while (nl < nacc && ((e.acc >> nl) & 1))
        ++nl;
      int t = ba_id (e.target, nl);
      for (unsigned l = 0; l < L; ++l)
        if (e.letters.contains (l))
          out.emplace_back (l, t);
    }
    ba_trans.push_back (std::move (out));
  }
  nba raw = nba::empty (ab, static_cast<int> (ba_states.size ()));
  raw.initial = ba_init;
  for (std::size_t q = 0; q < ba_states.size (); ++q) {
    raw.accepting[q] = ba_states[q].second == nacc;
    for (auto [l, t] : ba_trans[q])
      raw.succ (static_cast<int> (q), l).push_back (t);
  }
  for (auto& s : raw.successors) {
    std::sort (s.begin (), s.end ());
    s.erase (std::unique (s.begin (), s.end ()), s.end ());
  }
  if (raw.num_states == 0) {
    nba e = nba::empty (ab, 1);
    e.initial = {0};
    return e;
  }
  return reduce (raw);
}

nba complete_nba (const nba& a) {
  if (a.is_complete ())
    return a;
  const unsigned L = a.ab.letter_count ();
  nba r = nba::empty (a.ab, a.num_states + 1);
  const int sink = a.num_states;
  r.initial = a.initial;
  for (int q = 0; q < a.num_states; ++q) {
    r.accepting[q] = a.accepting[q];
    for (unsigned l = 0; l < L; ++l) {
      r.succ (q, l) = a.succ (q, l);
      if (r.succ (q, l).empty ())
        r.succ (q, l) = {sink};
    }
  }
  for (unsigned l = 0; l < L; ++l)
    r.succ (sink, l) = {sink};
  return r;
}

ucw ucw_of_nba (const nba& a) {
  nba c = complete_nba (a);
  ucw u;
  u.ab = c.ab;
  u.num_states = c.num_states;
  u.initial = c.initial;
  u.counted = c.accepting;
  u.successors = std::move (c.successors);
  u.check_complete ();
  return u;
}

ucw ucw_of_formula (const formula_ptr& f, const alphabet& ab, const translation_options& opts) {
  auto neg = to_nnf (formula::make_unary (op::not_, f));
  return ucw_of_nba (ltl_to_nba (neg, ab, opts));
}

nba nba_of_ucw (const ucw& a) {
  nba r;
  r.ab = a.ab;
  r.num_states = a.num_states;
  r.initial = a.initial;
  r.accepting = a.counted;
  r.successors = a.successors;
  return r;
}

std::string serialize_automaton (const ucw& a) {
  std::ostringstream os;
  os << "inputs:";
  for (const auto& n : a.ab.inputs ())
    os << ' ' << n;
  os << "\noutputs:";
  for (const auto& n : a.ab.outputs ())
    os << ' ' << n;
  os << "\nstates: " << a.num_states << "\ninitial:";
  for (int q : a.initial)
    os << ' ' << q;
  os << "\ncounted:";
  for (int q = 0; q < a.num_states; ++q)
    if (a.counted[q])
      os << ' ' << q;
  os << '\n';
  for (int q = 0; q < a.num_states; ++q)
    for (unsigned l = 0; l < a.ab.letter_count (); ++l) {
      auto lt = a.ab.letter_at (l);
      os << q << ' ' << a.ab.format (side::input, lt.in) << '/' << a.ab.format (side::output, lt.out) << " ->";
      const auto& s = a.succ (q, l);
      for (std::size_t i = 0; i < s.size (); ++i)
        os << (i ? "," : " ") << s[i];
      os << '\n';
    }
  return os.str ();
}

ucw parse_automaton (std::string_view text) {
  detail::header_reader hr (text);
  hr.read_headers ({"inputs", "outputs", "states", "initial", "counted"});
  ucw a;
  a.ab = alphabet (hr.words ("inputs"), hr.words ("outputs"));
  a.num_states = hr.integer ("states");
  if (a.num_states <= 0)
    throw parse_error ("automaton needs at least one state", hr.line_of ("states"));
  const unsigned L = a.ab.letter_count ();
  a.successors.assign (static_cast<std::size_t> (a.num_states) * L, {});
  a.counted.assign (a.num_states, false);
  for (int q : hr.integers ("initial", a.num_states))
    a.initial.push_back (q);
  if (a.initial.empty ())
    throw parse_error ("automaton needs an initial state", hr.line_of ("initial"));
  if (hr.has ("counted"))
    for (int q : hr.integers ("counted", a.num_states))
      a.counted[q] = true;
  for (const auto& tl : hr.body ()) {
    auto t = detail::parse_transition_line (tl.text, tl.line, a.ab, a.num_states);
    for (valuation in : t.inputs)
      for (valuation out : t.outputs)
        for (int d : t.targets) {
          auto& s = a.successors[static_cast<std::size_t> (t.source) * L + a.ab.index ({in, out})];
          if (std::find (s.begin (), s.end (), d) == s.end ())
            s.push_back (d);
        }
  }
  for (auto& s : a.successors)
    std::sort (s.begin (), s.end ());
  try {
    a.check_complete ();
  } catch (const std::logic_error& e) {
    throw parse_error (e.what ());
  }
  return a;
}

std::optional<lasso_word> product_counterexample (const mealy& m, const nba& b) {
  const alphabet& ab = m.ab ();
  const int nq = b.num_states;
  const unsigned I = ab.input_count ();
  auto id = [&] (int s, int q) { return s * nq + q; };
  const int n = m.num_states () * nq;

  struct frame {
      int state;
      unsigned input;
      std::size_t succ_idx;
      letter via;  // letter on the edge that entered this frame
  };
  std::vector<char> visited1 (n, 0), visited2 (n, 0), on_stack1 (n, 0);

  // Edge enumeration: (input, successor index) pairs in order.
  auto step = [&] (frame& f, int& next, letter& via) -> bool {
    int s = f.state / nq, q = f.state % nq;
    while (f.input < I) {
      const auto& tr = m.at (s, f.input);
      letter l {f.input, tr.out};
      const auto& succ = b.succ (q, ab.index (l));
      if (f.succ_idx < succ.size ()) {
        next = id (tr.target, succ[f.succ_idx++]);
        via = l;
        return true;
      }
      ++f.input;
      f.succ_idx = 0;
    }
    return false;
  };

  for (int q0 : b.initial) {
    int root = id (m.initial (), q0);
    if (visited1[root])
      continue;
    std::vector<frame> outer {{root, 0, 0, {}}};
    visited1[root] = 1;
    on_stack1[root] = 1;
    while (!outer.empty ()) {
      int next;
      letter via;
      if (step (outer.back (), next, via)) {
        if (!visited1[next]) {
          visited1[next] = 1;
          on_stack1[next] = 1;
          outer.push_back ({next, 0, 0, via});
        }
        continue;
      }
      int seed = outer.back ().state;
      if (b.accepting[seed % nq]) {
        // Inner search for a state on the outer stack.
        std::vector<frame> inner {{seed, 0, 0, {}}};
        visited2[seed] = 1;
        while (!inner.empty ()) {
          int nx;
          letter v2;
          if (!step (inner.back (), nx, v2)) {
            inner.pop_back ();
            continue;
          }
          if (on_stack1[nx]) {
            // Cycle: nx -> ... -> seed along the outer stack, then the inner path back to nx.
            lasso_word w;
            std::size_t pos = 0;
            while (outer[pos].state != nx)
              ++pos;
            for (std::size_t i = 1; i <= pos; ++i)
              w.prefix.push_back (outer[i].via);
            for (std::size_t i = pos + 1; i < outer.size (); ++i)
              w.loop.push_back (outer[i].via);
            for (std::size_t i = 1; i < inner.size (); ++i)
              w.loop.push_back (inner[i].via);
            w.loop.push_back (v2);
            return w;
          }
          if (!visited2[nx]) {
            visited2[nx] = 1;
            inner.push_back ({nx, 0, 0, v2});
          }
        }
      }
      on_stack1[seed] = 0;
      outer.pop_back ();
    }
  }
  return std::nullopt;
}

bool product_empty (const mealy& m, const nba& b) { return !product_counterexample (m, b).has_value (); }

}  // namespace synthlearn
