#include "synthlearn/machines.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "synthlearn/automata.hh"
#include "text_util.hh"

namespace synthlearn {

pre_mealy::pre_mealy (alphabet ab, int num_states) : ab_ (std::move (ab)) {
  for (int s = 0; s < num_states; ++s)
    add_state ();
}

void pre_mealy::set_initial (int s) {
  if (s < 0 || s >= num_states ())
    throw std::out_of_range ("initial state out of range");
  initial_ = s;
}

int pre_mealy::add_state () {
  delta_.emplace_back (ab_.input_count ());
  return num_states () - 1;
}

void pre_mealy::set (int s, valuation in, transition t) {
  if (t.target < 0 || t.target >= num_states ())
    throw std::out_of_range ("transition target out of range");
  delta_.at (s).at (in) = t;
}

void pre_mealy::erase (int s, valuation in) { delta_.at (s).at (in).reset (); }

std::size_t pre_mealy::num_transitions () const {
  std::size_t n = 0;
  for (const auto& row : delta_)
    for (const auto& t : row)
      n += t.has_value ();
  return n;
}

bool pre_mealy::is_complete () const { return num_transitions () == delta_.size () * ab_.input_count (); }

std::vector<int> pre_mealy::bfs_order () const {
  std::vector<int> order;
  if (delta_.empty ())
    return order;
  std::vector<char> seen (num_states (), 0);
  order.push_back (initial_);
  seen[initial_] = 1;
  for (std::size_t h = 0; h < order.size (); ++h)
    for (const auto& t : delta_[order[h]])
      if (t && !seen[t->target]) {
        seen[t->target] = 1;
        order.push_back (t->target);
      }
  for (int s = 0; s < num_states (); ++s)
    if (!seen[s])
      order.push_back (s);
  return order;
}

std::vector<std::pair<int, valuation>> pre_mealy::holes () const {
  std::vector<std::pair<int, valuation>> out;
  for (int s : bfs_order ())
    for (valuation i = 0; i < ab_.input_count (); ++i)
      if (!delta_[s][i])
        out.emplace_back (s, i);
  return out;
}

mealy::mealy (pre_mealy m) : m_ (std::move (m)) {
  if (!m_.is_complete ())
    throw std::invalid_argument ("machine has holes");
}

bool ll_less (const io_word& a, const io_word& b) {
  if (a.size () != b.size ())
    return a.size () < b.size ();
  return a < b;
}

namespace {

/// Trie over io words: node children keyed by input, storing the output.
struct io_trie {
    struct edge {
        valuation out;
        int child;
    };
    std::vector<std::map<valuation, edge>> nodes {1};
    std::vector<io_word> words {io_word {}};
};

}  // namespace

consistency_report check_consistency (const example_set& e) {
  io_trie t;
  consistency_report r;
  for (const auto& w : e) {
    int node = 0;
    for (std::size_t j = 0; j < w.size (); ++j) {
      auto it = t.nodes[node].find (w[j].in);
      if (it == t.nodes[node].end ()) {
        int c = static_cast<int> (t.nodes.size ());
        io_word pre = t.words[node];
        pre.push_back (w[j]);
        t.nodes.emplace_back ();
        t.words.push_back (std::move (pre));
        t.nodes[node].emplace (w[j].in, io_trie::edge {w[j].out, c});
        node = c;
      } else if (it->second.out != w[j].out) {
        r.consistent = false;
        r.prefix = io_word (w.begin (), w.begin () + static_cast<std::ptrdiff_t> (j));
        r.input = w[j].in;
        r.out_a = it->second.out;
        r.out_b = w[j].out;
        return r;
      } else
        node = it->second.child;
    }
  }
  return r;
}

inconsistent_examples::inconsistent_examples (const alphabet& ab, consistency_report r)
    : std::runtime_error ([&] {
        std::string p;
        for (const auto& l : r.prefix)
          p += ab.format (l) + " ";
        return "inconsistent examples: after '" + p + "' input " + ab.format (side::input, r.input) +
               " is answered with both " + ab.format (side::output, r.out_a) + " and " +
               ab.format (side::output, r.out_b);
      }()),
      report_ (std::move (r)) {}

prefix_tree pta_build (const example_set& e, const alphabet& ab) {
  auto rep = check_consistency (e);
  if (!rep.consistent)
    throw inconsistent_examples (ab, rep);
  io_trie t;
  for (const auto& w : e) {
    int node = 0;
    for (const auto& l : w) {
      auto it = t.nodes[node].find (l.in);
      if (it == t.nodes[node].end ()) {
        int c = static_cast<int> (t.nodes.size ());
        io_word pre = t.words[node];
        pre.push_back (l);
        t.nodes.emplace_back ();
        t.words.push_back (std::move (pre));
        t.nodes[node].emplace (l.in, io_trie::edge {l.out, c});
        node = c;
      } else
        node = it->second.child;
    }
  }
  const int n = static_cast<int> (t.nodes.size ());
  std::vector<int> order (n);
  for (int i = 0; i < n; ++i)
    order[i] = i;
  std::sort (order.begin (), order.end (), [&] (int a, int b) { return ll_less (t.words[a], t.words[b]); });
  std::vector<int> rank (n);
  for (int i = 0; i < n; ++i)
    rank[order[i]] = i;
  prefix_tree pt {pre_mealy (ab, n), {}};
  for (int i = 0; i < n; ++i)
    pt.words.push_back (t.words[order[i]]);
  pt.machine.set_initial (rank[0]);
  for (int v = 0; v < n; ++v)
    for (const auto& [in, ed] : t.nodes[v])
      pt.machine.set (rank[v], in, {ed.out, rank[ed.child]});
  return pt;
}

run_result run (const pre_mealy& m, const std::vector<valuation>& inputs) {
  run_result r;
  r.state = m.initial ();
  for (std::size_t j = 0; j < inputs.size (); ++j) {
    const auto& t = m.at (r.state, inputs[j]);
    if (!t) {
      r.hole_at = j;
      return r;
    }
    r.last_output = t->out;
    r.state = t->target;
  }
  return r;
}

bool accepts (const pre_mealy& m, const io_word& w) {
  int s = m.initial ();
  for (const auto& l : w) {
    const auto& t = m.at (s, l.in);
    if (!t || t->out != l.out)
      return false;
    s = t->target;
  }
  return true;
}

state_partition::state_partition (int n) : parent_ (n) {
  for (int i = 0; i < n; ++i)
    parent_[i] = i;
}

int state_partition::find (int x) const {
  int r = x;
  while (parent_[r] != r)
    r = parent_[r];
  while (parent_[x] != r) {
    int nx = parent_[x];
    parent_[x] = r;
    x = nx;
  }
  return r;
}

bool state_partition::unite (int x, int y) {
  int a = find (x), b = find (y);
  if (a == b)
    return false;
  if (b < a)
    std::swap (a, b);
  parent_[b] = a;
  return true;
}

int state_partition::num_classes () const {
  int n = 0;
  for (int i = 0; i < size (); ++i)
    n += find (i) == i;
  return n;
}

std::vector<std::vector<int>> state_partition::classes () const {
  std::vector<std::vector<int>> out;
  std::vector<int> idx = class_index ();
  for (int i = 0; i < size (); ++i) {
    if (idx[i] == static_cast<int> (out.size ()))
      out.emplace_back ();
    out[idx[i]].push_back (i);
  }
  return out;
}

std::vector<int> state_partition::class_index () const {
  std::vector<int> idx (size (), -1), root_idx (size (), -1);
  int k = 0;
  for (int i = 0; i < size (); ++i) {
    int r = find (i);
    if (root_idx[r] == -1)
      root_idx[r] = k++;
    idx[i] = root_idx[r];
  }
  return idx;
}

bool state_partition::finer_or_equal (const state_partition& o) const {
  for (int i = 0; i < size (); ++i)
    if (!o.same (i, find (i)))
      return false;
  return true;
}

bool operator== (const state_partition& a, const state_partition& b) {
  return a.size () == b.size () && a.class_index () == b.class_index ();
}

state_partition merge_class (const pre_mealy& m, const state_partition& part, int x, int y, fold_order order) {
  const unsigned I = m.ab ().input_count ();
  const int n = m.num_states ();
  state_partition p (n);
  // Per-root table: some target for every input defined by a class member.
  std::vector<std::vector<int>> table (n, std::vector<int> (I, -1));
  for (int s = 0; s < n; ++s)
    for (valuation i = 0; i < I; ++i)
      if (const auto& t = m.at (s, i))
        table[s][i] = t->target;
  std::deque<std::pair<int, int>> pending;
  auto join = [&] (int a, int b) {
    int ra = p.find (a), rb = p.find (b);
    if (ra == rb)
      return;
    p.unite (ra, rb);
    int r = p.find (ra), o = r == ra ? rb : ra;
    for (valuation i = 0; i < I; ++i) {
      if (table[o][i] == -1)
        continue;
      if (table[r][i] == -1)
        table[r][i] = table[o][i];
      else
        pending.emplace_back (table[r][i], table[o][i]);
    }
  };
  auto drain = [&] {
    while (!pending.empty ()) {
      std::pair<int, int> pr;
      if (order == fold_order::fifo) {
        pr = pending.front ();
        pending.pop_front ();
      } else {
        pr = pending.back ();
        pending.pop_back ();
      }
      join (pr.first, pr.second);
    }
  };
  for (int s = 0; s < n; ++s)
    join (s, part.find (s));
  join (x, y);
  drain ();
  return p;
}

namespace {

/// First (x, y, i) violating the congruence (or Mealy-congruence) condition.
std::optional<std::tuple<int, int, valuation>> congruence_witness (const pre_mealy& m, const state_partition& part,
                                                                   bool outputs) {
  const unsigned I = m.ab ().input_count ();
  for (const auto& cls : part.classes ())
    for (valuation i = 0; i < I; ++i) {
      int first = -1;
      for (int s : cls) {
        const auto& t = m.at (s, i);
        if (!t)
          continue;
        if (first == -1) {
          first = s;
          continue;
        }
        const auto& u = *m.at (first, i);
        if (!part.same (u.target, t->target) || (outputs && u.out != t->out))
          return std::tuple {first, s, i};
      }
    }
  return std::nullopt;
}

}  // namespace

bool is_congruence (const pre_mealy& m, const state_partition& part) { return !congruence_witness (m, part, false); }

bool is_mealy_congruence (const pre_mealy& m, const state_partition& part) {
  return !congruence_witness (m, part, true);
}

bool mergeable (const pre_mealy& m, const state_partition& part, int x, int y) {
  return is_mealy_congruence (m, merge_class (m, part, x, y));
}

non_congruence::non_congruence (int x_, int y_, valuation in)
    : std::invalid_argument ("partition is not a Mealy-congruence: states " + std::to_string (x_) + " and " +
                             std::to_string (y_) + " disagree on input " + std::to_string (in)),
      x (x_), y (y_), input (in) {}

pre_mealy quotient (const pre_mealy& m, const state_partition& part) {
  if (auto w = congruence_witness (m, part, true))
    throw non_congruence (std::get<0> (*w), std::get<1> (*w), std::get<2> (*w));
  auto classes = part.classes ();
  auto idx = part.class_index ();
  pre_mealy q (m.ab (), static_cast<int> (classes.size ()));
  q.set_initial (idx[m.initial ()]);
  for (std::size_t c = 0; c < classes.size (); ++c)
    for (valuation i = 0; i < m.ab ().input_count (); ++i)
      for (int s : classes[c])
        if (const auto& t = m.at (s, i)) {
          q.set (static_cast<int> (c), i, {t->out, idx[t->target]});
          break;
        }
  return q;
}

std::vector<std::vector<bool>> reach_sets (const pre_mealy& m, const ucw& a) {
  const int n = m.num_states ();
  std::vector<std::vector<bool>> r (n, std::vector<bool> (a.num_states, false));
  if (n == 0)
    return r;
  std::deque<int> work;
  std::vector<char> queued (n, 0);
  for (int q : a.initial)
    r[m.initial ()][q] = true;
  work.push_back (m.initial ());
  queued[m.initial ()] = 1;
  while (!work.empty ()) {
    int s = work.front ();
    work.pop_front ();
    queued[s] = 0;
    for (valuation i = 0; i < m.ab ().input_count (); ++i) {
      const auto& t = m.at (s, i);
      if (!t)
        continue;
      unsigned l = a.ab.index ({i, t->out});
      bool changed = false;
      for (int q = 0; q < a.num_states; ++q)
        if (r[s][q])
          for (int d : a.succ (q, l))
            if (!r[t->target][d]) {
              r[t->target][d] = true;
              changed = true;
            }
      if (changed && !queued[t->target]) {
        queued[t->target] = 1;
        work.push_back (t->target);
      }
    }
  }
  return r;
}

namespace {

struct cube {
    valuation mask;  // cared bits
    valuation value;
};

std::string cube_string (const alphabet& ab, const cube& c) {
  std::string out;
  for (int j = 0; j < ab.num_input_props (); ++j) {
    prop p {side::input, j};
    valuation b = ab.bit (p);
    if (!(c.mask & b))
      continue;
    if (!out.empty ())
      out += " & ";
    if (!(c.value & b))
      out += '!';
    out += ab.name (p);
  }
  return out.empty () ? "true" : out;
}

/// Greedy cover of a set of input valuations by maximal cubes.
std::string input_formula (const alphabet& ab, const std::vector<valuation>& ins) {
  const unsigned I = ab.input_count ();
  if (ins.size () == I)
    return "true";
  std::vector<char> member (I, 0);
  for (valuation v : ins)
    member[v] = 1;
  const int n = ab.num_input_props ();
  std::vector<cube> cover;
  if (n > 6) {
    for (valuation v : ins)
      cover.push_back ({I - 1, v});
  } else {
    std::vector<cube> cubes;
    for (valuation mask = 0; mask < I; ++mask)
      for (valuation value = 0; value < I; ++value) {
        if (value & ~mask)
          continue;
        bool inside = true;
        for (valuation v = 0; v < I && inside; ++v)
          if ((v & mask) == value && !member[v])
            inside = false;
        if (inside)
          cubes.push_back ({mask, value});
      }
    std::vector<char> covered (I, 0);
    std::size_t left = ins.size ();
    while (left) {
      int best = -1;
      std::size_t best_gain = 0;
      for (std::size_t c = 0; c < cubes.size (); ++c) {
        std::size_t gain = 0;
        for (valuation v : ins)
          gain += !covered[v] && (v & cubes[c].mask) == cubes[c].value;
        if (gain > best_gain) {
          best_gain = gain;
          best = static_cast<int> (c);
        }
      }
      cover.push_back (cubes[best]);
      for (valuation v : ins)
        if (!covered[v] && (v & cubes[best].mask) == cubes[best].value) {
          covered[v] = 1;
          --left;
        }
    }
  }
  std::string out;
  for (const auto& c : cover) {
    if (!out.empty ())
      out += " | ";
    out += cover.size () > 1 && __builtin_popcount (c.mask) > 1 ? "(" + cube_string (ab, c) + ")" : cube_string (ab, c);
  }
  return out;
}

}  // namespace

std::string to_dot (const pre_mealy& m) {
  const alphabet& ab = m.ab ();
  std::ostringstream os;
  os << "digraph mealy {\n  rankdir=LR;\n  node [shape=circle];\n  init [shape=point];\n";
  for (int s = 0; s < m.num_states (); ++s)
    os << "  q" << s << ";\n";
  if (m.num_states ())
    os << "  init -> q" << m.initial () << ";\n";
  for (int s = 0; s < m.num_states (); ++s) {
    std::map<std::pair<int, valuation>, std::vector<valuation>> groups;
    for (valuation i = 0; i < ab.input_count (); ++i)
      if (const auto& t = m.at (s, i))
        groups[{t->target, t->out}].push_back (i);
    for (const auto& [key, ins] : groups)
      os << "  q" << s << " -> q" << key.first << " [label=\"" << input_formula (ab, ins) << " / "
         << ab.format_conjunction (side::output, key.second) << "\"];\n";
  }
  os << "}\n";
  return os.str ();
}

std::string serialize_machine (const pre_mealy& m) {
  const alphabet& ab = m.ab ();
  std::ostringstream os;
  os << "inputs:";
  for (const auto& n : ab.inputs ())
    os << ' ' << n;
  os << "\noutputs:";
  for (const auto& n : ab.outputs ())
    os << ' ' << n;
  os << "\nstates: " << m.num_states () << "\ninitial: " << m.initial () << '\n';
  for (int s = 0; s < m.num_states (); ++s) {
    const auto& first = m.at (s, 0);
    bool uniform = first.has_value () && ab.input_count () > 1;
    for (valuation i = 1; i < ab.input_count () && uniform; ++i)
      uniform = m.at (s, i) == first;
    if (uniform) {
      os << s << " */" << ab.format (side::output, first->out) << " -> " << first->target << '\n';
      continue;
    }
    for (valuation i = 0; i < ab.input_count (); ++i)
      if (const auto& t = m.at (s, i))
        os << s << ' ' << ab.format (side::input, i) << '/' << ab.format (side::output, t->out) << " -> " << t->target
           << '\n';
  }
  return os.str ();
}

pre_mealy parse_machine (std::string_view text) {
  detail::header_reader hr (text);
  hr.read_headers ({"inputs", "outputs", "states", "initial"});
  alphabet ab (hr.words ("inputs"), hr.words ("outputs"));
  int n = hr.integer ("states");
  if (n <= 0)
    throw parse_error ("machine needs at least one state", hr.line_of ("states"));
  pre_mealy m (ab, n);
  auto init = hr.integers ("initial", n);
  if (init.size () != 1)
    throw parse_error ("machine needs exactly one initial state", hr.line_of ("initial"));
  m.set_initial (init[0]);
  for (const auto& bl : hr.body ()) {
    auto t = detail::parse_transition_line (bl.text, bl.line, ab, n);
    if (t.outputs.size () != 1 || t.targets.size () != 1)
      throw parse_error ("machine transitions need one output valuation and one target", bl.line);
    for (valuation in : t.inputs) {
      transition tr {t.outputs[0], t.targets[0]};
      const auto& old = m.at (t.source, in);
      if (old && *old != tr)
        throw parse_error ("conflicting transitions for state " + std::to_string (t.source) + " on " +
                               ab.format (side::input, in),
                           bl.line);
      m.set (t.source, in, tr);
    }
  }
  return m;
}

state_partition equivalent_states (const mealy& m) {
  const int n = m.num_states ();
  const unsigned I = m.ab ().input_count ();
  std::vector<int> cls (n, 0);
  int count = 1;
  for (;;) {
    std::map<std::vector<long>, int> ids;
    std::vector<int> next (n);
    for (int s = 0; s < n; ++s) {
      std::vector<long> sig {cls[s]};
      for (valuation i = 0; i < I; ++i) {
        sig.push_back (m.at (s, i).out);
        sig.push_back (cls[m.at (s, i).target]);
      }
      next[s] = ids.try_emplace (std::move (sig), static_cast<int> (ids.size ())).first->second;
    }
    int nc = static_cast<int> (ids.size ());
    cls = std::move (next);
    if (nc == count)
      break;
    count = nc;
  }
  state_partition p (n);
  std::vector<int> rep (n, -1);
  for (int s = 0; s < n; ++s) {
    if (rep[cls[s]] == -1)
      rep[cls[s]] = s;
    p.unite (rep[cls[s]], s);
  }
  return p;
}

bool is_minimal (const mealy& m) {
  auto order = m.machine ().bfs_order ();
  std::vector<char> seen (m.num_states (), 0);
  seen[m.initial ()] = 1;
  for (int s : order)
    for (valuation i = 0; i < m.ab ().input_count (); ++i)
      if (seen[s])
        seen[m.at (s, i).target] = 1;
  if (std::count (seen.begin (), seen.end (), 1) != m.num_states ())
    return false;
  return equivalent_states (m).num_classes () == m.num_states ();
}

bool isomorphic (const pre_mealy& a, const pre_mealy& b) {
  if (!(a.ab () == b.ab ()))
    return false;
  if (a.num_states () == 0 || b.num_states () == 0)
    return a.num_states () == b.num_states ();
  std::vector<int> fwd (a.num_states (), -1), bwd (b.num_states (), -1);
  std::deque<int> work {a.initial ()};
  fwd[a.initial ()] = b.initial ();
  bwd[b.initial ()] = a.initial ();
  while (!work.empty ()) {
    int s = work.front ();
    work.pop_front ();
    int t = fwd[s];
    for (valuation i = 0; i < a.ab ().input_count (); ++i) {
      const auto& x = a.at (s, i);
      const auto& y = b.at (t, i);
      if (x.has_value () != y.has_value ())
        return false;
      if (!x)
        continue;
      if (x->out != y->out)
        return false;
      if (fwd[x->target] == -1 && bwd[y->target] == -1) {
        fwd[x->target] = y->target;
        bwd[y->target] = x->target;
        work.push_back (x->target);
      } else if (fwd[x->target] != y->target || bwd[y->target] != x->target)
        return false;
    }
  }
  return true;
}

std::vector<valuation> inputs_of (const io_word& w) {
  std::vector<valuation> out;
  for (const auto& l : w)
    out.push_back (l.in);
  return out;
}

io_word io_image (const pre_mealy& m, const std::vector<valuation>& inputs) {
  io_word w;
  int s = m.initial ();
  for (valuation i : inputs) {
    const auto& t = m.at (s, i);
    if (!t)
      break;
    w.push_back ({i, t->out});
    s = t->target;
  }
  return w;
}

}  // namespace synthlearn
