#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synthlearn/alphabet.hh"

namespace synthlearn {

struct ucw;

struct transition {
    valuation out = 0;
    int target = 0;
    friend bool operator== (const transition&, const transition&) = default;
};

/// Deterministic transducer with possibly missing transitions (holes).
class pre_mealy {
  public:
    pre_mealy () = default;
    explicit pre_mealy (alphabet ab, int num_states = 1);

    const alphabet& ab () const { return ab_; }
    int num_states () const { return static_cast<int> (delta_.size ()); }
    int initial () const { return initial_; }
    void set_initial (int s);

    int add_state ();
    const std::optional<transition>& at (int s, valuation in) const { return delta_.at (s).at (in); }
    void set (int s, valuation in, transition t);
    void erase (int s, valuation in);

    std::size_t num_transitions () const;
    bool is_complete () const;
    /// Holes in breadth-first order from the initial state (unreachable
    /// states last), inputs in valuation order.
    std::vector<std::pair<int, valuation>> holes () const;
    /// States in breadth-first discovery order from the initial state,
    /// followed by unreachable states in index order.
    std::vector<int> bfs_order () const;

    friend bool operator== (const pre_mealy&, const pre_mealy&) = default;

  private:
    alphabet ab_;
    int initial_ = 0;
    std::vector<std::vector<std::optional<transition>>> delta_;
};

/// A pre_mealy machine without holes.
class mealy {
  public:
    /// Throws std::invalid_argument if m has a hole.
    explicit mealy (pre_mealy m);
    const pre_mealy& machine () const { return m_; }
    const alphabet& ab () const { return m_.ab (); }
    int num_states () const { return m_.num_states (); }
    int initial () const { return m_.initial (); }
    const transition& at (int s, valuation in) const { return *m_.at (s, in); }

  private:
    pre_mealy m_;
};

using example_set = std::vector<io_word>;

/// Length-lexicographic order on io words.
bool ll_less (const io_word& a, const io_word& b);

struct consistency_report {
    bool consistent = true;
    /// On failure: the clashing prefix, the input read after it and the two outputs.
    io_word prefix;
    valuation input = 0;
    valuation out_a = 0;
    valuation out_b = 0;
};

consistency_report check_consistency (const example_set& e);
inline bool is_consistent (const example_set& e) { return check_consistency (e).consistent; }

class inconsistent_examples : public std::runtime_error {
  public:
    inconsistent_examples (const alphabet& ab, consistency_report r);
    const consistency_report& report () const { return report_; }

  private:
    consistency_report report_;
};

/// Prefix-tree acceptor: state s is the io word words[s]; states are numbered
/// in length-lexicographic order of their words.
struct prefix_tree {
    pre_mealy machine;
    std::vector<io_word> words;
};

prefix_tree pta_build (const example_set& e, const alphabet& ab);

struct run_result {
    int state = 0;
    std::optional<valuation> last_output;
    /// Index of the first input that hits a hole, if any; state is then the
    /// state at which the hole was found.
    std::optional<std::size_t> hole_at;
};

run_result run (const pre_mealy& m, const std::vector<valuation>& inputs);
bool accepts (const pre_mealy& m, const io_word& w);

/// Disjoint-set partition of a machine's states.
class state_partition {
  public:
    state_partition () = default;
    /// The finest partition (diagonal).
    explicit state_partition (int n);

    int size () const { return static_cast<int> (parent_.size ()); }
    int find (int x) const;
    bool same (int x, int y) const { return find (x) == find (y); }
    /// Returns false if x and y were already together.
    bool unite (int x, int y);
    int num_classes () const;
    /// Classes as sorted member lists, ordered by smallest member.
    std::vector<std::vector<int>> classes () const;
    /// Class index (in the order of classes()) of every state.
    std::vector<int> class_index () const;
    /// Coarser-or-equal test: every class of *this is inside a class of o.
    bool finer_or_equal (const state_partition& o) const;

    friend bool operator== (const state_partition& a, const state_partition& b);

  private:
    mutable std::vector<int> parent_;
};

/// Order in which non-congruent points are removed while folding.  Results
/// are identical; both are kept for testing.
enum class fold_order { fifo, lifo };

/// The finest congruence coarser than part in which x and y are equivalent.
state_partition merge_class (const pre_mealy& m, const state_partition& part, int x, int y,
                             fold_order order = fold_order::fifo);

bool is_congruence (const pre_mealy& m, const state_partition& part);
bool is_mealy_congruence (const pre_mealy& m, const state_partition& part);

/// True iff merge_class(m, part, x, y) is a Mealy-congruence.
bool mergeable (const pre_mealy& m, const state_partition& part, int x, int y);

class non_congruence : public std::invalid_argument {
  public:
    non_congruence (int x, int y, valuation in);
    int x, y;
    valuation input;
};

/// Quotient by a Mealy-congruence.  Class c of the result is the c-th entry
/// of part.classes().  Throws non_congruence with a witness triple otherwise.
pre_mealy quotient (const pre_mealy& m, const state_partition& part);

/// For every machine state, the set of automaton states reachable by reading
/// a word leading to it (as a membership vector).
std::vector<std::vector<bool>> reach_sets (const pre_mealy& m, const ucw& a);

/// Graphviz rendering; edges with identical (source, output, target) are
/// grouped and labelled "inputs / output-conjunction".
std::string to_dot (const pre_mealy& m);

/// Line format: header lines "inputs:", "outputs:", "states:", "initial:",
/// then one line per transition "src {in}/{out} -> dst", where the input
/// side may be "*" for every input valuation.
std::string serialize_machine (const pre_mealy& m);
pre_mealy parse_machine (std::string_view text);

/// Mealy-equivalence classes of a complete machine (partition refinement).
state_partition equivalent_states (const mealy& m);
/// All states reachable and pairwise inequivalent.
bool is_minimal (const mealy& m);
/// Structural equality up to renaming of states, restricted to the states
/// reachable from the initial ones.
bool isomorphic (const pre_mealy& a, const pre_mealy& b);

/// Input sequence read along io word w, and the io word produced by a
/// machine on an input sequence (stops at the first hole).
std::vector<valuation> inputs_of (const io_word& w);
io_word io_image (const pre_mealy& m, const std::vector<valuation>& inputs);

}  // namespace synthlearn
