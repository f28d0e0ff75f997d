#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "synthlearn/alphabet.hh"
#include "synthlearn/ltl.hh"

namespace synthlearn {

class mealy;

/// Dense set of letter indices of one alphabet.
class letter_set {
  public:
    letter_set () = default;
    explicit letter_set (unsigned universe, bool full = false);

    unsigned universe () const { return universe_; }
    bool contains (unsigned l) const { return (words_[l >> 6] >> (l & 63)) & 1u; }
    void insert (unsigned l) { words_[l >> 6] |= std::uint64_t {1} << (l & 63); }
    bool empty () const;
    bool subset_of (const letter_set& o) const;
    letter_set operator& (const letter_set& o) const;
    letter_set operator| (const letter_set& o) const;
    friend bool operator== (const letter_set&, const letter_set&) = default;
    friend auto operator<=> (const letter_set&, const letter_set&) = default;

  private:
    unsigned universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Nondeterministic Büchi automaton over the explicit letters of an
/// alphabet (existential reading).
struct nba {
    alphabet ab;
    int num_states = 0;
    std::vector<int> initial;
    std::vector<bool> accepting;
    /// successors[q * letter_count + l], sorted; possibly empty.
    std::vector<std::vector<int>> successors;

    const std::vector<int>& succ (int q, unsigned l) const { return successors[static_cast<std::size_t> (q) * ab.letter_count () + l]; }
    std::vector<int>& succ (int q, unsigned l) { return successors[static_cast<std::size_t> (q) * ab.letter_count () + l]; }
    bool is_complete () const;
    /// Fresh automaton with n states and no transitions.
    static nba empty (alphabet ab, int n);
};

/// Complete universal co-Büchi automaton.  A word is accepted iff every run
/// visits counted states finitely often; the k-bounded variant allows at
/// most k visits per run.
struct ucw {
    alphabet ab;
    int num_states = 0;
    std::vector<int> initial;
    std::vector<bool> counted;
    std::vector<std::vector<int>> successors;

    const std::vector<int>& succ (int q, unsigned l) const { return successors[static_cast<std::size_t> (q) * ab.letter_count () + l]; }
    std::size_t num_counted () const;
    /// Throws std::logic_error naming the first (state, letter) without successor.
    void check_complete () const;
};

class translation_too_large : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct translation_options {
    /// Cap on intermediate generalized-Büchi states.
    std::size_t state_cap = 20000;
};

/// L^E(result) is the set of words satisfying f.  f must be in NNF.
nba ltl_to_nba (const formula_ptr& f, const alphabet& ab, const translation_options& opts = {});

/// Adds one non-accepting sink absorbing missing transitions, unless the
/// automaton is already complete.
nba complete_nba (const nba& a);

/// Universal reading of a completed NBA: counted states are the accepting ones.
ucw ucw_of_nba (const nba& a);

/// Automaton whose universal language is the set of models of f, obtained
/// from the NBA of !f.
ucw ucw_of_formula (const formula_ptr& f, const alphabet& ab, const translation_options& opts = {});

/// Existential reading of a UCW: L^E(result) is the complement of L^A(a).
nba nba_of_ucw (const ucw& a);

std::string serialize_automaton (const ucw& a);
ucw parse_automaton (std::string_view text);

/// Emptiness of the product of a complete machine with an NBA, by nested
/// depth-first search.  Returns a lasso of the product whose loop visits an
/// accepting NBA state, or nullopt when the product language is empty.
std::optional<lasso_word> product_counterexample (const mealy& m, const nba& b);
bool product_empty (const mealy& m, const nba& b);

}  // namespace synthlearn
