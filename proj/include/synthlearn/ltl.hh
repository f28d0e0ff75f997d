#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "synthlearn/alphabet.hh"

namespace synthlearn {

enum class op : std::uint8_t {
  true_,
  false_,
  atom,
  not_,
  and_,
  or_,
  next,
  until,
  weak_until,
  release,
  eventually,
  always,
};

struct formula;
using formula_ptr = std::shared_ptr<const formula>;

/// Immutable LTL syntax tree node.  Atoms read both valuations of a letter:
/// one time step is one (input, output) pair.
struct formula {
    op kind;
    prop atom {side::input, -1};
    formula_ptr lhs;
    formula_ptr rhs;

    static formula_ptr make_true ();
    static formula_ptr make_false ();
    static formula_ptr make_atom (prop p);
    static formula_ptr make_unary (op k, formula_ptr sub);
    static formula_ptr make_binary (op k, formula_ptr l, formula_ptr r);

    bool is_unary () const;
    bool is_binary () const;
};

bool equal (const formula& a, const formula& b);
inline bool equal (const formula_ptr& a, const formula_ptr& b) { return equal (*a, *b); }

/// Total structural order, used to intern subformulas.
int compare (const formula& a, const formula& b);

/// Fully parenthesized rendering that parse_formula reads back.
std::string to_string (const formula& f, const alphabet& ab);
std::size_t size (const formula& f);

/// Implication and equivalence are expanded while parsing: a -> b becomes
/// !a | b and a <-> b becomes (!a | b) & (a | !b).
/// Grammar: true | false | ident | !f | f bin f | un f | (f), with
/// un in {G,F,X}, bin in {U,W,R,&,|,->,<->}.  Precedence (tightest first):
/// ! > X,G,F > U,W,R > & > | > -> > <->.  U/W/R and -> associate to the
/// right; & and | to the left.
formula_ptr parse_formula (std::string_view text, const alphabet& ab);

/// Negation normal form over {true, false, literals, &, |, X, U, R}.
formula_ptr to_nnf (const formula_ptr& f);

/// Ultimately periodic word prefix . loop^omega.
struct lasso_word {
    io_word prefix;
    io_word loop;
};

/// Exact LTL truth value of f on prefix . loop^omega.
bool eval_lasso (const formula& f, const lasso_word& w, const alphabet& ab);

}  // namespace synthlearn
