#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "synthlearn/automata.hh"

namespace synthlearn {

/// Map from automaton states to {-1, 0, ..., k+1}: the largest number of
/// counted states seen along a run prefix ending in the state, -1 when no
/// run prefix ends there.  k is kept by the caller.
class counting_function {
  public:
    using value_type = std::int16_t;

    counting_function () = default;
    explicit counting_function (std::size_t n, value_type fill = -1) : v_ (n, fill) {}
    explicit counting_function (std::vector<value_type> v) : v_ (std::move (v)) {}

    std::size_t size () const { return v_.size (); }
    value_type operator[] (std::size_t q) const { return v_[q]; }
    value_type& operator[] (std::size_t q) { return v_[q]; }
    const std::vector<value_type>& values () const { return v_; }

    friend bool operator== (const counting_function&, const counting_function&) = default;
    /// Lexicographic order, used only for canonical listings.
    friend auto operator<=> (const counting_function&, const counting_function&) = default;

  private:
    std::vector<value_type> v_;
};

counting_function cf_initial (const ucw& a, int k);
counting_function cf_constant (const ucw& a, int value);
counting_function cf_step (const ucw& a, int k, const counting_function& f, unsigned letter_index);
inline counting_function cf_step (const ucw& a, int k, const counting_function& f, letter l) {
  return cf_step (a, k, f, a.ab.index (l));
}

bool cf_leq (const counting_function& f, const counting_function& g);
counting_function cf_join (const counting_function& f, const counting_function& g);
counting_function cf_meet (const counting_function& f, const counting_function& g);
bool cf_is_unsafe (const counting_function& f, int k);

/// The largest g with cf_step(g, l) below f; f must be safe.
counting_function cf_pre_max (const ucw& a, int k, const counting_function& f, unsigned letter_index);

/// "q0:0 q1:-1 | k=2"
std::string cf_dump (const counting_function& f, int k);

/// Set of pairwise incomparable counting functions standing for its
/// downward closure.
class cf_antichain {
  public:
    /// Adds f unless it is below an element; drops elements below f.
    /// Returns whether f was added.
    bool insert (const counting_function& f);
    bool member_below (const counting_function& f) const;

    const std::vector<counting_function>& elements () const { return elems_; }
    std::size_t size () const { return elems_.size (); }
    bool empty () const { return elems_.empty (); }
    /// Elements in lexicographic order.
    std::vector<counting_function> sorted () const;

    /// Same downward closure (antichains are canonical, so same elements).
    friend bool operator== (const cf_antichain& a, const cf_antichain& b) { return a.sorted () == b.sorted (); }

  private:
    std::vector<counting_function> elems_;
};

cf_antichain antichain_insert (cf_antichain ac, const counting_function& f);
inline bool antichain_member_below (const cf_antichain& ac, const counting_function& f) { return ac.member_below (f); }

}  // namespace synthlearn
