#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace synthlearn {

/// Raised on malformed user input (formulas, traces, automaton/machine files).
class parse_error : public std::runtime_error {
  public:
    parse_error (const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line () const { return line_; }
    std::size_t column () const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

enum class side : std::uint8_t { input, output };

/// Atomic proposition, referenced by its side and its rank in the
/// alphabetically sorted list of propositions of that side.
struct prop {
    side owner;
    int index;
    friend bool operator== (const prop&, const prop&) = default;
};

/// A valuation of one side is a bitmask.  Proposition of rank j among n
/// props is stored at bit (n - 1 - j), so that the integer order of
/// valuations is the lexicographic order of characteristic vectors over
/// the sorted proposition names (absent < present).
using valuation = std::uint32_t;

/// One synchronous step: an input valuation followed by an output valuation.
struct letter {
    valuation in = 0;
    valuation out = 0;
    friend auto operator<=> (const letter&, const letter&) = default;
};

using io_word = std::vector<letter>;

/// Proposition universe of a problem instance.  Letters are enumerated
/// explicitly: index(l) = l.in * output_count() + l.out.
class alphabet {
  public:
    static constexpr int max_props = 16;

    alphabet () = default;
    alphabet (std::vector<std::string> inputs, std::vector<std::string> outputs);

    const std::vector<std::string>& inputs () const { return inputs_; }
    const std::vector<std::string>& outputs () const { return outputs_; }

    int num_input_props () const { return static_cast<int> (inputs_.size ()); }
    int num_output_props () const { return static_cast<int> (outputs_.size ()); }

    unsigned input_count () const { return 1u << inputs_.size (); }
    unsigned output_count () const { return 1u << outputs_.size (); }
    unsigned letter_count () const { return input_count () * output_count (); }

    unsigned index (letter l) const { return l.in * output_count () + l.out; }
    letter letter_at (unsigned idx) const { return {idx / output_count (), idx % output_count ()}; }

    std::optional<prop> find (std::string_view name) const;
    const std::string& name (prop p) const;

    valuation bit (prop p) const;
    bool holds (prop p, letter l) const;

    /// "{r1,!r2}" style rendering listing every proposition of the side.
    std::string format (side s, valuation v) const;
    /// "r1 & !r2" style conjunction of literals; "true" when the side is empty.
    std::string format_conjunction (side s, valuation v) const;
    std::string format (letter l) const;

    /// Parses "{a,b}" (exactly the listed props hold) or "{a,!b}" (full
    /// literal list).  Unlisted props are false.
    valuation parse_valuation (side s, std::string_view text) const;

    /// Parses a possibly partial "{a,!b}" set: every valuation agreeing with
    /// the listed literals, in increasing order.  "*" is every valuation.
    std::vector<valuation> parse_cube (side s, std::string_view text) const;

    friend bool operator== (const alphabet&, const alphabet&) = default;

  private:
    const std::vector<std::string>& names (side s) const { return s == side::input ? inputs_ : outputs_; }
    /// Bits set to true and bits mentioned by a literal list.
    std::pair<valuation, valuation> parse_literals (side s, std::string_view text) const;

    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
};

}  // namespace synthlearn
