#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "synthlearn/alphabet.hh"

namespace synthlearn::detail {

std::string_view trim (std::string_view t);
std::vector<std::string> split_words (std::string_view t);

/// Line-oriented reader for the automaton and machine text formats: header
/// lines "key: value" followed by body lines.  Blank lines and lines whose
/// first non-blank character is ';' are skipped.
class header_reader {
  public:
    struct body_line {
        std::string text;
        std::size_t line;
    };

    explicit header_reader (std::string_view text) : text_ (text) {}

    /// Splits the text; headers must precede the body and use the given keys.
    void read_headers (const std::vector<std::string>& keys);

    bool has (const std::string& key) const { return headers_.count (key) != 0; }
    std::size_t line_of (const std::string& key) const;
    std::vector<std::string> words (const std::string& key) const;
    int integer (const std::string& key) const;
    /// Integers in [0, bound).
    std::vector<int> integers (const std::string& key, int bound) const;
    const std::vector<body_line>& body () const { return body_; }

  private:
    const std::pair<std::string, std::size_t>& get (const std::string& key) const;

    std::string_view text_;
    std::map<std::string, std::pair<std::string, std::size_t>> headers_;
    std::vector<body_line> body_;
};

/// "src {in}/{out} -> d1,d2" where either side may be "*" (every valuation).
struct transition_line {
    int source = 0;
    std::vector<valuation> inputs;
    std::vector<valuation> outputs;
    std::vector<int> targets;
};

transition_line parse_transition_line (std::string_view text, std::size_t line, const alphabet& ab, int num_states);

}  // namespace synthlearn::detail
