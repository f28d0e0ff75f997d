#include "synthlearn/alphabet.hh"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace synthlearn {

namespace {

std::string position_suffix (std::size_t line, std::size_t column) {
  if (line == 0)
    return {};
  std::ostringstream os;
  os << " (line " << line;
  if (column)
    os << ", column " << column;
  os << ")";
  return os.str ();
}

bool valid_identifier (const std::string& s) {
  if (s.empty () || !(std::isalpha (static_cast<unsigned char> (s[0])) || s[0] == '_'))
    return false;
  return std::all_of (s.begin (), s.end (),
                      [] (char c) { return std::isalnum (static_cast<unsigned char> (c)) || c == '_'; });
}

}  // namespace

parse_error::parse_error (const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error (what + position_suffix (line, column)), line_ (line), column_ (column) {}

alphabet::alphabet (std::vector<std::string> inputs, std::vector<std::string> outputs)
    : inputs_ (std::move (inputs)), outputs_ (std::move (outputs)) {
  std::sort (inputs_.begin (), inputs_.end ());
  std::sort (outputs_.begin (), outputs_.end ());
  std::set<std::string> seen;
  for (const auto* list : {&inputs_, &outputs_})
    for (const auto& n : *list) {
      if (!valid_identifier (n) || n == "true" || n == "false")
        throw parse_error ("invalid proposition name '" + n + "'");
      if (n.size () == 1 && std::string_view ("GFXUWR").find (n[0]) != std::string_view::npos)
        throw parse_error ("proposition name '" + n + "' clashes with a temporal operator");
      if (!seen.insert (n).second)
        throw parse_error ("proposition '" + n + "' declared twice");
    }
  if (inputs_.size () + outputs_.size () > static_cast<std::size_t> (max_props))
    throw parse_error ("too many propositions (at most 16 supported)");
}

std::optional<prop> alphabet::find (std::string_view name) const {
  for (side s : {side::input, side::output}) {
    const auto& ns = names (s);
    auto it = std::lower_bound (ns.begin (), ns.end (), name);
    if (it != ns.end () && *it == name)
      return prop {s, static_cast<int> (it - ns.begin ())};
  }
  return std::nullopt;
}

const std::string& alphabet::name (prop p) const { return names (p.owner).at (p.index); }

valuation alphabet::bit (prop p) const {
  auto n = names (p.owner).size ();
  return valuation {1} << (n - 1 - static_cast<std::size_t> (p.index));
}

bool alphabet::holds (prop p, letter l) const {
  valuation v = p.owner == side::input ? l.in : l.out;
  return (v & bit (p)) != 0;
}

std::string alphabet::format (side s, valuation v) const {
  std::string out = "{";
  const auto& ns = names (s);
  for (std::size_t j = 0; j < ns.size (); ++j) {
    if (j)
      out += ',';
    if (!(v & bit ({s, static_cast<int> (j)})))
      out += '!';
    out += ns[j];
  }
  return out + "}";
}

std::string alphabet::format_conjunction (side s, valuation v) const {
  const auto& ns = names (s);
  if (ns.empty ())
    return "true";
  std::string out;
  for (std::size_t j = 0; j < ns.size (); ++j) {
    if (j)
      out += " & ";
    if (!(v & bit ({s, static_cast<int> (j)})))
      out += '!';
    out += ns[j];
  }
  return out;
}

std::string alphabet::format (letter l) const { return format (side::input, l.in) + format (side::output, l.out); }

namespace {

std::string_view trim_space (std::string_view t) {
  while (!t.empty () && std::isspace (static_cast<unsigned char> (t.front ())))
    t.remove_prefix (1);
  while (!t.empty () && std::isspace (static_cast<unsigned char> (t.back ())))
    t.remove_suffix (1);
  return t;
}

}  // namespace

std::pair<valuation, valuation> alphabet::parse_literals (side s, std::string_view text) const {
  text = trim_space (text);
  if (text.size () < 2 || text.front () != '{' || text.back () != '}')
    throw parse_error ("expected '{...}' valuation, got '" + std::string (text) + "'");
  text = text.substr (1, text.size () - 2);
  valuation value = 0, mentioned = 0;
  while (!text.empty ()) {
    auto cut = text.find_first_of (",&");
    auto tok = trim_space (text.substr (0, cut));
    text = cut == std::string_view::npos ? std::string_view {} : text.substr (cut + 1);
    if (tok.empty () || tok == "true")
      continue;
    bool neg = tok.front () == '!';
    if (neg)
      tok = trim_space (tok.substr (1));
    auto p = find (tok);
    if (!p || p->owner != s)
      throw parse_error ("unknown " + std::string (s == side::input ? "input" : "output") + " proposition '" +
                         std::string (tok) + "'");
    valuation b = bit (*p);
    if ((mentioned & b) && ((value & b) != 0) == neg)
      throw parse_error ("contradictory literals for '" + std::string (tok) + "'");
    mentioned |= b;
    if (!neg)
      value |= b;
  }
  return {value, mentioned};
}

valuation alphabet::parse_valuation (side s, std::string_view text) const { return parse_literals (s, text).first; }

std::vector<valuation> alphabet::parse_cube (side s, std::string_view text) const {
  unsigned count = s == side::input ? input_count () : output_count ();
  std::vector<valuation> out;
  if (trim_space (text) == "*") {
    for (valuation v = 0; v < count; ++v)
      out.push_back (v);
    return out;
  }
  auto [value, mentioned] = parse_literals (s, text);
  for (valuation v = 0; v < count; ++v)
    if ((v & mentioned) == value)
      out.push_back (v);
  return out;
}

}  // namespace synthlearn
