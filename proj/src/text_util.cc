#include "text_util.hh"

#include <cctype>
#include <charconv>

namespace synthlearn::detail {

std::string_view trim (std::string_view t) {
  while (!t.empty () && std::isspace (static_cast<unsigned char> (t.front ())))
    t.remove_prefix (1);
  while (!t.empty () && std::isspace (static_cast<unsigned char> (t.back ())))
    t.remove_suffix (1);
  return t;
}

std::vector<std::string> split_words (std::string_view t) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < t.size ()) {
    while (i < t.size () && (std::isspace (static_cast<unsigned char> (t[i])) || t[i] == ','))
      ++i;
    std::size_t j = i;
    while (j < t.size () && !std::isspace (static_cast<unsigned char> (t[j])) && t[j] != ',')
      ++j;
    if (j > i)
      out.emplace_back (t.substr (i, j - i));
    i = j;
  }
  return out;
}

namespace {

int to_int (std::string_view s, std::size_t line) {
  int v = 0;
  auto [p, ec] = std::from_chars (s.data (), s.data () + s.size (), v);
  if (ec != std::errc {} || p != s.data () + s.size ())
    throw parse_error ("expected an integer, got '" + std::string (s) + "'", line);
  return v;
}

}  // namespace

void header_reader::read_headers (const std::vector<std::string>& keys) {
  std::size_t line = 0, pos = 0;
  bool in_body = false;
  while (pos <= text_.size ()) {
    auto nl = text_.find ('\n', pos);
    auto raw = text_.substr (pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text_.size () + 1 : nl + 1;
    ++line;
    auto t = trim (raw);
    if (t.empty () || t.front () == ';')
      continue;
    auto colon = t.find (':');
    std::string key = colon == std::string_view::npos ? std::string {} : std::string (trim (t.substr (0, colon)));
    bool is_header = false;
    for (const auto& k : keys)
      if (k == key)
        is_header = true;
    if (is_header) {
      if (in_body)
        throw parse_error ("header '" + key + "' after transitions", line);
      if (has (key))
        throw parse_error ("duplicate header '" + key + "'", line);
      headers_[key] = {std::string (trim (t.substr (colon + 1))), line};
    } else {
      if (!in_body && colon != std::string_view::npos && t.find ("->") == std::string_view::npos)
        throw parse_error ("unknown header '" + key + "'", line);
      in_body = true;
      body_.push_back ({std::string (t), line});
    }
  }
}

const std::pair<std::string, std::size_t>& header_reader::get (const std::string& key) const {
  auto it = headers_.find (key);
  if (it == headers_.end ())
    throw parse_error ("missing header '" + key + ":'");
  return it->second;
}

std::size_t header_reader::line_of (const std::string& key) const { return has (key) ? get (key).second : 0; }

std::vector<std::string> header_reader::words (const std::string& key) const {
  return has (key) ? split_words (get (key).first) : std::vector<std::string> {};
}

int header_reader::integer (const std::string& key) const {
  const auto& [v, line] = get (key);
  return to_int (v, line);
}

std::vector<int> header_reader::integers (const std::string& key, int bound) const {
  const auto& [v, line] = get (key);
  std::vector<int> out;
  for (const auto& w : split_words (v)) {
    int x = to_int (w, line);
    if (x < 0 || x >= bound)
      throw parse_error ("state " + w + " out of range", line);
    out.push_back (x);
  }
  return out;
}

transition_line parse_transition_line (std::string_view text, std::size_t line, const alphabet& ab, int num_states) {
  transition_line t;
  auto arrow = text.find ("->");
  if (arrow == std::string_view::npos)
    throw parse_error ("expected 'src {in}/{out} -> dst'", line);
  auto lhs = trim (text.substr (0, arrow));
  auto rhs = trim (text.substr (arrow + 2));
  std::size_t sp = 0;
  while (sp < lhs.size () && !std::isspace (static_cast<unsigned char> (lhs[sp])))
    ++sp;
  t.source = to_int (lhs.substr (0, sp), line);
  if (t.source < 0 || t.source >= num_states)
    throw parse_error ("source state out of range", line);
  auto label = trim (lhs.substr (sp));
  auto slash = label.find ('/');
  if (slash == std::string_view::npos)
    throw parse_error ("expected '{in}/{out}' label", line);
  auto side_values = [&] (side s, std::string_view part) {
    try {
      return ab.parse_cube (s, part);
    } catch (const parse_error& e) {
      throw parse_error (e.what (), line);
    }
  };
  t.inputs = side_values (side::input, label.substr (0, slash));
  t.outputs = side_values (side::output, label.substr (slash + 1));
  for (const auto& w : split_words (rhs)) {
    int d = to_int (w, line);
    if (d < 0 || d >= num_states)
      throw parse_error ("target state " + w + " out of range", line);
    t.targets.push_back (d);
  }
  if (t.targets.empty ())
    throw parse_error ("transition without target", line);
  return t;
}

}  // namespace synthlearn::detail
