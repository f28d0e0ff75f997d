#include "synthlearn/problem.hh"

#include <fstream>
#include <sstream>

#include "text_util.hh"

namespace synthlearn {

namespace {

/// Constraint of one valuation block: bits forced to 1 and bits mentioned.
struct block {
    valuation value = 0;
    valuation mentioned = 0;
};

block parse_block (std::string_view text, side s, const alphabet& ab, std::size_t line, std::size_t column) {
  block b;
  std::size_t pos = 0;
  while (pos <= text.size ()) {
    auto cut = text.find_first_of (",&", pos);
    auto tok = detail::trim (text.substr (pos, cut == std::string_view::npos ? std::string_view::npos : cut - pos));
    std::size_t col = column + pos;
    pos = cut == std::string_view::npos ? text.size () + 1 : cut + 1;
    if (tok.empty () || tok == "true")
      continue;
    bool neg = tok.front () == '!';
    if (neg)
      tok = detail::trim (tok.substr (1));
    auto p = ab.find (tok);
    if (!p)
      throw parse_error ("unknown proposition '" + std::string (tok) + "'", line, col);
    if (p->owner != s)
      throw parse_error ("proposition '" + std::string (tok) + "' belongs to the " +
                             (p->owner == side::input ? "inputs" : "outputs"),
                         line, col);
    valuation bit = ab.bit (*p);
    bool val = !neg;
    if ((b.mentioned & bit) && (((b.value & bit) != 0) != val))
      throw parse_error ("contradictory literals for '" + std::string (tok) + "'", line, col);
    b.mentioned |= bit;
    if (val)
      b.value |= bit;
  }
  return b;
}

std::vector<valuation> completions (const block& b, unsigned count) {
  std::vector<valuation> out;
  for (valuation v = 0; v < count; ++v)
    if ((v & b.mentioned) == b.value)
      out.push_back (v);
  return out;
}

std::vector<letter> parse_step (std::string_view text, const alphabet& ab, std::size_t line, std::size_t column) {
  std::vector<std::pair<std::string_view, std::size_t>> blocks;
  std::size_t pos = 0;
  while (blocks.size () < 3) {
    while (pos < text.size () && (std::isspace (static_cast<unsigned char> (text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos >= text.size ())
      break;
    if (text[pos] != '{')
      throw parse_error ("expected '{'", line, column + pos);
    auto close = text.find ('}', pos);
    if (close == std::string_view::npos)
      throw parse_error ("unterminated '{'", line, column + pos);
    blocks.emplace_back (text.substr (pos + 1, close - pos - 1), column + pos + 1);
    pos = close + 1;
  }
  if (blocks.size () != 2)
    throw parse_error ("a step needs one input block and one output block", line, column);
  auto in = parse_block (blocks[0].first, side::input, ab, line, blocks[0].second);
  auto out = parse_block (blocks[1].first, side::output, ab, line, blocks[1].second);
  std::vector<letter> letters;
  for (valuation i : completions (in, ab.input_count ()))
    for (valuation o : completions (out, ab.output_count ()))
      letters.push_back ({i, o});
  return letters;
}

}  // namespace

example_set parse_traces (std::string_view text, const alphabet& ab) {
  example_set out;
  std::size_t line = 0, pos = 0;
  while (pos < text.size ()) {
    auto nl = text.find ('\n', pos);
    auto raw = text.substr (pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size () : nl + 1;
    ++line;
    auto t = detail::trim (raw);
    if (t.empty () || t.starts_with ("//") || t.front () == ';')
      continue;
    std::vector<io_word> words {io_word {}};
    std::size_t start = 0;
    while (start <= raw.size ()) {
      auto hash = raw.find ('#', start);
      auto part = raw.substr (start, hash == std::string_view::npos ? std::string_view::npos : hash - start);
      auto letters = parse_step (part, ab, line, start + 1);
      std::vector<io_word> next;
      for (const auto& w : words)
        for (const auto& l : letters) {
          next.push_back (w);
          next.back ().push_back (l);
        }
      words = std::move (next);
      start = hash == std::string_view::npos ? raw.size () + 1 : hash + 1;
    }
    for (auto& w : words)
      out.push_back (std::move (w));
  }
  return out;
}

std::string read_file (const std::filesystem::path& file) {
  std::ifstream in (file, std::ios::binary);
  if (!in)
    throw std::runtime_error ("cannot open '" + file.string () + "'");
  std::ostringstream os;
  os << in.rdbuf ();
  return os.str ();
}

problem parse_problem (std::string_view text, const std::filesystem::path& base_dir) {
  problem p;
  std::vector<std::string> ins, outs;
  std::size_t line = 0, pos = 0;
  while (pos < text.size ()) {
    auto nl = text.find ('\n', pos);
    auto raw = text.substr (pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size () : nl + 1;
    ++line;
    auto t = detail::trim (raw);
    if (t.empty () || t.starts_with ("//") || t.front () == ';')
      continue;
    auto colon = t.find (':');
    if (colon == std::string_view::npos)
      throw parse_error ("expected 'key: value'", line);
    auto key = detail::trim (t.substr (0, colon));
    auto value = std::string (detail::trim (t.substr (colon + 1)));
    if (key == "inputs")
      for (auto& w : detail::split_words (value))
        ins.push_back (w);
    else if (key == "outputs")
      for (auto& w : detail::split_words (value))
        outs.push_back (w);
    else if (key == "formula")
      p.formulas.push_back (value);
    else if (key == "assume")
      p.assumptions.push_back (value);
    else if (key == "automaton") {
      if (p.automaton)
        throw parse_error ("more than one automaton", line);
      p.automaton = base_dir / value;
    } else if (key == "traces")
      p.trace_files.push_back (base_dir / value);
    else if (key == "trace")
      p.inline_traces.push_back (value);
    else if (key == "max_k") {
      try {
        p.max_k = std::stoi (value);
      } catch (const std::exception&) {
        throw parse_error ("max_k expects an integer", line);
      }
    } else
      throw parse_error ("unknown key '" + std::string (key) + "'", line);
  }
  if (p.automaton && (!p.formulas.empty () || !p.assumptions.empty ()))
    throw parse_error ("a problem uses either formulas or an automaton, not both");
  if (p.automaton) {
    auto a = parse_automaton (read_file (*p.automaton));
    p.ab = a.ab;
    if (!ins.empty () || !outs.empty ())
      if (!(alphabet (ins, outs) == a.ab))
        throw parse_error ("propositions differ from those of the automaton");
  } else
    p.ab = alphabet (ins, outs);
  return p;
}

problem load_problem (const std::filesystem::path& file) { return parse_problem (read_file (file), file.parent_path ()); }

std::optional<formula_ptr> problem_formula (const problem& p) {
  if (p.automaton)
    return std::nullopt;
  auto conj = [&] (const std::vector<std::string>& fs) {
    formula_ptr r;
    for (const auto& f : fs) {
      auto g = parse_formula (f, p.ab);
      r = r ? formula::make_binary (op::and_, r, g) : g;
    }
    return r ? r : formula::make_true ();
  };
  auto guarantee = conj (p.formulas);
  if (p.assumptions.empty ())
    return guarantee;
  return formula::make_binary (op::or_, formula::make_unary (op::not_, conj (p.assumptions)), guarantee);
}

std::shared_ptr<const ucw> problem_automaton (const problem& p, const translation_options& opts) {
  if (p.automaton)
    return std::make_shared<const ucw> (parse_automaton (read_file (*p.automaton)));
  return std::make_shared<const ucw> (ucw_of_formula (*problem_formula (p), p.ab, opts));
}

example_set problem_examples (const problem& p) {
  example_set e;
  for (const auto& f : p.trace_files) {
    example_set part;
    try {
      part = parse_traces (read_file (f), p.ab);
    } catch (const parse_error& err) {
      throw parse_error (f.string () + ": " + err.what ());
    }
    for (auto& w : part)
      e.push_back (std::move (w));
  }
  for (const auto& t : p.inline_traces)
    for (auto& w : parse_traces (t, p.ab))
      e.push_back (std::move (w));
  return e;
}

}  // namespace synthlearn
