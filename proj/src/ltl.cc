#include "synthlearn/ltl.hh"

#include <cctype>
#include <functional>

namespace synthlearn {

formula_ptr formula::make_true () {
  static const formula_ptr t = std::make_shared<const formula> (formula {op::true_, {side::input, -1}, nullptr, nullptr});
  return t;
}

formula_ptr formula::make_false () {
  static const formula_ptr f = std::make_shared<const formula> (formula {op::false_, {side::input, -1}, nullptr, nullptr});
  return f;
}

formula_ptr formula::make_atom (prop p) { return std::make_shared<const formula> (formula {op::atom, p, nullptr, nullptr}); }

formula_ptr formula::make_unary (op k, formula_ptr sub) {
  return std::make_shared<const formula> (formula {k, {side::input, -1}, std::move (sub), nullptr});
}

formula_ptr formula::make_binary (op k, formula_ptr l, formula_ptr r) {
  return std::make_shared<const formula> (formula {k, {side::input, -1}, std::move (l), std::move (r)});
}

bool formula::is_unary () const {
  return kind == op::not_ || kind == op::next || kind == op::eventually || kind == op::always;
}

bool formula::is_binary () const {
  return kind == op::and_ || kind == op::or_ || kind == op::until || kind == op::weak_until || kind == op::release;
}

int compare (const formula& a, const formula& b) {
  if (&a == &b)
    return 0;
  if (a.kind != b.kind)
    return a.kind < b.kind ? -1 : 1;
  if (a.kind == op::atom) {
    if (a.atom.owner != b.atom.owner)
      return a.atom.owner < b.atom.owner ? -1 : 1;
    return a.atom.index < b.atom.index ? -1 : (a.atom.index > b.atom.index ? 1 : 0);
  }
  if (a.lhs) {
    if (int c = compare (*a.lhs, *b.lhs))
      return c;
  }
  if (a.rhs)
    return compare (*a.rhs, *b.rhs);
  return 0;
}

bool equal (const formula& a, const formula& b) { return compare (a, b) == 0; }

std::size_t size (const formula& f) {
  std::size_t n = 1;
  if (f.lhs)
    n += size (*f.lhs);
  if (f.rhs)
    n += size (*f.rhs);
  return n;
}

std::string to_string (const formula& f, const alphabet& ab) {
  switch (f.kind) {
    case op::true_: return "true";
    case op::false_: return "false";
    case op::atom: return ab.name (f.atom);
    case op::not_: return "!" + to_string (*f.lhs, ab);
    case op::next: return "X(" + to_string (*f.lhs, ab) + ")";
    case op::eventually: return "F(" + to_string (*f.lhs, ab) + ")";
    case op::always: return "G(" + to_string (*f.lhs, ab) + ")";
    default: break;
  }
  const char* sym = "";
  switch (f.kind) {
    case op::and_: sym = " & "; break;
    case op::or_: sym = " | "; break;
    case op::until: sym = " U "; break;
    case op::weak_until: sym = " W "; break;
    case op::release: sym = " R "; break;
    default: break;
  }
  return "(" + to_string (*f.lhs, ab) + sym + to_string (*f.rhs, ab) + ")";
}

namespace {

enum class tok : std::uint8_t { ident, lparen, rparen, bang, and_, or_, implies, iff, end };

struct token {
    tok kind;
    std::string text;
    std::size_t column;
};

class formula_parser {
  public:
    formula_parser (std::string_view text, const alphabet& ab) : text_ (text), ab_ (ab) { advance (); }

    formula_ptr parse () {
      auto f = parse_iff ();
      if (cur_.kind != tok::end)
        fail ("unexpected '" + cur_.text + "'");
      return f;
    }

  private:
    [[noreturn]] void fail (const std::string& msg) const { throw parse_error ("formula: " + msg, 1, cur_.column); }

    void advance () {
      while (pos_ < text_.size () && std::isspace (static_cast<unsigned char> (text_[pos_])))
        ++pos_;
      std::size_t col = pos_ + 1;
      if (pos_ >= text_.size ()) {
        cur_ = {tok::end, "end of input", col};
        return;
      }
      auto rest = text_.substr (pos_);
      auto take = [&] (tok k, std::size_t n) {
        cur_ = {k, std::string (rest.substr (0, n)), col};
        pos_ += n;
      };
      if (rest.starts_with ("<->"))
        return take (tok::iff, 3);
      if (rest.starts_with ("->"))
        return take (tok::implies, 2);
      if (rest.starts_with ("&&") || rest.starts_with ("||"))
        return take (rest[0] == '&' ? tok::and_ : tok::or_, 2);
      char c = rest[0];
      if (c == '(')
        return take (tok::lparen, 1);
      if (c == ')')
        return take (tok::rparen, 1);
      if (c == '!' || c == '~')
        return take (tok::bang, 1);
      if (c == '&')
        return take (tok::and_, 1);
      if (c == '|')
        return take (tok::or_, 1);
      if (std::isalpha (static_cast<unsigned char> (c)) || c == '_') {
        std::size_t n = 1;
        while (n < rest.size () && (std::isalnum (static_cast<unsigned char> (rest[n])) || rest[n] == '_'))
          ++n;
        return take (tok::ident, n);
      }
      cur_ = {tok::end, std::string (1, c), col};
      fail ("unexpected character '" + std::string (1, c) + "'");
    }

    bool at_ident (std::string_view s) const { return cur_.kind == tok::ident && cur_.text == s; }

    formula_ptr parse_iff () {
      auto l = parse_implies ();
      while (cur_.kind == tok::iff) {
        advance ();
        auto r = parse_implies ();
        l = formula::make_binary (op::and_, formula::make_binary (op::or_, formula::make_unary (op::not_, l), r),
                                  formula::make_binary (op::or_, l, formula::make_unary (op::not_, r)));
      }
      return l;
    }

    formula_ptr parse_implies () {
      auto l = parse_or ();
      if (cur_.kind == tok::implies) {
        advance ();
        auto r = parse_implies ();
        return formula::make_binary (op::or_, formula::make_unary (op::not_, l), r);
      }
      return l;
    }

    formula_ptr parse_or () {
      auto l = parse_and ();
      while (cur_.kind == tok::or_) {
        advance ();
        l = formula::make_binary (op::or_, l, parse_and ());
      }
      return l;
    }

    formula_ptr parse_and () {
      auto l = parse_temporal ();
      while (cur_.kind == tok::and_) {
        advance ();
        l = formula::make_binary (op::and_, l, parse_temporal ());
      }
      return l;
    }

    formula_ptr parse_temporal () {
      auto l = parse_unary ();
      for (auto [name, k] : {std::pair {"U", op::until}, {"W", op::weak_until}, {"R", op::release}})
        if (at_ident (name) && !ab_.find (name)) {
          advance ();
          return formula::make_binary (k, l, parse_temporal ());
        }
      return l;
    }

    static bool unary_chain (std::string_view s) {
      return !s.empty () && s.find_first_not_of ("GFX") == std::string_view::npos;
    }

    formula_ptr parse_unary () {
      if (cur_.kind == tok::bang) {
        advance ();
        return formula::make_unary (op::not_, parse_unary ());
      }
      if (cur_.kind == tok::ident && unary_chain (cur_.text) && !ab_.find (cur_.text)) {
        std::string ops = cur_.text;
        advance ();
        auto sub = parse_unary ();
        for (auto it = ops.rbegin (); it != ops.rend (); ++it)
          sub = formula::make_unary (*it == 'G' ? op::always : (*it == 'F' ? op::eventually : op::next), sub);
        return sub;
      }
      return parse_primary ();
    }

    formula_ptr parse_primary () {
      if (cur_.kind == tok::lparen) {
        advance ();
        auto f = parse_iff ();
        if (cur_.kind != tok::rparen)
          fail ("expected ')'");
        advance ();
        return f;
      }
      if (cur_.kind != tok::ident)
        fail ("expected a formula, got '" + cur_.text + "'");
      std::string name = cur_.text;
      if (name == "true" || name == "false") {
        advance ();
        return name == "true" ? formula::make_true () : formula::make_false ();
      }
      auto p = ab_.find (name);
      if (!p)
        fail ("undeclared proposition '" + name + "'");
      advance ();
      return formula::make_atom (*p);
    }

    std::string_view text_;
    const alphabet& ab_;
    std::size_t pos_ = 0;
    token cur_ {tok::end, "", 0};
};

formula_ptr nnf (const formula_ptr& f, bool negate) {
  using F = formula;
  switch (f->kind) {
    case op::true_: return negate ? F::make_false () : f;
    case op::false_: return negate ? F::make_true () : f;
    case op::atom: return negate ? F::make_unary (op::not_, f) : f;
    case op::not_: return nnf (f->lhs, !negate);
    case op::and_:
      return F::make_binary (negate ? op::or_ : op::and_, nnf (f->lhs, negate), nnf (f->rhs, negate));
    case op::or_:
      return F::make_binary (negate ? op::and_ : op::or_, nnf (f->lhs, negate), nnf (f->rhs, negate));
    case op::next: return F::make_unary (op::next, nnf (f->lhs, negate));
    case op::until:
      return F::make_binary (negate ? op::release : op::until, nnf (f->lhs, negate), nnf (f->rhs, negate));
    case op::release:
      return F::make_binary (negate ? op::until : op::release, nnf (f->lhs, negate), nnf (f->rhs, negate));
    case op::weak_until:
      // a W b == b R (a | b);  !(a W b) == !b U (!a & !b)
      if (negate)
        return F::make_binary (op::until, nnf (f->rhs, true),
                               F::make_binary (op::and_, nnf (f->lhs, true), nnf (f->rhs, true)));
      return F::make_binary (op::release, nnf (f->rhs, false),
                             F::make_binary (op::or_, nnf (f->lhs, false), nnf (f->rhs, false)));
    case op::eventually:
      return negate ? F::make_binary (op::release, F::make_false (), nnf (f->lhs, true))
                    : F::make_binary (op::until, F::make_true (), nnf (f->lhs, false));
    case op::always:
      return negate ? F::make_binary (op::until, F::make_true (), nnf (f->lhs, true))
                    : F::make_binary (op::release, F::make_false (), nnf (f->lhs, false));
  }
  return f;
}

}  // namespace

formula_ptr parse_formula (std::string_view text, const alphabet& ab) { return formula_parser (text, ab).parse (); }

formula_ptr to_nnf (const formula_ptr& f) { return nnf (f, false); }

bool eval_lasso (const formula& f, const lasso_word& w, const alphabet& ab) {
  const std::size_t stem = w.prefix.size ();
  const std::size_t n = stem + w.loop.size ();
  auto at = [&] (std::size_t j) -> const letter& { return j < stem ? w.prefix[j] : w.loop[j - stem]; };
  auto next = [&] (std::size_t j) { return j + 1 < n ? j + 1 : stem; };

  // Truth value of every subformula at every lasso position.  Temporal
  // operators are solved as fixpoints of their one-step unfolding.
  std::function<std::vector<char> (const formula&)> eval = [&] (const formula& g) {
    std::vector<char> v (n, 0);
    auto fix = [&] (const std::vector<char>& now, const std::vector<char>& stay, bool greatest) {
      std::vector<char> val (n, greatest ? 1 : 0);
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = n; j-- > 0;) {
          char nv = now[j] || (stay[j] && val[next (j)]);
          if (nv != val[j]) {
            val[j] = nv;
            changed = true;
          }
        }
      }
      return val;
    };
    switch (g.kind) {
      case op::true_: std::fill (v.begin (), v.end (), 1); return v;
      case op::false_: return v;
      case op::atom:
        for (std::size_t j = 0; j < n; ++j)
          v[j] = ab.holds (g.atom, at (j));
        return v;
      case op::not_: {
        auto a = eval (*g.lhs);
        for (std::size_t j = 0; j < n; ++j)
          v[j] = !a[j];
        return v;
      }
      case op::and_:
      case op::or_: {
        auto a = eval (*g.lhs), b = eval (*g.rhs);
        for (std::size_t j = 0; j < n; ++j)
          v[j] = g.kind == op::and_ ? (a[j] && b[j]) : (a[j] || b[j]);
        return v;
      }
      case op::next: {
        auto a = eval (*g.lhs);
        for (std::size_t j = 0; j < n; ++j)
          v[j] = a[next (j)];
        return v;
      }
      case op::until: return fix (eval (*g.rhs), eval (*g.lhs), false);
      case op::weak_until: return fix (eval (*g.rhs), eval (*g.lhs), true);
      case op::eventually: return fix (eval (*g.lhs), std::vector<char> (n, 1), false);
      case op::always: {
        auto a = eval (*g.lhs);
        return fix (std::vector<char> (n, 0), a, true);
      }
      case op::release: {
        // a R b == b & (a | X(a R b))
        auto a = eval (*g.lhs), b = eval (*g.rhs);
        std::vector<char> val (n, 1);
        for (bool changed = true; changed;) {
          changed = false;
          for (std::size_t j = n; j-- > 0;) {
            char nv = b[j] && (a[j] || val[next (j)]);
            if (nv != val[j]) {
              val[j] = nv;
              changed = true;
            }
          }
        }
        return val;
      }
    }
    return v;
  };
  if (w.loop.empty ())
    throw std::invalid_argument ("lasso loop must be nonempty");
  return eval (f)[0] != 0;
}

}  // namespace synthlearn
