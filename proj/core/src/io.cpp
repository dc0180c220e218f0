#include "polyform/io.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "json_detail.hpp"
#include "polyform/errors.hpp"

namespace polyform {

namespace {

const char* kXAlias[3] = {"x", "y", "z"};
const char* kUAlias[3] = {"u", "v", "w"};

}  // namespace

std::string variable_name(CoordSystem coords, int i, int nvars) {
  if (i < 1 || i > nvars)
    throw DimensionError("variable_name: index out of range");
  if (nvars == 3)
    return (coords == CoordSystem::x ? kXAlias : kUAlias)[i - 1];
  return (coords == CoordSystem::x ? "x" : "u") + std::to_string(i);
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

struct TermRef {
  const Monomial* m;
  IndexSet I;
  const Rational* c;
};

std::string render_term(const TermRef& t, CoordSystem coords, int nv,
                        bool* negative) {
  *negative = *t.c < 0;
  const Rational mag = *negative ? Rational(-*t.c) : *t.c;
  std::vector<std::string> parts;
  if (mag != 1 || (t.m->is_constant() && t.I.empty()))
    parts.push_back(rational_to_string(mag));
  for (int i = 1; i <= nv; ++i) {
    const int e = t.m->exponent(i);
    if (e == 0) continue;
    std::string v = variable_name(coords, i, nv);
    parts.push_back(e == 1 ? v : v + "^" + std::to_string(e));
  }
  if (!t.I.empty()) {
    std::string d;
    for (int i : t.I.indices()) {
      if (!d.empty()) d += "^";
      d += "d" + variable_name(coords, i, nv);
    }
    parts.push_back(d);
  }
  std::string body;
  for (const auto& p : parts) {
    if (!body.empty()) body += "*";
    body += p;
  }
  return body;
}

}  // namespace

std::string format_form(const Form& a, CoordSystem coords) {
  if (a.is_zero()) return "0";
  const int nv = a.ambient_dim();
  std::vector<TermRef> terms;
  for (const auto& [I, poly] : a.coeffs())
    for (const auto& [m, c] : poly.terms()) terms.push_back({&m, I, &c});
  // Display order: coefficient monomial first (graded lex, high degree
  // first), index set second. The maps iterate each key once, so the sort
  // sees no equal pairs.
  std::sort(terms.begin(), terms.end(),
            [](const TermRef& s, const TermRef& t) {
              MonomialOrder mo;
              if (mo(*s.m, *t.m)) return true;
              if (mo(*t.m, *s.m)) return false;
              return IndexSetOrder()(s.I, t.I);
            });
  std::string out;
  for (const auto& t : terms) {
    bool neg = false;
    const std::string body = render_term(t, coords, nv, &neg);
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int pos;  // 1-based character offset
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int pos = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, s.substr(i, j - i), pos});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), pos});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '/': k = Tok::slash; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        throw ParseError("parse error at position " + std::to_string(pos) +
                         ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), pos});
    ++i;
  }
  out.push_back({Tok::end, "", static_cast<int>(s.size()) + 1});
  return out;
}

struct Name {
  bool differential;
  CoordSystem cs;
  int index;
};

// Classify an identifier against the variable grammar for nv coordinates.
// Aliases x,y,z / u,v,w apply exactly when nv = 3; elsewhere names are
// x<digit> / u<digit> with digit 1..9. A leading 'd' marks a differential.
std::optional<Name> classify(const std::string& word, int nv) {
  std::string s = word;
  bool diff = false;
  if (s.size() >= 2 && s[0] == 'd') {
    diff = true;
    s = s.substr(1);
  }
  if (s.empty()) return std::nullopt;
  if (nv == 3 && s.size() == 1) {
    static const std::string xs = "xyz", us = "uvw";
    size_t px = xs.find(s[0]);
    if (px != std::string::npos)
      return Name{diff, CoordSystem::x, static_cast<int>(px) + 1};
    size_t pu = us.find(s[0]);
    if (pu != std::string::npos)
      return Name{diff, CoordSystem::u, static_cast<int>(pu) + 1};
    return std::nullopt;
  }
  if (s.size() == 2 && (s[0] == 'x' || s[0] == 'u') && s[1] >= '1' && s[1] <= '9')
    return Name{diff, s[0] == 'x' ? CoordSystem::x : CoordSystem::u, s[1] - '0'};
  return std::nullopt;
}

class Parser {
 public:
  Parser(const std::vector<Token>& ts, int nv) : ts_(ts), nv_(nv) {}

  Form run() {
    Form f = expr();
    if (peek().kind != Tok::end)
      fail(peek(), "unexpected trailing input '" + peek().text + "'");
    return f;
  }

  std::optional<CoordSystem> coords() const { return coords_; }

 private:
  const Token& peek(int ahead = 0) const {
    const size_t j = i_ + ahead;
    return ts_[j < ts_.size() ? j : ts_.size() - 1];
  }
  const Token& take() { return ts_[i_ < ts_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    throw ParseError("parse error at position " + std::to_string(t.pos) + ": " + what);
  }

  void record_coords(const Token& t, CoordSystem cs) {
    if (coords_ && *coords_ != cs)
      throw CoordinateError(
          "expression mixes x- and u-coordinates (position " +
          std::to_string(t.pos) + ")");
    coords_ = cs;
  }

  Form expr() {
    int sign = 1;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus)
      sign = take().kind == Tok::minus ? -1 : 1;
    Form f = term() * Rational(sign);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      const Form g = term();
      f = minus ? f - g : f + g;
    }
    return f;
  }

  Form term() {
    Form f = power();
    while (peek().kind == Tok::star || peek().kind == Tok::caret) {
      take();
      f = wedge(f, power());
    }
    return f;
  }

  // primary, optionally raised to an integer power. The power reading of
  // '^' applies only to a bare variable with an integer literal exponent;
  // an integer exponent on anything else is an error, and every other '^'
  // is left for the term loop to treat as a wedge.
  Form power() {
    bool bare_var = false;
    int var = 0;
    Form f = primary(&bare_var, &var);
    if (peek().kind == Tok::caret && peek(1).kind == Tok::number) {
      const Token& caret = take();
      const Token& e = take();
      if (!bare_var)
        fail(caret, "integer exponent requires a coordinate variable on the left");
      const Int big(e.text);
      if (big > 64) fail(e, "exponent too large");
      const int exp = big.convert_to<int>();
      f = Form::from_scalar(Polynomial::variable(nv_, var).pow(exp));
    }
    return f;
  }

  Form primary(bool* bare_var, int* var) {
    *bare_var = false;
    const Token& t = take();
    switch (t.kind) {
      case Tok::number: {
        Int num(t.text);
        Int den(1);
        if (peek().kind == Tok::slash) {
          take();
          const Token& d = peek();
          if (d.kind != Tok::number) fail(d, "expected a denominator");
          take();
          den = Int(d.text);
          if (den == 0) fail(d, "zero denominator");
        }
        return Form::from_scalar(
            Polynomial::constant(nv_, make_rational(num, den)));
      }
      case Tok::ident: {
        const auto name = classify(t.text, nv_);
        if (!name) fail(t, "unknown name '" + t.text + "'");
        if (name->index > nv_)
          fail(t, "variable '" + t.text + "' out of range for n = " +
                      std::to_string(nv_ - 1));
        record_coords(t, name->cs);
        if (name->differential)
          return Form::basis_covector(nv_, IndexSet{name->index});
        *bare_var = true;
        *var = name->index;
        return Form::from_scalar(Polynomial::variable(nv_, name->index));
      }
      case Tok::lparen: {
        Form f = expr();
        if (peek().kind != Tok::rparen) fail(peek(), "expected ')'");
        take();
        return f;
      }
      default:
        fail(t, t.kind == Tok::end ? "unexpected end of input"
                                   : "unexpected '" + t.text + "'");
    }
  }

  const std::vector<Token>& ts_;
  size_t i_ = 0;
  int nv_;
  std::optional<CoordSystem> coords_;
};

}  // namespace

FormExpression parse_form(const std::string& text, int n) {
  if (n < 1 || n > 8)
    throw UsageError("parse_form: n must be in 1..8 (variables x1..x9)");
  const auto tokens = lex(text);
  if (tokens.size() == 1)
    throw ParseError("parse error at position 1: empty expression");
  Parser p(tokens, n + 1);
  Form f = p.run();
  return FormExpression{text, std::move(f), p.coords()};
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

ordered_json form_json(const Form& a) {
  ordered_json doc = ordered_json::array();
  for (const auto& [I, poly] : a.coeffs()) {
    ordered_json entry;
    entry["indices"] = I.indices();
    ordered_json coeff = ordered_json::array();
    for (const auto& [m, c] : poly.terms()) {
      ordered_json term;
      term["exps"] = m.exponents();
      term["num"] = numerator(c).str();
      term["den"] = denominator(c).str();
      coeff.push_back(std::move(term));
    }
    entry["coeff"] = std::move(coeff);
    doc.push_back(std::move(entry));
  }
  return doc;
}

}  // namespace detail

std::string form_to_json(const Form& a) { return detail::form_json(a).dump(); }

}  // namespace polyform
