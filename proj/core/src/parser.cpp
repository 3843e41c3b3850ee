#include "uplogic/parser.hpp"

#include <cctype>

namespace uplogic {

namespace {

enum class Tok {
  Ident,
  Int,
  True,
  False,
  LParen,
  RParen,
  Tilde,
  Amp,
  Pipe,
  Arrow,   // =>
  DArrow,  // <=>
  Ge,
  Le,
  Gt,
  Lt,
  Eq,
  Plus,
  Minus,
  Slash,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  BigInt value;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.col, msg);
  }

 private:
  void advance() {
    skip_ws();
    tok_ = Token{Tok::End, "", 0, line_, col_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
        name += get();
      tok_.kind = name == "true"    ? Tok::True
                  : name == "false" ? Tok::False
                                    : Tok::Ident;
      tok_.text = std::move(name);
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      BigInt v = 0;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
        v = v * 10 + (get() - '0');
      tok_.kind = Tok::Int;
      tok_.value = v;
      return;
    }
    switch (get()) {
      case '(':
        tok_.kind = Tok::LParen;
        return;
      case ')':
        tok_.kind = Tok::RParen;
        return;
      case '~':
        tok_.kind = Tok::Tilde;
        return;
      case '&':
        tok_.kind = Tok::Amp;
        return;
      case '|':
        tok_.kind = Tok::Pipe;
        return;
      case '+':
        tok_.kind = Tok::Plus;
        return;
      case '-':
        tok_.kind = Tok::Minus;
        return;
      case '/':
        tok_.kind = Tok::Slash;
        return;
      case '>':
        tok_.kind = eat('=') ? Tok::Ge : Tok::Gt;
        return;
      case '<':
        if (eat('=')) {
          tok_.kind = eat('>') ? Tok::DArrow : Tok::Le;
        } else {
          tok_.kind = Tok::Lt;
        }
        return;
      case '=':
        tok_.kind = eat('>') ? Tok::Arrow : Tok::Eq;
        return;
      default:
        throw ParseError(tok_.line, tok_.col,
                         std::string("unexpected character '") +
                             text_[pos_ - 1] + "'");
    }
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace((unsigned char)c)) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  char get() {
    ++col_;
    return text_[pos_++];
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      get();
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  LPtr parse_formula() {
    LPtr f = l_or_level();
    expect_end();
    return f;
  }

  PropPtr parse_proposition() {
    PropPtr p = prop_iff();
    expect_end();
    return p;
  }

 private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End) lex_.fail("trailing input");
  }

  bool eat(Tok k) {
    if (lex_.peek().kind == k) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expect(Tok k, const char* what) {
    if (!eat(k)) lex_.fail(std::string("expected ") + what);
  }

  // ---- likelihood level ----

  LPtr l_or_level() {
    LPtr f = l_and_level();
    while (eat(Tok::Pipe)) f = l_or(f, l_and_level());
    return f;
  }

  LPtr l_and_level() {
    LPtr f = l_unary();
    while (eat(Tok::Amp)) f = l_and(f, l_unary());
    return f;
  }

  LPtr l_unary() {
    if (eat(Tok::Tilde)) return l_not(l_unary());
    if (eat(Tok::LParen)) {
      LPtr f = l_or_level();
      expect(Tok::RParen, "')'");
      return f;
    }
    return parse_basic();
  }

  LPtr parse_basic() {
    Term t;
    t.addends.push_back(parse_signed(true));
    for (;;) {
      if (eat(Tok::Plus)) {
        t.addends.push_back(parse_signed(false));
      } else if (lex_.peek().kind == Tok::Minus) {
        lex_.take();
        Addend a = parse_signed(false);
        a.coeff = -a.coeff;
        t.addends.push_back(a);
      } else {
        break;
      }
    }
    SurfaceRel rel;
    switch (lex_.peek().kind) {
      case Tok::Ge:
        rel = SurfaceRel::Geq;
        break;
      case Tok::Le:
        rel = SurfaceRel::Leq;
        break;
      case Tok::Gt:
        rel = SurfaceRel::Gt;
        break;
      case Tok::Lt:
        rel = SurfaceRel::Lt;
        break;
      case Tok::Eq:
        rel = SurfaceRel::Eq;
        break;
      default:
        lex_.fail("expected a relation (>=, <=, >, <, =)");
    }
    lex_.take();
    return l_compare(std::move(t), rel, parse_rat());
  }

  Addend parse_signed(bool allow_sign) {
    bool neg = false;
    if (allow_sign && lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    Rat coeff = 1;
    if (lex_.peek().kind == Tok::Int) coeff = parse_rat_body();
    if (neg) coeff = -coeff;
    Token l = lex_.peek();
    if (l.kind != Tok::Ident || l.text != "l")
      lex_.fail("expected a likelihood term l(...)");
    lex_.take();
    expect(Tok::LParen, "'(' after l");
    PropPtr p = prop_iff();
    expect(Tok::RParen, "')'");
    return Addend{std::move(coeff), std::move(p)};
  }

  Rat parse_rat() {
    bool neg = eat(Tok::Minus);
    Rat q = parse_rat_body();
    return neg ? -q : q;
  }

  Rat parse_rat_body() {
    Token t = lex_.peek();
    if (t.kind != Tok::Int) lex_.fail("expected a number");
    lex_.take();
    BigInt num = t.value, den = 1;
    if (eat(Tok::Slash)) {
      Token d = lex_.peek();
      if (d.kind != Tok::Int) lex_.fail("expected a denominator");
      if (d.value == 0) lex_.fail("zero denominator");
      lex_.take();
      den = d.value;
    }
    return Rat(num, den);
  }

  // ---- propositional level ----

  PropPtr prop_iff() {
    PropPtr p = prop_implies();
    while (eat(Tok::DArrow)) p = iff(p, prop_implies());
    return p;
  }

  PropPtr prop_implies() {
    PropPtr p = prop_or();
    if (eat(Tok::Arrow)) return implies(p, prop_implies());
    return p;
  }

  PropPtr prop_or() {
    PropPtr p = prop_and();
    while (eat(Tok::Pipe)) p = p | prop_and();
    return p;
  }

  PropPtr prop_and() {
    PropPtr p = prop_unary();
    while (eat(Tok::Amp)) p = p & prop_unary();
    return p;
  }

  PropPtr prop_unary() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Tilde:
        lex_.take();
        return !prop_unary();
      case Tok::LParen: {
        lex_.take();
        PropPtr p = prop_iff();
        expect(Tok::RParen, "')'");
        return p;
      }
      case Tok::True:
        lex_.take();
        return prop_true();
      case Tok::False:
        lex_.take();
        return prop_false();
      case Tok::Ident:
        lex_.take();
        return prop(t.text);
      default:
        lex_.fail("expected a propositional formula");
    }
  }

  Lexer lex_;
};

}  // namespace

LPtr parse_lformula(std::string_view text) {
  return Parser(text).parse_formula();
}

PropPtr parse_prop(std::string_view text) {
  return Parser(text).parse_proposition();
}

}  // namespace uplogic
