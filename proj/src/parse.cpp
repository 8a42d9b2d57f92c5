#include "jcheck/parse.hpp"

#include <cctype>

namespace jcheck {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Integer, Identifier, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line) {
    advance();
  }

  Polynomial parse() {
    Polynomial p = expr();
    if (tok_.kind != Tok::End) {
      if (tok_.kind == Tok::Integer || tok_.kind == Tok::Identifier || tok_.kind == Tok::LParen) {
        fail("implicit multiplication is not allowed; use '*'");
      }
      fail("unexpected '" + std::string(tok_.text) + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, tok_.column); }

  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    std::size_t start = pos_;
    if (pos_ == text_.size()) {
      tok_ = {Tok::End, {}, start + 1};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_ = {Tok::Integer, text_.substr(start, pos_ - start), start + 1};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_ = {Tok::Identifier, text_.substr(start, pos_ - start), start + 1};
      return;
    }
    ++pos_;
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        tok_ = {Tok::End, text_.substr(start, 1), start + 1};
        fail(std::string("unexpected character '") + c + "'");
    }
    tok_ = {kind, text_.substr(start, 1), start + 1};
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      bool minus = tok_.kind == Tok::Minus;
      advance();
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (tok_.kind == Tok::Star) {
      advance();
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return -unary();
    }
    if (tok_.kind == Tok::Plus) {
      advance();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (tok_.kind == Tok::Caret) {
      advance();
      if (tok_.kind != Tok::Integer) fail("exponent must be a non-negative integer literal");
      mpz_class e(std::string(tok_.text));
      if (e > 0xFFFF) fail("exponent too large");
      advance();
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    switch (tok_.kind) {
      case Tok::Integer: {
        mpz_class num(std::string(tok_.text));
        std::size_t column = tok_.column;
        advance();
        if (tok_.kind == Tok::Slash) {
          advance();
          if (tok_.kind != Tok::Integer) fail("fraction literal needs an integer denominator");
          mpz_class den(std::string(tok_.text));
          if (den == 0) fail("zero denominator");
          if (ring_->field().is_prime_field()) {
            throw ParseError("rational literal in finite field " + ring_->field().name() +
                                 " (write the residue instead)",
                             line_, column);
          }
          advance();
          return Polynomial::constant(ring_, FieldElement(ring_->field(), mpq_class(num, den)));
        }
        return Polynomial::constant(ring_, FieldElement(ring_->field(), num));
      }
      case Tok::Identifier: {
        auto index = ring_->index_of(tok_.text);
        if (!index) fail("unknown variable '" + std::string(tok_.text) + "'");
        advance();
        return Polynomial::variable(ring_, *index);
      }
      case Tok::LParen: {
        advance();
        Polynomial inner = expr();
        if (tok_.kind != Tok::RParen) fail("expected ')'");
        advance();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + std::string(tok_.text) + "'");
    }
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, {}, 1};
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line) {
  return Parser(text, ring, line).parse();
}

}  // namespace jcheck
