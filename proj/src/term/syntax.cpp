// SPDX-License-Identifier: Apache-2.0
#include "poincare/term/syntax.hpp"

#include <cctype>
#include <string>

namespace poincare {

ParseError::ParseError(Kind kind, std::size_t column, const std::string& detail)
    : std::runtime_error((kind == Kind::syntax ? "syntax-error" : "unbound-token") + std::string(" at column ") +
                         std::to_string(column) + ": " + detail),
      kind_(kind),
      column_(column) {}

namespace {

enum class Tok { lparen, rparen, bang, sqrt, star, amp, plus, wedge, vee, arrow, biarrow, zero, half, one, var, end };

struct Token {
  Tok kind;
  std::size_t pos;
  unsigned index = 0;
};

std::string tok_text(Tok t) {
  switch (t) {
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::bang: return "'!'";
    case Tok::sqrt: return "'sqrt'";
    case Tok::star: return "'*'";
    case Tok::amp: return "'&'";
    case Tok::plus: return "'+'";
    case Tok::wedge: return "'/\\'";
    case Tok::vee: return "'\\/'";
    case Tok::arrow: return "'->'";
    case Tok::biarrow: return "'<->'";
    case Tok::zero: return "'0'";
    case Tok::half: return "'1/2'";
    case Tok::one: return "'1'";
    case Tok::var: return "variable";
    case Tok::end: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) { advance(); }

  Term run() {
    Term t = parse_iff();
    if (cur_.kind != Tok::end) fail(cur_.pos, "unexpected " + tok_text(cur_.kind));
    return t;
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    throw ParseError(ParseError::Kind::syntax, pos + 1, msg);
  }
  [[noreturn]] void unbound(std::size_t pos, const std::string& word) const {
    throw ParseError(ParseError::Kind::unbound_token, pos + 1, "'" + word + "'");
  }

  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::size_t start = i_;
    if (i_ >= s_.size()) {
      cur_ = {Tok::end, start};
      return;
    }
    const char c = s_[i_];
    auto starts = [&](std::string_view p) { return s_.substr(i_, p.size()) == p; };
    auto single = [&](Tok t) {
      ++i_;
      cur_ = {t, start};
    };
    switch (c) {
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case '!': return single(Tok::bang);
      case '*': return single(Tok::star);
      case '&': return single(Tok::amp);
      case '+': return single(Tok::plus);
      default: break;
    }
    if (starts("/\\")) {
      i_ += 2;
      cur_ = {Tok::wedge, start};
      return;
    }
    if (starts("\\/")) {
      i_ += 2;
      cur_ = {Tok::vee, start};
      return;
    }
    if (starts("->")) {
      i_ += 2;
      cur_ = {Tok::arrow, start};
      return;
    }
    if (starts("<->")) {
      i_ += 3;
      cur_ = {Tok::biarrow, start};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      const std::string_view num = s_.substr(i_, j - i_);
      if (num == "1" && s_.substr(j, 2) == "/2" &&
          (j + 2 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[j + 2])))) {
        i_ = j + 2;
        cur_ = {Tok::half, start};
        return;
      }
      if (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_' ||
                            (s_[j] == '/' && s_.substr(j, 2) != "/\\")))
        unbound(start, word_at(start));
      if (num == "0" || num == "1") {
        i_ = j;
        cur_ = {num == "0" ? Tok::zero : Tok::one, start};
        return;
      }
      unbound(start, std::string(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      const std::string_view word = s_.substr(i_, j - i_);
      i_ = j;
      if (word == "sqrt") {
        cur_ = {Tok::sqrt, start};
        return;
      }
      if (word.size() > 1 && word[0] == 'x' && word[1] != '0') {
        bool digits = true;
        for (std::size_t k = 1; k < word.size(); ++k) digits = digits && std::isdigit(static_cast<unsigned char>(word[k]));
        if (digits && word.size() <= 10) {
          cur_ = {Tok::var, start, static_cast<unsigned>(std::stoul(std::string(word.substr(1))))};
          return;
        }
      }
      unbound(start, std::string(word));
    }
    unbound(start, std::string(1, c));
  }

  std::string word_at(std::size_t pos) const {
    std::size_t j = pos;
    while (j < s_.size() && !std::isspace(static_cast<unsigned char>(s_[j])) && s_[j] != '(' && s_[j] != ')') ++j;
    return std::string(s_.substr(pos, j - pos));
  }

  void expect(Tok t) {
    if (cur_.kind != t) fail(cur_.pos, "expected " + tok_text(t) + ", found " + tok_text(cur_.kind));
    advance();
  }

  Term parse_iff() {
    Term t = parse_imp();
    while (cur_.kind == Tok::biarrow) {
      advance();
      t = t_iff(t, parse_imp());
    }
    return t;
  }

  Term parse_imp() {
    Term t = parse_lattice();
    if (cur_.kind == Tok::arrow) {
      advance();
      return t_imp(t, parse_imp());
    }
    return t;
  }

  Term parse_lattice() {
    Term t = parse_sum();
    while (cur_.kind == Tok::wedge || cur_.kind == Tok::vee) {
      const bool wedge = cur_.kind == Tok::wedge;
      advance();
      Term r = parse_sum();
      t = wedge ? t_meet(t, r) : t_join(t, r);
    }
    return t;
  }

  Term parse_sum() {
    Term t = parse_product();
    while (cur_.kind == Tok::plus) {
      advance();
      t = Term::oplus(t, parse_product());
    }
    return t;
  }

  Term parse_product() {
    Term t = parse_unary();
    while (cur_.kind == Tok::star || cur_.kind == Tok::amp) {
      const bool star = cur_.kind == Tok::star;
      advance();
      Term r = parse_unary();
      t = star ? Term::bullet(t, r) : t_odot(t, r);
    }
    return t;
  }

  Term parse_unary() {
    switch (cur_.kind) {
      case Tok::bang:
        advance();
        return Term::neg(parse_unary());
      case Tok::sqrt: {
        advance();
        expect(Tok::lparen);
        Term t = parse_iff();
        expect(Tok::rparen);
        return Term::sqrt(t);
      }
      case Tok::lparen: {
        advance();
        Term t = parse_iff();
        expect(Tok::rparen);
        return t;
      }
      case Tok::zero:
        advance();
        return Term::zero();
      case Tok::half:
        advance();
        return Term::half();
      case Tok::one:
        advance();
        return Term::one();
      case Tok::var: {
        const unsigned idx = cur_.index;
        advance();
        return Term::var(idx);
      }
      default:
        fail(cur_.pos, "unexpected " + tok_text(cur_.kind));
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  Token cur_{Tok::end, 0};
};

int precedence(const Term& t) {
  switch (t.kind()) {
    case Kind::bullet:
      return 1;
    case Kind::oplus:
      return 2;
    default:
      return 0;
  }
}

void print_into(const Term& t, int allowed, std::string& out) {
  const bool wrap = precedence(t) > allowed;
  if (wrap) out += '(';
  switch (t.kind()) {
    case Kind::var:
      out += "x" + std::to_string(t.index());
      break;
    case Kind::constant:
      out += t.constant() == Const::zero ? "0" : (t.constant() == Const::half ? "1/2" : "1");
      break;
    case Kind::neg:
      out += '!';
      print_into(t.arg(), 0, out);
      break;
    case Kind::sqrt:
      out += "sqrt(";
      print_into(t.arg(), 2, out);
      out += ')';
      break;
    case Kind::bullet:
      print_into(t.left(), 1, out);
      out += " * ";
      print_into(t.right(), 0, out);
      break;
    case Kind::oplus:
      print_into(t.left(), 2, out);
      out += " + ";
      print_into(t.right(), 1, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Term parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Term& t) {
  std::string out;
  print_into(t, 2, out);
  return out;
}

std::string describe(const Term& t) {
  switch (t.kind()) {
    case Kind::var:
      return "Var " + std::to_string(t.index());
    case Kind::constant:
      return std::string("Const(") + (t.constant() == Const::zero ? "zero" : (t.constant() == Const::half ? "half" : "one")) +
             ")";
    case Kind::neg:
      return "Neg(" + describe(t.arg()) + ")";
    case Kind::sqrt:
      return "Sqrt(" + describe(t.arg()) + ")";
    case Kind::oplus:
      return "Oplus(" + describe(t.left()) + ", " + describe(t.right()) + ")";
    case Kind::bullet:
      return "Bullet(" + describe(t.left()) + ", " + describe(t.right()) + ")";
  }
  return "?";
}

}  // namespace poincare
