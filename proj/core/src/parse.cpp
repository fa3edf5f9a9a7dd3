#include "kflat/parse.hpp"

#include <cctype>
#include <memory>

namespace kflat {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& cur() const { return cur_; }

  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    size_t pos = i_;
    if (i_ >= src_.size()) {
      cur_ = {Tok::End, "", pos};
      return;
    }
    char ch = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      cur_ = {Tok::Int, src_.substr(i_, j - i_), pos};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      cur_ = {Tok::Name, src_.substr(i_, j - i_), pos};
      i_ = j;
      return;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(pos, std::string("unexpected character '") + ch + "'");
    }
    cur_ = {k, src_.substr(i_, 1), pos};
    ++i_;
  }

private:
  const std::string& src_;
  size_t i_ = 0;
  Token cur_;
};

class Evaluator {
public:
  Evaluator(const std::string& src, const ParseEnv& env) : lex_(src), env_(env) {
    if (!env.baseRing) throw std::invalid_argument("parse: null ring");
    lvar_ = env.laurentVar.value_or("");
  }

  DualLaurent run() {
    DualLaurent v = expr();
    if (lex_.cur().kind != Tok::End)
      throw ParseError(lex_.cur().pos, "trailing input");
    return v;
  }

private:
  Lexer lex_;
  const ParseEnv& env_;
  std::string lvar_;

  DualLaurent dzero() {
    return {LaurentPoly::zero(env_.baseRing, lvarName()),
            LaurentPoly::zero(env_.baseRing, lvarName())};
  }
  std::string lvarName() const { return lvar_.empty() ? "_laurent" : lvar_; }

  DualLaurent expr() {
    DualLaurent v = term();
    for (;;) {
      if (lex_.cur().kind == Tok::Plus) {
        lex_.advance();
        v = v + term();
      } else if (lex_.cur().kind == Tok::Minus) {
        lex_.advance();
        v = v - term();
      } else {
        return v;
      }
    }
  }

  static bool startsFactor(const Token& t) {
    return t.kind == Tok::Int || t.kind == Tok::Name || t.kind == Tok::LParen ||
           t.kind == Tok::Minus;
  }

  DualLaurent term() {
    DualLaurent v = factor();
    for (;;) {
      if (lex_.cur().kind == Tok::Star) {
        lex_.advance();
        v = v * factor();
      } else if (lex_.cur().kind == Tok::Int || lex_.cur().kind == Tok::Name ||
                 lex_.cur().kind == Tok::LParen) {
        v = v * factor();  // juxtaposition
      } else {
        return v;
      }
    }
  }

  DualLaurent factor() {
    if (lex_.cur().kind == Tok::Minus) {
      lex_.advance();
      return -factor();
    }
    return power();
  }

  DualLaurent power() {
    Token atomTok = lex_.cur();
    DualLaurent base = atom();
    if (lex_.cur().kind != Tok::Caret) return base;
    lex_.advance();
    long e = exponent();
    if (e >= 0) return base.pow(static_cast<unsigned long>(e));
    // negative exponents are reserved for the declared Laurent variable
    if (atomTok.kind == Tok::Name && !lvar_.empty() && atomTok.text == lvar_)
      return {LaurentPoly::term(env_.baseRing, lvar_, static_cast<int>(e),
                                Poly::constant(env_.baseRing, 1)),
              LaurentPoly::zero(env_.baseRing, lvar_)};
    throw ParseError(atomTok.pos,
                     lvar_.empty()
                         ? "negative exponent without a declared Laurent variable"
                         : "negative exponent allowed only on " + lvar_);
  }

  long exponent() {
    bool neg = false;
    if (lex_.cur().kind == Tok::Minus) {
      neg = true;
      lex_.advance();
    }
    if (lex_.cur().kind != Tok::Int)
      throw ParseError(lex_.cur().pos, "expected integer exponent");
    long v = std::stol(lex_.cur().text);
    lex_.advance();
    return neg ? -v : v;
  }

  DualLaurent atom() {
    const Token t = lex_.cur();
    switch (t.kind) {
      case Tok::Int: {
        lex_.advance();
        mpz_class num(t.text);
        if (lex_.cur().kind == Tok::Slash) {
          lex_.advance();
          if (lex_.cur().kind != Tok::Int)
            throw ParseError(lex_.cur().pos,
                             "division is only supported between integer literals");
          mpz_class den(lex_.cur().text);
          lex_.advance();
          if (den == 0) throw ParseError(t.pos, "zero denominator");
          mpq_class q(num, den);
          q.canonicalize();
          return constant(q);
        }
        return constant(mpq_class(num));
      }
      case Tok::Name: {
        lex_.advance();
        if (t.text == "eps") {
          if (!env_.allowEps)
            throw ParseError(t.pos, "eps is not allowed in this context");
          DualLaurent v = dzero();
          v.eps = LaurentPoly::constant(env_.baseRing, lvarName(), 1);
          return v;
        }
        if (!lvar_.empty() && t.text == lvar_) {
          DualLaurent v = dzero();
          v.body = LaurentPoly::term(env_.baseRing, lvar_, 1,
                                     Poly::constant(env_.baseRing, 1));
          return v;
        }
        int idx = env_.baseRing->varIndex(t.text);
        if (idx < 0) throw ParseError(t.pos, "unknown variable " + t.text);
        DualLaurent v = dzero();
        v.body = LaurentPoly::fromPoly(Poly::variable(env_.baseRing, idx), lvarName());
        return v;
      }
      case Tok::LParen: {
        lex_.advance();
        DualLaurent v = expr();
        if (lex_.cur().kind != Tok::RParen)
          throw ParseError(lex_.cur().pos, "expected ')'");
        lex_.advance();
        return v;
      }
      case Tok::Slash:
        throw ParseError(t.pos, "division is only supported between integer literals");
      default:
        throw ParseError(t.pos, "expected a number, variable or '('");
    }
  }

  DualLaurent constant(const mpq_class& q) {
    DualLaurent v = dzero();
    v.body = LaurentPoly::constant(env_.baseRing, lvarName(), q);
    return v;
  }
};

Poly laurent_as_base_poly(const LaurentPoly& l) {
  if (l.isZero()) return Poly::zero(l.base());
  if (l.ord() < 0 || l.topExp() > 0)
    throw ParseError(0, "Laurent variable not allowed in this context");
  return l.coeff(0);
}

}  // namespace

DualLaurent parse_value(const std::string& src, const ParseEnv& env) {
  return Evaluator(src, env).run();
}

Poly parse_poly(const std::string& src, const RingPtr& ring) {
  ParseEnv env{ring, std::nullopt, false};
  DualLaurent v = parse_value(src, env);
  return laurent_as_base_poly(v.body);
}

LaurentPoly parse_laurent(const std::string& src, const RingPtr& base,
                          const std::string& lvar) {
  ParseEnv env{base, lvar, false};
  return parse_value(src, env).body;
}

DualPoly parse_dual_poly(const std::string& src, const RingPtr& ring) {
  ParseEnv env{ring, std::nullopt, true};
  DualLaurent v = parse_value(src, env);
  return {laurent_as_base_poly(v.body), laurent_as_base_poly(v.eps)};
}

DualLaurent parse_dual_laurent(const std::string& src, const RingPtr& base,
                               const std::string& lvar) {
  ParseEnv env{base, lvar, true};
  return parse_value(src, env);
}

}  // namespace kflat
