#include "expr_parse.hpp"

#include "errors.hpp"

#include <cctype>

namespace qzeta {

namespace {

class Parser {
public:
  Parser(std::string_view text, const ExprOptions &opts) : s_(text), o_(opts) {}

  ZetaExpr run() {
    ZetaExpr e = expr();
    skip();
    if (i_ != s_.size())
      fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { fail_at(i_, msg); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string &msg) const {
    auto [line, col] = where(pos);
    throw ParseError(msg, line, col);
  }

  std::pair<int, int> where(std::size_t pos) const {
    int line = o_.line, col = o_.column;
    for (std::size_t k = 0; k < pos && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }

  Int integer() {
    if (!at_digit())
      fail("expected integer");
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    return Int(std::string(s_.substr(start, i_ - start)), 10);
  }

  Rat rational() {
    bool neg = accept('-');
    if (!neg)
      accept('+');
    Int n = integer();
    Int d = 1;
    if (accept('/')) {
      std::size_t at = i_;
      d = integer();
      if (d == 0)
        fail_at(at, "zero denominator");
    }
    return Rat(neg ? Int(-n) : n, d);
  }

  ZetaExpr expr() {
    ZetaExpr acc;
    bool neg = accept('-');
    if (!neg)
      accept('+');
    ZetaExpr t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  ZetaExpr term() {
    ZetaExpr acc = power();
    while (accept('*'))
      acc *= power();
    return acc;
  }

  // Single unit monomial L^l T^t [S]^e with no factors, if x is one.
  static const Monomial *unit_monomial(const ZetaExpr &x) {
    if (x.terms().size() != 1)
      return nullptr;
    const auto &[factors, coeff] = *x.terms().begin();
    if (!factors.empty() || coeff.size() != 1 || coeff.terms().begin()->second != 1)
      return nullptr;
    return &coeff.terms().begin()->first;
  }

  ZetaExpr power() {
    ZetaExpr base = atom();
    if (!accept('^'))
      return base;
    skip();
    std::size_t at = i_;
    Rat e;
    if (accept('(')) {
      e = rational();
      expect(')');
    } else {
      bool neg = accept('-');
      Int n = integer();
      e = Rat(neg ? Int(-n) : n);
    }
    if (const Monomial *m = unit_monomial(base)) {
      Monomial r{m->l * e, m->t * e, {}};
      if (!m->sym.empty()) {
        if (!e.is_integer() || e.sign() < 0)
          fail_at(at, "symbol powers must be nonnegative integers");
        SymMono sm;
        for (const auto &[name, k] : m->sym.factors())
          sm = sm * SymMono::of(name, k * static_cast<int>(e.to_int64()));
        r.sym = sm;
      }
      return ZetaExpr(MotPoly::monomial(1, r.l, r.t, r.sym));
    }
    if (!e.is_integer() || e.sign() < 0)
      fail_at(at, "exponent " + e.str() + " needs a unit monomial base");
    if (e.num() > 10000)
      fail_at(at, "exponent too large");
    ZetaExpr r(1);
    for (long k = e.num().get_si(); k > 0; --k)
      r *= base;
    return r;
  }

  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(i_, kw.size()) != kw)
      return false;
    std::size_t end = i_ + kw.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
      return false;
    i_ = end;
    return true;
  }

  ZetaExpr atom() {
    skip();
    if (i_ >= s_.size())
      fail("unexpected end of expression");
    std::size_t at = i_;
    if (at_digit())
      return ZetaExpr(MotPoly(integer()));
    if (accept('(')) {
      ZetaExpr e = expr();
      expect(')');
      return e;
    }
    if (accept('[')) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string name(s_.substr(start, i_ - start));
      if (name.empty())
        fail("expected symbol name");
      expect(']');
      if (o_.symbols && !o_.symbols->count(name)) {
        auto [line, col] = where(at);
        throw Error(ErrorKind::UndeclaredSymbol, std::to_string(line) + ":" + std::to_string(col) +
                                                     ": undeclared symbol [" + name + "]");
      }
      return ZetaExpr(MotPoly::symbol(name));
    }
    if (keyword("Fac")) {
      if (!o_.allow_factors)
        fail_at(at, "factor not allowed here");
      expect('(');
      Rat N = rational();
      expect(';');
      Rat nu = rational();
      expect(')');
      if (N.sign() < 0 || nu.sign() <= 0)
        fail_at(at, "factor needs N >= 0 and nu > 0");
      return ZetaExpr::factor(N, nu);
    }
    if (keyword("L"))
      return ZetaExpr(MotPoly::L());
    if (keyword("T")) {
      if (!o_.allow_T)
        fail_at(at, "T not allowed here");
      return ZetaExpr(MotPoly::T());
    }
    fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }

  std::string_view s_;
  const ExprOptions &o_;
  std::size_t i_ = 0;
};

}  // namespace

ZetaExpr parse_zeta_expr(std::string_view text, const ExprOptions &opts) {
  return Parser(text, opts).run();
}

MotPoly parse_motpoly(std::string_view text, const ExprOptions &opts) {
  ExprOptions o = opts;
  o.allow_factors = false;
  ZetaExpr z = Parser(text, o).run();
  if (z.is_zero())
    return {};
  return z.terms().begin()->second;
}

}  // namespace qzeta
