#include "strata_io.hpp"

#include "errors.hpp"
#include "expr_parse.hpp"
#include "render.hpp"
#include "resolution.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qzeta {

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view s) : s_(s) {}

  int line() const { return line_; }
  int col() const { return col_; }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, line_, col_); }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string word() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      advance();
    if (b == i_)
      fail("expected a name");
    return std::string(s_.substr(b, i_ - b));
  }

  Int integer() {
    skip();
    std::size_t b = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+'))
      advance();
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      advance();
    if (digits == i_)
      fail("expected an integer");
    std::string t(s_.substr(b, i_ - b));
    if (t[0] == '+')
      t.erase(0, 1);
    return Int(t);
  }

  Rat rational() {
    Int n = integer();
    if (peek() != '/')
      return Rat(n);
    advance();
    skip();
    if (i_ < s_.size() && !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail("expected a denominator");
    Int d = integer();
    if (d == 0)
      fail("zero denominator");
    return Rat(n, d);
  }

  // Raw text up to (not including) the first of `stops` at parenthesis depth 0.
  std::string raw_until(std::string_view stops, int &line, int &col) {
    skip();
    line = line_;
    col = col_;
    std::size_t b = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#' || (depth == 0 && stops.find(c) != std::string_view::npos))
        break;
      if (c == '(')
        ++depth;
      else if (c == ')')
        --depth;
      advance();
    }
    std::string t(s_.substr(b, i_ - b));
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
      t.pop_back();
    if (t.empty())
      fail("empty value");
    return t;
  }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

private:
  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

struct PendingStratum {
  std::string klass;
  int kline = 0, kcol = 0;
  RatVec N, nu;
  int nline = 0, ncol = 0, vline = 0, vcol = 0;
  std::string group;
  int gline = 0, gcol = 0;
};

RatVec vector_literal(Scanner &sc) {
  sc.expect('[');
  RatVec v;
  if (sc.peek() != ']') {
    v.push_back(sc.rational());
    while (sc.peek() == ',') {
      sc.advance();
      v.push_back(sc.rational());
    }
  }
  sc.expect(']');
  return v;
}

std::string rat_text(const Rat &r) { return r.raw().get_str(); }

std::string vec_text(const RatVec &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + rat_text(v[i]);
  return out + "]";
}

}  // namespace

ChiEnv StrataFile::chi() const {
  ChiEnv env;
  for (const auto &[name, c] : symbols)
    if (c)
      env[name] = *c;
  return env;
}

StrataFile parse_strata(std::string_view text) {
  Scanner sc(text);
  StrataFile f;
  std::optional<int> dim;
  std::optional<std::int64_t> gindex;
  std::vector<PendingStratum> pending;
  while (!sc.done()) {
    int line = sc.line(), col = sc.col();
    std::string kw = sc.word();
    if (kw == "dimension" || kw == "gindex") {
      sc.expect('=');
      Int v = sc.integer();
      if (kw == "dimension" && (v < 1 || v > 64))
        throw ParseError("dimension must be between 1 and 64", line, col);
      if (v < 1 || !v.fits_slong_p())
        throw ParseError(kw + " must be a positive integer", line, col);
      if ((kw == "dimension" ? dim.has_value() : gindex.has_value()))
        throw ParseError("duplicate " + kw, line, col);
      if (kw == "dimension")
        dim = static_cast<int>(v.get_si());
      else
        gindex = v.get_si();
    } else if (kw == "symbol") {
      int nl = sc.line(), nc = sc.col();
      std::string name = sc.word();
      if (f.symbols.count(name))
        throw ParseError("duplicate symbol " + name, nl, nc);
      std::optional<Int> chi;
      if (sc.peek() == 'c') {
        if (sc.word() != "chi")
          sc.fail("expected 'chi'");
        sc.expect('=');
        chi = sc.integer();
      }
      f.symbols[name] = chi;
    } else if (kw == "stratum") {
      if (!dim)
        throw ParseError("stratum before dimension", line, col);
      sc.expect('{');
      PendingStratum p;
      std::set<std::string> seen;
      for (;;) {
        int fl = sc.line(), fc = sc.col();
        std::string key = sc.word();
        if (!seen.insert(key).second)
          throw ParseError("duplicate field " + key, fl, fc);
        sc.expect('=');
        if (key == "class") {
          p.klass = sc.raw_until(";}", p.kline, p.kcol);
        } else if (key == "N") {
          p.nline = sc.line();
          p.ncol = sc.col();
          p.N = vector_literal(sc);
        } else if (key == "nu") {
          p.vline = sc.line();
          p.vcol = sc.col();
          p.nu = vector_literal(sc);
        } else if (key == "group") {
          p.group = sc.raw_until(";}", p.gline, p.gcol);
        } else {
          throw ParseError("unknown field " + key, fl, fc);
        }
        if (sc.peek() == ';') {
          sc.advance();
          if (sc.peek() == '}')
            break;
          continue;
        }
        break;
      }
      for (const char *k : {"class", "N", "nu", "group"})
        if (!seen.count(k))
          sc.fail(std::string("stratum is missing field ") + k);
      sc.expect('}');
      pending.push_back(std::move(p));
    } else {
      throw ParseError("unknown statement " + kw, line, col);
    }
  }
  if (!dim)
    throw ParseError("missing dimension", sc.line(), sc.col());

  std::set<std::string> names;
  for (const auto &[name, c] : f.symbols)
    names.insert(name);
  f.strata.n = *dim;
  for (const auto &p : pending) {
    ExprOptions opts;
    opts.symbols = &names;
    opts.allow_T = false;
    opts.allow_factors = false;
    opts.line = p.kline;
    opts.column = p.kcol;
    MotPoly klass = parse_motpoly(p.klass, opts);
    if (p.N.size() != static_cast<std::size_t>(*dim))
      throw Error(ErrorKind::DimensionMismatch, std::to_string(p.nline) + ":" + std::to_string(p.ncol) +
                                                    ": N has " + std::to_string(p.N.size()) +
                                                    " entries, dimension is " + std::to_string(*dim));
    if (p.nu.size() != static_cast<std::size_t>(*dim))
      throw Error(ErrorKind::DimensionMismatch, std::to_string(p.vline) + ":" + std::to_string(p.vcol) +
                                                    ": nu has " + std::to_string(p.nu.size()) +
                                                    " entries, dimension is " + std::to_string(*dim));
    GroupAction g = parse_group(p.group, *dim, p.gline, p.gcol);
    f.strata.strata.push_back(Stratum{std::move(klass), p.N, p.nu, std::move(g)});
  }
  f.strata.r = gindex ? *gindex : gorenstein_index(f.strata.strata);
  f.strata.validate();
  return f;
}

std::string print_strata(const StrataFile &f) {
  std::ostringstream out;
  out << "dimension = " << f.strata.n << "\n";
  out << "gindex = " << f.strata.r << "\n";
  for (const auto &[name, chi] : f.symbols) {
    out << "symbol " << name;
    if (chi)
      out << " chi = " << chi->get_str();
    out << "\n";
  }
  for (const auto &s : f.strata.strata)
    out << "stratum { class = " << to_text(s.klass) << " ; N = " << vec_text(s.N)
        << " ; nu = " << vec_text(s.nu) << " ; group = " << to_text(s.group) << " }\n";
  return out.str();
}

StrataFile read_strata_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_strata(buf.str());
}

void write_strata_file(const std::string &path, const StrataFile &f) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::Io, "cannot write " + path);
  out << print_strata(f);
  if (!out)
    throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace qzeta
