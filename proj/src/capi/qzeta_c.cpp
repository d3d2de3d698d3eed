#include "qzeta/qzeta.h"

#include "errors.hpp"
#include "json_io.hpp"
#include "monodromy.hpp"
#include "render.hpp"
#include "resolution.hpp"
#include "strata_io.hpp"
#include "tetra.hpp"
#include "zetacore.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>

using namespace qzeta;
using nlohmann::json;

struct qz_strata {
  StrataFile f;
};

struct qz_zeta {
  ZetaExpr z;
  ChiEnv chi;
};

namespace {

thread_local std::string g_last_error;

qz_status status_of(ErrorKind k) {
  switch (k) {
  case ErrorKind::InvalidArgument: return QZ_E_INVALID_ARGUMENT;
  case ErrorKind::ParseError: return QZ_E_PARSE;
  case ErrorKind::UndeclaredSymbol: return QZ_E_UNDECLARED_SYMBOL;
  case ErrorKind::DimensionMismatch: return QZ_E_DIMENSION_MISMATCH;
  case ErrorKind::NotSmall: return QZ_E_NOT_SMALL;
  case ErrorKind::MissingChi: return QZ_E_MISSING_CHI;
  case ErrorKind::TInCoefficient: return QZ_E_T_IN_COEFFICIENT;
  case ErrorKind::FractionalPowerUnevaluable: return QZ_E_FRACTIONAL_POWER;
  case ErrorKind::BadParams: return QZ_E_BAD_PARAMS;
  case ErrorKind::SizeLimit: return QZ_E_SIZE_LIMIT;
  case ErrorKind::BudgetExceeded: return QZ_E_BUDGET_EXCEEDED;
  case ErrorKind::NotCoprime: return QZ_E_NOT_COPRIME;
  case ErrorKind::NotExpandable: return QZ_E_NOT_EXPANDABLE;
  case ErrorKind::Io: return QZ_E_IO;
  }
  return QZ_E_INTERNAL;
}

template <typename F>
qz_status guard(F &&body) {
  g_last_error.clear();
  try {
    body();
    return QZ_OK;
  } catch (const Error &e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
    return QZ_E_SIZE_LIMIT;
  } catch (const std::overflow_error &e) {
    g_last_error = std::string("value out of range: ") + e.what();
    return QZ_E_SIZE_LIMIT;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return QZ_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return QZ_E_INTERNAL;
  }
}

void need(const void *p, const char *what) {
  if (!p)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must not be NULL");
}

char *dup(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Rat parse_rat(const std::string &raw) {
  std::string t = trim(raw);
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  std::size_t slash = t.find('/');
  auto digits = [&](std::size_t b, std::size_t e) {
    if (b >= e)
      return false;
    for (std::size_t k = b; k < e; ++k)
      if (t[k] < '0' || t[k] > '9')
        return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(i, t.size()) : digits(i, slash) && digits(slash + 1, t.size());
  if (!ok)
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + raw + "'");
  if (t[0] == '+')
    t.erase(0, 1);
  if (slash != std::string::npos) {
    std::size_t s2 = t.find('/');
    Int d(t.substr(s2 + 1));
    if (d == 0)
      throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + raw + "'");
    return Rat(Int(t.substr(0, s2)), d);
  }
  return Rat(Int(t));
}

RatVec parse_vec(const char *text, const char *what) {
  need(text, what);
  RatVec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    v.push_back(parse_rat(item));
  if (v.empty())
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is empty");
  return v;
}

Rat scalar(const char *text, const char *what) {
  RatVec v = parse_vec(text, what);
  if (v.size() != 1)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a single number");
  return v[0];
}

std::string rat_text(const Rat &r) { return r.raw().get_str(); }

std::string rat_latex(const Rat &r) {
  if (r.is_integer())
    return r.num().get_str();
  std::string sign = r.sign() < 0 ? "-" : "";
  Int n = r.num();
  if (n < 0)
    n = -n;
  return sign + "\\frac{" + n.get_str() + "}{" + r.den().get_str() + "}";
}

json chi_json(const ChiEnv &chi) {
  json j = json::object();
  for (const auto &[k, v] : chi)
    j[k] = int_json(v);
  return j;
}

template <typename Fn>
qz_status emit(char **out, Fn &&make) {
  return guard([&] {
    need(out, "out");
    *out = dup(make());
  });
}

qz_strata *wrap(StrataFile f) { return new qz_strata{std::move(f)}; }

StrataFile with_chi(Stratification s, const ChiEnv &chi) {
  StrataFile f{std::move(s), {}};
  for (const auto &[k, v] : chi)
    f.symbols[k] = v;
  return f;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

extern "C" {

void qz_string_free(char *s) { std::free(s); }

const char *qz_version(void) { return "1.0.0"; }

const char *qz_status_name(qz_status s) {
  switch (s) {
  case QZ_OK: return "Ok";
  case QZ_E_INVALID_ARGUMENT: return "InvalidArgument";
  case QZ_E_PARSE: return "ParseError";
  case QZ_E_UNDECLARED_SYMBOL: return "UndeclaredSymbol";
  case QZ_E_DIMENSION_MISMATCH: return "DimensionMismatch";
  case QZ_E_NOT_SMALL: return "NotSmall";
  case QZ_E_MISSING_CHI: return "MissingChi";
  case QZ_E_T_IN_COEFFICIENT: return "TInCoefficient";
  case QZ_E_FRACTIONAL_POWER: return "FractionalPowerUnevaluable";
  case QZ_E_BAD_PARAMS: return "BadParams";
  case QZ_E_SIZE_LIMIT: return "SizeLimit";
  case QZ_E_BUDGET_EXCEEDED: return "BudgetExceeded";
  case QZ_E_NOT_COPRIME: return "NotCoprime";
  case QZ_E_NOT_EXPANDABLE: return "NotExpandable";
  case QZ_E_IO: return "Io";
  case QZ_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char *qz_last_error(void) { return g_last_error.c_str(); }

qz_status qz_strata_parse(const char *text, qz_strata **out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(parse_strata(text));
  });
}

qz_status qz_strata_read(const char *path, qz_strata **out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = wrap(read_strata_file(path));
  });
}

qz_status qz_strata_print(const qz_strata *s, char **out) {
  return emit(out, [&] {
    need(s, "strata");
    return print_strata(s->f);
  });
}

qz_status qz_strata_write(const qz_strata *s, const char *path) {
  return guard([&] {
    need(s, "strata");
    need(path, "path");
    write_strata_file(path, s->f);
  });
}

qz_status qz_strata_equal(const qz_strata *a, const qz_strata *b, int *out) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = a->f == b->f ? 1 : 0;
  });
}

qz_status qz_strata_count(const qz_strata *s, int64_t *out) {
  return guard([&] {
    need(s, "strata");
    need(out, "out");
    *out = static_cast<int64_t>(s->f.strata.strata.size());
  });
}

qz_status qz_strata_warnings(const qz_strata *s, char **out) {
  return emit(out, [&] {
    need(s, "strata");
    return join(s->f.strata.warnings(), "\n");
  });
}

void qz_strata_free(qz_strata *s) { delete s; }

qz_status qz_hj_strata(int64_t d, int64_t a, int64_t b, const char *N, const char *nu, qz_strata **out) {
  return guard([&] {
    need(out, "out");
    RatVec n = parse_vec(N, "N"), v = parse_vec(nu, "nu");
    if (n.size() != 2 || v.size() != 2)
      throw Error(ErrorKind::DimensionMismatch, "N and nu need 2 entries");
    *out = wrap(StrataFile{hj_stratification(hj_resolve(d, a, b), n[0], n[1], v[0], v[1]), {}});
  });
}

qz_status qz_hj_chain(int64_t d, int64_t a, int64_t b, qz_format fmt, char **out) {
  return emit(out, [&] {
    Chain2D c = hj_resolve(d, a, b);
    if (fmt == QZ_FMT_JSON) {
      json j{{"d", d}, {"a", a}, {"b", b}, {"kappa", c.kappa}, {"coeffs", json::array()}};
      for (const auto &[x, y] : c.coeffs)
        j["coeffs"].push_back({x, y});
      return j.dump();
    }
    std::ostringstream o;
    std::vector<std::string> ks;
    for (auto k : c.kappa)
      ks.push_back(std::to_string(k));
    o << "1/" << d << "(" << a << "," << b << "): kappa = (" << join(ks, ", ") << ")";
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
      o << "\nE" << i + 1 << ": c = (" << c.coeffs[i].first << "," << c.coeffs[i].second
        << "), self-intersection -" << c.kappa[i];
    return o.str();
  });
}

qz_status qz_yomdin_strata(int64_t m, int64_t k, int64_t p, int64_t q, int64_t a, qz_strata **out) {
  return guard([&] {
    need(out, "out");
    auto s = yomdin_stratification(YomdinParams::make(m, k, p, q, a));
    *out = wrap(with_chi(std::move(s.strata), s.chi));
  });
}

qz_status qz_tetra_strata(int64_t d, int64_t q, const char *N, const char *nu, qz_strata **out,
                          char **notice) {
  return guard([&] {
    need(out, "out");
    auto s = tetra_stratification(TetraParams::make(d, q), scalar(N, "N"), scalar(nu, "nu"));
    qz_strata *h = wrap(with_chi(std::move(s.strata), s.chi));
    if (notice) {
      try {
        *notice = dup(s.notice);
      } catch (...) {
        delete h;
        throw;
      }
    }
    *out = h;
  });
}

qz_status qz_monomial_zeta(const char *group, const char *N, const char *nu, int allow_nonsmall,
                           qz_zeta **out) {
  return guard([&] {
    need(group, "group");
    need(out, "out");
    GroupAction g = parse_group(group);
    RatVec n = parse_vec(N, "N"), v = parse_vec(nu, "nu");
    if (n.size() != static_cast<std::size_t>(g.n()) || v.size() != static_cast<std::size_t>(g.n()))
      throw Error(ErrorKind::DimensionMismatch, "N and nu need " + std::to_string(g.n()) + " entries");
    *out = new qz_zeta{local_monomial_zeta(g, n, v, allow_nonsmall != 0), {}};
  });
}

qz_status qz_strata_zeta(const qz_strata *s, int allow_nonsmall, qz_zeta **out) {
  return guard([&] {
    need(s, "strata");
    need(out, "out");
    *out = new qz_zeta{stratified_zeta(s->f.strata, allow_nonsmall != 0), s->f.chi()};
  });
}

qz_status qz_zeta_render(const qz_zeta *z, qz_format fmt, char **out) {
  return emit(out, [&] {
    need(z, "zeta");
    if (fmt == QZ_FMT_JSON)
      return to_json(z->z).dump();
    return fmt == QZ_FMT_LATEX ? to_latex(z->z) : to_text(z->z);
  });
}

qz_status qz_zeta_equal(const qz_zeta *a, const qz_zeta *b, int *out) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = ze_equal(a->z, b->z) ? 1 : 0;
  });
}

qz_status qz_zeta_euler(const qz_zeta *z, qz_format fmt, char **out) {
  return emit(out, [&] {
    need(z, "zeta");
    TopZeta t = euler_specialize(z->z, z->chi);
    if (fmt == QZ_FMT_JSON) {
      json j = to_json(t);
      j["chi"] = chi_json(z->chi);
      return j.dump();
    }
    return fmt == QZ_FMT_LATEX ? to_latex(t) : to_text(t);
  });
}

qz_status qz_zeta_poles(const qz_zeta *z, qz_format fmt, char **out) {
  return emit(out, [&] {
    need(z, "zeta");
    auto poles = candidate_poles(z->z);
    if (fmt == QZ_FMT_JSON) {
      json j = json::array();
      for (const auto &p : poles)
        j.push_back(to_json(p));
      return j.dump();
    }
    std::vector<std::string> parts;
    for (const auto &p : poles)
      parts.push_back(fmt == QZ_FMT_LATEX ? rat_latex(p) : rat_text(p));
    return parts.empty() ? std::string("none") : join(parts, ", ");
  });
}

qz_status qz_zeta_series(const qz_zeta *z, const char *M, qz_format fmt, char **out) {
  return emit(out, [&] {
    need(z, "zeta");
    Rat m = scalar(M, "M");
    if (m.sign() < 0)
      throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
    MotPoly s = series_expand(z->z, m);
    if (fmt == QZ_FMT_JSON)
      return to_json(s).dump();
    return fmt == QZ_FMT_LATEX ? to_latex(s) : to_text(s);
  });
}

qz_status qz_zeta_eval_series(const qz_zeta *z, const char *M, const char *p, const char *syms,
                              qz_format fmt, char **out) {
  return emit(out, [&] {
    need(z, "zeta");
    Rat m = scalar(M, "M"), pv = scalar(p, "p");
    if (m.sign() < 0)
      throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
    SymEnv env;
    if (syms) {
      std::stringstream ss(syms);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || trim(item.substr(0, eq)).empty())
          throw Error(ErrorKind::InvalidArgument, "symbol value must look like NAME=VALUE: '" + item + "'");
        env[trim(item.substr(0, eq))] = parse_rat(item.substr(eq + 1));
      }
    }
    MotPoly s = series_expand(z->z, m);
    std::set<Rat> ts;
    for (const auto &[mono, c] : s.terms())
      ts.insert(mono.t);
    json j = json::array();
    std::vector<std::string> lines;
    for (const auto &t : ts) {
      Rat v = eval_L(s.coefficient_T(t), pv, env);
      j.push_back({{"T", to_json(t)}, {"value", to_json(v)}});
      lines.push_back("T^" + exponent_text(t) + ": " + (fmt == QZ_FMT_LATEX ? rat_latex(v) : rat_text(v)));
    }
    if (fmt == QZ_FMT_JSON)
      return j.dump();
    return lines.empty() ? std::string("0") : join(lines, "\n");
  });
}

void qz_zeta_free(qz_zeta *z) { delete z; }

qz_status qz_hj_check(int64_t d, int64_t a, int64_t b, const char *N, const char *nu, int *equal) {
  return guard([&] {
    need(equal, "equal");
    RatVec n = parse_vec(N, "N"), v = parse_vec(nu, "nu");
    if (n.size() != 2 || v.size() != 2)
      throw Error(ErrorKind::DimensionMismatch, "N and nu need 2 entries");
    ZetaExpr chain = stratified_zeta(hj_stratification(hj_resolve(d, a, b), n[0], n[1], v[0], v[1]));
    ZetaExpr direct = local_monomial_zeta(GroupAction::cyclic(d, {a, b}), n, v);
    *equal = ze_equal(chain, direct) ? 1 : 0;
  });
}

qz_status qz_group_info(const char *group, qz_format fmt, char **out) {
  return emit(out, [&] {
    need(group, "group");
    GroupAction g = parse_group(group);
    bool small = is_small(g);
    SmallReduction red = small_reduce(g);
    MotPoly gor = gor_measure_origin(g), orb = orb_measure_origin(g);
    std::vector<std::string> ms;
    for (auto v : red.m)
      ms.push_back(std::to_string(v));
    if (fmt == QZ_FMT_JSON) {
      json j{{"group", to_text(g)},
             {"dimension", g.n()},
             {"order", g.order()},
             {"small", small},
             {"small_reduction", {{"group", to_text(red.group)}, {"m", red.m}}},
             {"gorenstein_measure", to_json(gor)},
             {"orbifold_measure", to_json(orb)}};
      return j.dump();
    }
    auto poly = [&](const MotPoly &x) { return fmt == QZ_FMT_LATEX ? to_latex(x) : to_text(x); };
    std::ostringstream o;
    o << "group: " << to_text(g) << "\n"
      << "order: " << g.order() << "\n"
      << "small: " << (small ? "yes" : "no") << "\n"
      << "small reduction: " << to_text(red.group) << " via x_i^m_i, m = (" << join(ms, ",") << ")\n"
      << "gorenstein measure at origin: " << poly(gor) << "\n"
      << "orbifold measure at origin: " << poly(orb);
    return o.str();
  });
}

qz_status qz_tetra_stringy(int64_t d, int64_t q, qz_format fmt, char **out) {
  return emit(out, [&] {
    TetraParams tp = TetraParams::make(d, q);
    Rat est = stringy_euler_tetra(tp);
    TetraGroup g = build_tetra(d, q);
    std::size_t cc = conjugacy_count(g);
    bool match = est == Rat(static_cast<long>(cc));
    if (fmt == QZ_FMT_JSON) {
      json j{{"d", d},      {"q", q},          {"order", g.order()}, {"beta", tp.beta},
             {"stringy_euler", to_json(est)}, {"conjugacy_classes", cc}, {"match", match}};
      return j.dump();
    }
    std::ostringstream o;
    o << rat_text(est) << "\n"
      << "conjugacy classes: " << cc << (match ? " (match)" : " (MISMATCH)");
    return o.str();
  });
}

qz_status qz_yomdin_monodromy(int64_t m, int64_t k, int64_t p, int64_t q, int64_t a, qz_format fmt,
                              char **out) {
  return emit(out, [&] {
    YomdinParams y = YomdinParams::make(m, k, p, q, a);
    CyclotomicProduct c = yomdin_charpoly(y);
    const std::int64_t deg = degree(c);
    const std::int64_t milnor = (m - 1) * (m - 1) * (m - 1) + k * (p - 1) * (q - 1);
    std::optional<std::vector<Int>> poly;
    if (deg <= 200)
      poly = expand(c);
    const Rat s1(-(a + 2), m), s2(-y.nu1, y.m1);
    const std::vector<std::pair<std::string, Rat>> poles{{"-(a+2)/m", s1}, {"-nu1/m1", s2}};
    if (fmt == QZ_FMT_JSON) {
      json e = json::array();
      for (const auto &[M, x] : c.exponents())
        e.push_back({{"M", M}, {"e", x}});
      json j{{"params", {{"m", m}, {"k", k}, {"p", p}, {"q", q}, {"a", a}}},
             {"exponents", e},
             {"text", to_text(c)},
             {"degree", deg},
             {"milnor_formula", milnor},
             {"poles", json::array()}};
      if (poly) {
        json cs = json::array();
        for (const auto &v : *poly)
          cs.push_back(int_json(v));
        j["expanded"] = cs;
      }
      for (const auto &[label, s0] : poles) {
        std::int64_t o = to_int64(s0.den());
        j["poles"].push_back({{"label", label}, {"s0", to_json(s0)}, {"order", o},
                              {"phi_multiplicity", phi_multiplicity(c, o)},
                              {"eigenvalue", is_eigenvalue_pole(c, s0)}});
      }
      return j.dump();
    }
    std::ostringstream o;
    o << "Delta(t) = " << to_text(c) << "\n"
      << "degree: " << deg << " (Milnor formula " << milnor << (deg == milnor ? ", match)" : ", MISMATCH)");
    if (poly)
      o << "\nexpanded: " << polynomial_text(*poly);
    else if (deg <= 200)
      o << "\nexpanded: not a polynomial";
    for (const auto &[label, s0] : poles) {
      std::int64_t ord = to_int64(s0.den());
      o << "\npole " << label << " = " << rat_text(s0) << ": order " << ord << ", Phi multiplicity "
        << phi_multiplicity(c, ord) << ", eigenvalue " << (is_eigenvalue_pole(c, s0) ? "yes" : "no");
    }
    return o.str();
  });
}

}  // extern "C"
