#include "qzeta/qzeta.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Failure {
  qz_status status;
  std::string message;
};

void check(qz_status s) {
  if (s != QZ_OK)
    throw Failure{s, qz_last_error()};
}

std::string take(char *p) {
  std::string s = p ? p : "";
  qz_string_free(p);
  return s;
}

template <typename F>
std::string fetch(F &&call) {
  char *p = nullptr;
  check(call(&p));
  return take(p);
}

struct StrataDel {
  void operator()(qz_strata *s) const { qz_strata_free(s); }
};
struct ZetaDel {
  void operator()(qz_zeta *z) const { qz_zeta_free(z); }
};
using StrataPtr = std::unique_ptr<qz_strata, StrataDel>;
using ZetaPtr = std::unique_ptr<qz_zeta, ZetaDel>;

struct Options {
  bool euler = false, poles = false, latex = false, as_json = false, allow_nonsmall = false;
  std::optional<std::string> series, eval_L, emit;
  std::vector<std::string> syms;
};

// Collects sections in the chosen format and prints them at the end.
class Report {
public:
  explicit Report(const Options &o) : o_(o) {}

  qz_format fmt() const { return o_.as_json ? QZ_FMT_JSON : (o_.latex ? QZ_FMT_LATEX : QZ_FMT_TEXT); }

  void add(const std::string &key, const std::string &label, const std::string &value) {
    if (o_.as_json) {
      j_[key] = json::parse(value);
    } else if (label.empty()) {
      lines_.push_back(value);
    } else {
      lines_.push_back(label + value);
    }
  }
  void add_flag(const std::string &key, const std::string &line, bool v) {
    if (o_.as_json)
      j_[key] = v;
    else
      lines_.push_back(line);
  }
  void notice(const std::string &text) {
    std::cerr << "notice: " << text << "\n";
    if (o_.as_json)
      j_["notices"].push_back(text);
  }
  void print() const {
    if (o_.as_json) {
      std::cout << j_.dump(2) << "\n";
      return;
    }
    for (const auto &l : lines_)
      std::cout << l << "\n";
  }

private:
  const Options &o_;
  json j_ = json::object();
  std::vector<std::string> lines_;
};

void zeta_sections(qz_zeta *z, const Options &o, Report &r) {
  const qz_format f = r.fmt();
  r.add("zeta", "", fetch([&](char **p) { return qz_zeta_render(z, f, p); }));
  if (o.euler)
    r.add("topological", "Z_top = ", fetch([&](char **p) { return qz_zeta_euler(z, f, p); }));
  if (o.poles)
    r.add("candidate_poles", "candidate poles: ", fetch([&](char **p) { return qz_zeta_poles(z, f, p); }));
  if (o.series)
    r.add("series", "series to T^" + *o.series + ": ",
          fetch([&](char **p) { return qz_zeta_series(z, o.series->c_str(), f, p); }));
  if (o.eval_L) {
    std::string syms;
    for (const auto &s : o.syms)
      syms += (syms.empty() ? "" : ",") + s;
    std::string v = fetch([&](char **p) {
      return qz_zeta_eval_series(z, o.series->c_str(), o.eval_L->c_str(), syms.empty() ? nullptr : syms.c_str(), f, p);
    });
    r.add("eval_L", "coefficients at L = " + *o.eval_L + ":\n", v);
  }
}

void emit_strata(qz_strata *s, const Options &o, Report &r) {
  if (!o.emit)
    return;
  check(qz_strata_write(s, o.emit->c_str()));
  std::string w = fetch([&](char **p) { return qz_strata_warnings(s, p); });
  std::istringstream in(w);
  for (std::string line; std::getline(in, line);)
    r.notice(line);
}

void run_strata(qz_strata *s, const Options &o, Report &r) {
  if (o.allow_nonsmall)
    r.notice("non-small groups allowed: their group sums enter the zeta function unreduced");
  qz_zeta *raw = nullptr;
  check(qz_strata_zeta(s, o.allow_nonsmall, &raw));
  ZetaPtr z(raw);
  zeta_sections(z.get(), o, r);
  emit_strata(s, o, r);
}

void add_zeta_flags(CLI::App *c, Options &o) {
  c->add_flag("--euler", o.euler, "Euler characteristic specialization (topological zeta function)");
  c->add_flag("--poles", o.poles, "candidate poles -nu/N");
  auto *series = c->add_option("--series", o.series, "expand in T up to this exponent");
  c->add_option("--eval-L", o.eval_L, "evaluate the series coefficients at L = P")->needs(series);
  c->add_option("--sym", o.syms, "symbol value for --eval-L, NAME=VALUE (repeatable)");
  c->add_flag("--latex", o.latex, "LaTeX output");
  c->add_flag("--json", o.as_json, "JSON output");
  c->add_option("--emit-strata", o.emit, "write the stratification to FILE");
  c->add_flag("--allow-nonsmall", o.allow_nonsmall, "accept groups containing reflections");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Motivic and topological zeta functions of quotient singularities"};
  app.require_subcommand(1);
  Options o;

  auto *mono = app.add_subcommand("monomial", "zeta function of a monomial divisor on C^n/G");
  std::string group, Nv, nuv;
  mono->add_option("--group", group, "group literal, e.g. \"(7; 1,3)\"")->required();
  mono->add_option("--N", Nv, "multiplicities, e.g. 1,1")->required();
  mono->add_option("--nu", nuv, "nu values, e.g. 1,1")->required();
  add_zeta_flags(mono, o);

  auto *strata = app.add_subcommand("strata", "zeta function of a stratification file");
  std::string file;
  strata->add_option("FILE", file, "strata file")->required();
  add_zeta_flags(strata, o);

  auto *hj = app.add_subcommand("hj", "Hirzebruch-Jung resolution of 1/d(a,b)");
  std::int64_t d = 1, a = 0, b = 0;
  std::string hjN = "1,1", hjnu = "1,1";
  bool chain = false, hjcheck = false;
  hj->add_option("--d", d)->required();
  hj->add_option("--a", a)->required();
  hj->add_option("--b", b)->required();
  hj->add_option("--N", hjN, "multiplicities of the two axes");
  hj->add_option("--nu", hjnu, "nu values of the two axes");
  hj->add_flag("--chain", chain, "print the resolution chain");
  hj->add_flag("--check", hjcheck, "compare with the direct quotient formula");
  add_zeta_flags(hj, o);

  auto *yom = app.add_subcommand("yomdin", "Yomdin-type surface pair");
  std::int64_t m = 2, k = 1, p = 2, q = 3, ya = 1;
  bool monodromy = false;
  yom->add_option("--m", m)->required();
  yom->add_option("--k", k)->required();
  yom->add_option("--p", p)->required();
  yom->add_option("--q", q)->required();
  yom->add_option("--a", ya)->required();
  yom->add_flag("--monodromy", monodromy, "characteristic polynomial and pole checks");
  add_zeta_flags(yom, o);

  auto *tet = app.add_subcommand("tetra", "tetrahedral quotient G_{d,q}");
  std::int64_t td = 1, tq = 0;
  std::string tN = "1", tnu = "1";
  bool stringy = false;
  tet->add_option("--d", td)->required();
  tet->add_option("--q", tq)->required();
  auto *tNo = tet->add_option("--N", tN, "multiplicity of the divisor");
  auto *tnuo = tet->add_option("--nu", tnu, "nu of the divisor");
  tet->add_flag("--stringy", stringy, "stringy Euler number against the conjugacy class count");
  add_zeta_flags(tet, o);

  auto *grp = app.add_subcommand("group", "summary of a diagonal abelian group");
  std::string ggroup;
  bool gjson = false, glatex = false;
  grp->add_option("--group", ggroup, "group literal")->required();
  grp->add_flag("--json", gjson);
  grp->add_flag("--latex", glatex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }
  if (o.latex && o.as_json) {
    std::cerr << "error: --latex and --json are exclusive\n";
    return 2;
  }

  Report r(o);
  try {
    if (*mono) {
      if (o.allow_nonsmall)
        r.notice("non-small groups allowed: the group sum enters the zeta function unreduced");
      qz_zeta *raw = nullptr;
      check(qz_monomial_zeta(group.c_str(), Nv.c_str(), nuv.c_str(), o.allow_nonsmall, &raw));
      ZetaPtr z(raw);
      zeta_sections(z.get(), o, r);
      if (o.emit) {
        std::string text = "dimension = " + std::to_string(1 + std::count(Nv.begin(), Nv.end(), ',')) +
                           "\nstratum { class = 1 ; N = [" + Nv + "] ; nu = [" + nuv + "] ; group = " + group + " }\n";
        qz_strata *s = nullptr;
        check(qz_strata_parse(text.c_str(), &s));
        StrataPtr sp(s);
        emit_strata(sp.get(), o, r);
      }
    } else if (*strata) {
      qz_strata *s = nullptr;
      check(qz_strata_read(file.c_str(), &s));
      StrataPtr sp(s);
      run_strata(sp.get(), o, r);
    } else if (*hj) {
      if (chain)
        r.add("chain", "", fetch([&](char **out) { return qz_hj_chain(d, a, b, r.fmt(), out); }));
      qz_strata *s = nullptr;
      check(qz_hj_strata(d, a, b, hjN.c_str(), hjnu.c_str(), &s));
      StrataPtr sp(s);
      run_strata(sp.get(), o, r);
      if (hjcheck) {
        int eq = 0;
        check(qz_hj_check(d, a, b, hjN.c_str(), hjnu.c_str(), &eq));
        r.add_flag("check_equal", std::string("cross-check vs direct quotient formula: ") + (eq ? "EQUAL" : "DIFFERENT"),
                   eq != 0);
        if (!eq) {
          r.print();
          return 1;
        }
      }
    } else if (*yom) {
      qz_strata *s = nullptr;
      check(qz_yomdin_strata(m, k, p, q, ya, &s));
      StrataPtr sp(s);
      run_strata(sp.get(), o, r);
      if (monodromy)
        r.add("monodromy", "", fetch([&](char **out) { return qz_yomdin_monodromy(m, k, p, q, ya, r.fmt(), out); }));
    } else if (*tet) {
      bool want_zeta = !stringy || tNo->count() || tnuo->count() || o.euler || o.poles || o.series || o.emit;
      if (stringy)
        r.add("stringy", "", fetch([&](char **out) { return qz_tetra_stringy(td, tq, r.fmt(), out); }));
      if (want_zeta) {
        qz_strata *s = nullptr;
        char *notice = nullptr;
        check(qz_tetra_strata(td, tq, tN.c_str(), tnu.c_str(), &s, &notice));
        StrataPtr sp(s);
        std::string n = take(notice);
        if (!n.empty())
          r.notice(n);
        run_strata(sp.get(), o, r);
      }
    } else if (*grp) {
      qz_format f = gjson ? QZ_FMT_JSON : (glatex ? QZ_FMT_LATEX : QZ_FMT_TEXT);
      std::string info = fetch([&](char **out) { return qz_group_info(ggroup.c_str(), f, out); });
      std::cout << (gjson ? json::parse(info).dump(2) : info) << "\n";
      return 0;
    }
  } catch (const Failure &f) {
    std::cerr << "error: " << qz_status_name(f.status) << ": " << f.message << "\n";
    return 1;
  }
  r.print();
  return 0;
}
