// Acceptance gate: one line per criterion, exit status 1 if any fails.
//   acceptance            run all criteria
//   acceptance --only 4   run criterion 4 (repeatable)

#include "errors.hpp"
#include "monodromy.hpp"
#include "render.hpp"
#include "resolution.hpp"
#include "strata_io.hpp"
#include "tetra.hpp"
#include "zetacore.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace qzeta;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  void fail(const std::string &what) {
    pass = false;
    if (++failures <= 8)
      notes.push_back(what);
  }
};

struct Criterion {
  int id;
  const char *title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string rs(const Rat &r) { return r.raw().get_str(); }

// L^{a s + b}
MotPoly lp(const Rat &a, const Rat &b) { return MotPoly::monomial(1, b, -a); }

Rat random_rat(std::mt19937 &rng) {
  std::uniform_int_distribution<int> num(0, 40), den(1, 15);
  return Rat(num(rng), den(rng));
}

std::int64_t md(std::int64_t u, std::int64_t d) { return ((u % d) + d) % d; }

// ---------------------------------------------------------------- 1
Outcome sg_fidelity() {
  Outcome o;
  std::mt19937 rng(101);
  // (coefficient of N1, coefficient of N2) over 7, as listed for 1/7(1,3)
  const std::vector<std::pair<int, int>> listed{{0, 0}, {1, 3}, {2, 6}, {3, 2}, {4, 5}, {5, 1}, {6, 4}};
  auto g = GroupAction::cyclic(7, {1, 3});
  for (int trial = 0; trial < 10; ++trial) {
    Rat N1 = random_rat(rng), N2 = random_rat(rng), v1 = random_rat(rng) + 1, v2 = random_rat(rng) + 1;
    MotPoly expect;
    std::set<std::pair<Rat, Rat>> pairs;
    for (auto [x, y] : listed) {
      Rat es = (Rat(x) * N1 + Rat(y) * N2) / 7, ev = (Rat(x) * v1 + Rat(y) * v2) / 7;
      expect += lp(es, ev);
      pairs.emplace(es, ev);
    }
    MotPoly got = s_g_sum(g, {N1, N2}, {v1, v2});
    if (got != expect)
      o.fail("N=(" + rs(N1) + "," + rs(N2) + "), nu=(" + rs(v1) + "," + rs(v2) + "): " + to_text(got));
    else if (got.size() != pairs.size())
      o.fail("term count " + std::to_string(got.size()));
  }
  o.detail = "10 random rational substitutions";
  return o;
}

// ---------------------------------------------------------------- 2
Outcome veys() {
  Outcome o;
  std::mt19937 rng(202);
  auto g = GroupAction::cyclic(7, {1, 3});
  for (int trial = 0; trial < 25; ++trial) {
    Rat N1 = random_rat(rng), N2 = random_rat(rng), v1 = random_rat(rng) + 1, v2 = random_rat(rng) + 1;
    if (veys_det_713(N1, N2, v1, v2) != s_g_sum(g, {N1, N2}, {v1, v2}))
      o.fail("N=(" + rs(N1) + "," + rs(N2) + "), nu=(" + rs(v1) + "," + rs(v2) + ")");
  }
  o.detail = "25 random inputs";
  return o;
}

// ---------------------------------------------------------------- 3
Outcome hj_data() {
  Outcome o;
  Chain2D c = hj_resolve(7, 1, 3);
  if (c.kappa != std::vector<std::int64_t>{3, 2, 2})
    o.fail("kappa");
  if (c.coeffs != std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 3}, {3, 2}, {5, 1}})
    o.fail("coefficients");
  o.detail = "kappa=(3,2,2), c=(1,3),(3,2),(5,1)";
  return o;
}

// ---------------------------------------------------------------- 4
Outcome change_of_variables() {
  Outcome o;
  std::mt19937 rng(404);
  std::uniform_int_distribution<std::int64_t> dd(2, 40);
  std::uniform_int_distribution<int> nn(0, 3), vv(1, 3);
  int done = 0;
  while (done < 200) {
    std::int64_t d = dd(rng);
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(1, d - 1)(rng);
    std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, d - 1)(rng);
    if (std::gcd(a, d) != 1 || std::gcd(b, d) != 1)
      continue;
    Rat N1 = nn(rng), N2 = nn(rng), v1 = vv(rng), v2 = vv(rng);
    ZetaExpr chain = stratified_zeta(hj_stratification(hj_resolve(d, a, b), N1, N2, v1, v2));
    ZetaExpr direct = local_monomial_zeta(GroupAction::cyclic(d, {a, b}), {N1, N2}, {v1, v2});
    if (!ze_equal(chain, direct))
      o.fail("1/" + std::to_string(d) + "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    ++done;
  }
  o.detail = "200 coprime instances, d <= 40";
  return o;
}

// ---------------------------------------------------------------- 5
// element set by direct enumeration of generator powers
std::set<Exps> brute_elements(const std::vector<std::int64_t> &orders, const std::vector<Exps> &rows, int n) {
  std::int64_t dexp = 1;
  for (auto d : orders)
    dexp = std::lcm(dexp, d);
  std::set<Exps> out;
  std::vector<std::int64_t> t(orders.size(), 0);
  for (;;) {
    Exps e(n, 0);
    for (std::size_t j = 0; j < orders.size(); ++j)
      for (int i = 0; i < n; ++i)
        e[i] = md(e[i] + t[j] * rows[j][i] * (dexp / orders[j]), dexp);
    out.insert(e);
    std::size_t j = 0;
    while (j < t.size() && ++t[j] == orders[j])
      t[j++] = 0;
    if (j == t.size())
      break;
  }
  return out;
}

Outcome corollary_top() {
  Outcome o;
  std::mt19937 rng(505);
  std::uniform_int_distribution<int> nd(1, 4), ng(1, 2), ord(2, 12), nn(0, 3), vv(1, 4);
  int done = 0, attempts = 0, nontrivial = 0;
  while (done < 100 && ++attempts < 200000) {
    const int n = nd(rng);
    std::vector<std::int64_t> orders;
    std::vector<Exps> rows;
    for (int j = ng(rng); j > 0; --j) {
      std::int64_t d = ord(rng);
      Exps r(n);
      for (auto &x : r)
        x = std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng);
      orders.push_back(d);
      rows.push_back(r);
    }
    auto elems = brute_elements(orders, rows, n);
    if (elems.size() > 60)
      continue;
    bool small = true;
    for (const auto &e : elems)
      small = small && std::count(e.begin(), e.end(), 0) != n - 1;
    if (!small)
      continue;
    GroupAction g(n, orders, rows);
    RatVec N(n), nu(n);
    FactorSet fs;
    for (int i = 0; i < n; ++i) {
      N[i] = nn(rng);
      nu[i] = vv(rng);
      fs.emplace_back(N[i], nu[i]);
    }
    std::sort(fs.begin(), fs.end());
    const Rat order(static_cast<long>(elems.size()));
    TopZeta t = euler_specialize(local_monomial_zeta(g, N, nu), {});
    bool ok = g.order() == elems.size() && t == TopZeta::from_parts({{order, fs}});
    for (int k = 1; ok && k <= 3; ++k) {
      Rat s(2 * k + 1, 3), v = order;
      for (int i = 0; i < n; ++i)
        v /= N[i] * s + nu[i];
      ok = t.eval(s) == v;
    }
    if (!ok)
      o.fail(to_text(g));
    nontrivial += elems.size() > 1;
    ++done;
  }
  if (done < 100)
    o.fail("only " + std::to_string(done) + " small groups generated");
  o.detail = std::to_string(done) + " random small groups (" + std::to_string(nontrivial) + " nontrivial), n <= 4, |G| <= 60";
  return o;
}

// ---------------------------------------------------------------- 6
Outcome measures() {
  Outcome o;
  const MotPoly gor = MotPoly::L(-2) * (MotPoly(1) + MotPoly::L());
  const MotPoly orb = MotPoly::L(-2) + MotPoly::L(Rat(-3, 4)) + MotPoly::L(Rat(-3, 2)) + MotPoly::L(Rat(-5, 4));
  auto g2 = GroupAction::cyclic(2, {1, 1}), g4 = GroupAction::cyclic(4, {1, 2});
  if (gor_measure_origin(g2) != gor)
    o.fail("gorenstein (2;1,1): " + to_text(gor_measure_origin(g2)));
  if (gor_measure_origin(g4) != gor)
    o.fail("gorenstein (4;1,2): " + to_text(gor_measure_origin(g4)));
  if (orb_measure_origin(g4) != orb)
    o.fail("orbifold (4;1,2): " + to_text(orb_measure_origin(g4)));
  if (orb_measure_origin(g4) == gor_measure_origin(g4))
    o.fail("orbifold and gorenstein measures coincide");
  o.detail = "gor = " + to_text(gor) + ", orb = " + to_text(orb);
  return o;
}

// ---------------------------------------------------------------- 7
TopZeta yomdin_closed_form(const YomdinParams &y) {
  const Rat M(y.m), A2(y.a + 2), M1(y.m1), V1(y.nu1), chi0(y.chi_c0()), K1(y.k1), K2(y.k2), P(y.p), Q(y.q),
      K(y.k), KK(y.k1 * y.k2);
  const StdFactor f0(M, A2), fs(1, 1), fa(0, Rat(y.a)), f1(M1, V1);
  auto part = [](const Rat &c, FactorSet f) {
    std::sort(f.begin(), f.end());
    return TopZeta::Part{c, std::move(f)};
  };
  return TopZeta::from_parts({part(1 - chi0 + M, {f0}), part(chi0 - M - 1, {fs, f0}), part(2 - M, {fa, f0}),
                              part(M, {fs, fa, f0}),
                              part(K1 * K2 - K1 * Q / K2 - K2 * P / K1 + P * Q / KK, {f1}),
                              part(-K1 * K2 + K1 * Q / K2 + K2 * P / K1, {fs, f1}),
                              part((-K + K * Q + K * P) / KK, {f0, f1}), part(K / KK, {fs, f0, f1})});
}

Outcome yomdin_sweep() {
  Outcome o;
  int instances = 0, deg_bad = 0, phi_bad = 0, top_bad = 0, pole_bad = 0, a1_recorded = 0, a1_pass = 0;
  std::vector<std::string> phi_cases, pole_cases;
  for (std::int64_t m = 2; m <= 6; ++m)
    for (std::int64_t k = 1; k <= 4; ++k)
      for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 4}, {2, 5}})
        for (std::int64_t a = 1; a <= 3; ++a) {
          ++instances;
          auto y = YomdinParams::make(m, k, p, q, a);
          const std::string tag = "(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(p) +
                                  "," + std::to_string(q) + "," + std::to_string(a) + ")";
          CyclotomicProduct c = yomdin_charpoly(y);
          if (degree(c) != (m - 1) * (m - 1) * (m - 1) + k * (p - 1) * (q - 1)) {
            ++deg_bad;
            o.fail("degree " + tag);
          }
          std::set<std::int64_t> divisors;
          for (const auto &[M, e] : c.exponents())
            for (std::int64_t j = 1; j <= M; ++j)
              if (M % j == 0)
                divisors.insert(j);
          for (auto j : divisors)
            if (phi_multiplicity(c, j) < 0) {
              ++phi_bad;
              o.fail("Phi_" + std::to_string(j) + " multiplicity " + std::to_string(phi_multiplicity(c, j)) + " " + tag);
              break;
            }
          if (yomdin_top(y) != yomdin_closed_form(y)) {
            ++top_bad;
            o.fail("topological zeta " + tag);
          }
          const Rat s1(-(a + 2), m), s2(-y.nu1, y.m1);
          bool both = is_eigenvalue_pole(c, s1) && is_eigenvalue_pole(c, s2);
          if (a == 1) {
            ++a1_recorded;
            a1_pass += both;
          } else if (!both) {
            ++pole_bad;
            o.fail("pole " + (is_eigenvalue_pole(c, s1) ? "-nu1/m1=" + rs(s2) : "-(a+2)/m=" + rs(s1)) + " " + tag);
          }
        }
  std::ostringstream d;
  d << instances << " instances; degree mismatches " << deg_bad << ", negative Phi multiplicity " << phi_bad
    << ", topological mismatches " << top_bad << ", pole failures (a>=2) " << pole_bad << "; a=1 recorded "
    << a1_pass << "/" << a1_recorded << " with both poles eigenvalues";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 8
Outcome tetrahedral() {
  Outcome o;
  int count = 0;
  for (std::int64_t d = 1; d <= 15; ++d)
    for (std::int64_t q = 0; q < d; ++q) {
      if (std::gcd(d, q) != 1 || (q * q * q + 1) % d != 0)
        continue;
      ++count;
      const std::string tag = "(" + std::to_string(d) + "," + std::to_string(q) + ")";
      auto tp = TetraParams::make(d, q);
      TetraGroup g = build_tetra(d, q);
      if (static_cast<std::int64_t>(g.order()) != 3 * d * d)
        o.fail("order " + tag);
      if (Rat(static_cast<long>(conjugacy_count(g))) != Rat(d * d + 8 * tp.beta, 3))
        o.fail("conjugacy classes " + tag);
      for (auto [N, nu] : {std::pair<Rat, Rat>{1, 1}, {Rat(2, 3), Rat(5, 2)}, {3, 7}}) {
        auto s = tetra_stratification(tp, N, nu);
        TopZeta t = euler_specialize(stratified_zeta(s.strata), s.chi);
        SPoly lin({nu, N});
        SPoly num = SPoly::constant(Rat(d * d)) + Rat(8 * tp.beta) * (lin * lin);
        TopZeta expect = TopZeta::from_quotient(Rat(1) / (Rat(3) * N * N * N) * num, {{-nu / N, 3}});
        if (!(t == expect))
          o.fail("topological zeta " + tag + " N=" + rs(N) + " nu=" + rs(nu) + ": " + to_text(t));
      }
    }
  o.detail = std::to_string(count) + " pairs (d,q), d <= 15";
  return o;
}

// ---------------------------------------------------------------- 9
Outcome jets() {
  Outcome o;
  int checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<std::int64_t> N(n);
      RatVec Nr(n), nu(n, Rat(1));
      for (int i = 0; i < n; ++i) {
        N[i] = (mask >> i & 1) ? 2 : 1;
        Nr[i] = N[i];
      }
      MotPoly series = series_expand(local_monomial_zeta(GroupAction::trivial(n), Nr, nu), 3);
      for (int p : {2, 3})
        for (int j = 0; j <= 3; ++j) {
          Rat lhs = jet_count_oracle(N, p, j);
          Rat rhs = eval_L(series.coefficient_T(j), p);
          ++checked;
          if (lhs != rhs)
            o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + " j=" + std::to_string(j) + ": " +
                   rs(lhs) + " vs " + rs(rhs));
        }
    }
  o.detail = std::to_string(checked) + " (N, p, j) cases";
  return o;
}

// ---------------------------------------------------------------- 10
std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream b;
  b << in.rdbuf();
  return b.str();
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string &args) {
  std::string cmd = std::string("\"") + QZETA_CLI + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE *f = popen(cmd.c_str(), "r");
  if (!f)
    return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0)
    r.out.append(buf, got);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome cli_round_trip() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("qzeta_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  struct Case {
    std::string args;
    std::function<StrataFile()> build;
  };
  auto with_chi = [](Stratification s, const ChiEnv &chi) {
    StrataFile f{std::move(s), {}};
    for (const auto &[k, v] : chi)
      f.symbols[k] = v;
    return f;
  };
  std::vector<Case> cases{
      {"hj --d 7 --a 1 --b 3 --N 1,1 --nu 1,1", [] { return StrataFile{hj_stratification(hj_resolve(7, 1, 3), 1, 1, 1, 1), {}}; }},
      {"hj --d 11 --a 2 --b 5 --N 2,3 --nu 1,2", [] { return StrataFile{hj_stratification(hj_resolve(11, 2, 5), 2, 3, 1, 2), {}}; }},
      {"yomdin --m 3 --k 1 --p 2 --q 3 --a 1",
       [&] { auto y = yomdin_stratification(YomdinParams::make(3, 1, 2, 3, 1)); return with_chi(y.strata, y.chi); }},
      {"yomdin --m 4 --k 6 --p 2 --q 3 --a 2",
       [&] { auto y = yomdin_stratification(YomdinParams::make(4, 6, 2, 3, 2)); return with_chi(y.strata, y.chi); }},
      {"tetra --d 7 --q 3 --N 1/2 --nu 2",
       [&] { auto t = tetra_stratification(TetraParams::make(7, 3), Rat(1, 2), 2); return with_chi(t.strata, t.chi); }},
      {"tetra --d 9 --q 2",
       [&] { auto t = tetra_stratification(TetraParams::make(9, 2), 1, 1); return with_chi(t.strata, t.chi); }},
      {"monomial --group '(7;1,3)' --N 1,1 --nu 1,1",
       [] {
         Stratification s;
         s.n = 2;
         s.strata.push_back({MotPoly(1), {1, 1}, {1, 1}, GroupAction::cyclic(7, {1, 3})});
         s.r = gorenstein_index(s.strata);
         return StrataFile{s, {}};
       }},
  };
  int k = 0;
  for (const auto &c : cases) {
    ++k;
    const fs::path f1 = dir / ("a" + std::to_string(k) + ".strata"), f2 = dir / ("b" + std::to_string(k) + ".strata");
    RunResult r1 = run_cli(c.args + " --euler --json --emit-strata " + f1.string());
    RunResult r2 = run_cli(c.args + " --euler --json --emit-strata " + f2.string());
    if (r1.code != 0 || r2.code != 0) {
      o.fail(c.args + ": exit " + std::to_string(r1.code));
      continue;
    }
    if (r1.out != r2.out || slurp(f1) != slurp(f2))
      o.fail(c.args + ": output differs between runs");
    StrataFile parsed;
    try {
      parsed = read_strata_file(f1.string());
    } catch (const Error &e) {
      o.fail(c.args + ": emitted file does not parse: " + e.what());
      continue;
    }
    if (!(parsed == c.build()))
      o.fail(c.args + ": re-parsed stratification differs");
    if (print_strata(parsed) != slurp(f1))
      o.fail(c.args + ": printing is not canonical");
    RunResult r3 = run_cli("strata " + f1.string() + " --euler --json");
    if (r3.code != 0) {
      o.fail(c.args + ": strata run failed");
      continue;
    }
    auto j1 = nlohmann::json::parse(r1.out), j3 = nlohmann::json::parse(r3.out);
    if (j1["zeta"] != j3["zeta"] || j1["topological"] != j3["topological"])
      o.fail(c.args + ": zeta recomputed from the file differs");
    RunResult t1 = run_cli("strata " + f1.string()), t2 = run_cli("strata " + f1.string());
    if (t1.out != t2.out)
      o.fail(c.args + ": text output differs between runs");
  }
  fs::remove_all(dir);
  o.detail = std::to_string(cases.size()) + " emitted stratifications";
  return o;
}

}  // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> all{
      {1, "group sum of 1/7(1,3)", 1, sg_fidelity},
      {2, "Veys determinant equals group sum", 1, veys},
      {3, "Hirzebruch-Jung data of 1/7(1,3)", 1, hj_data},
      {4, "chain resolution equals quotient formula", 60, change_of_variables},
      {5, "topological zeta of small quotients", 30, corollary_top},
      {6, "Gorenstein and orbifold measures", 1, measures},
      {7, "Yomdin sweep", 60, yomdin_sweep},
      {8, "tetrahedral family", 120, tetrahedral},
      {9, "jet counts against series coefficients", 60, jets},
      {10, "CLI strata round trip and determinism", 10, cli_round_trip},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--only N]...\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto &c : all) {
    if (!only.empty() && !only.count(c.id))
      continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds)
      o.fail("took " + std::to_string(secs) + " s");
    std::printf("[%s] c%d %s: %s (%.3f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), secs, c.limit_seconds);
    for (const auto &n : o.notes)
      std::printf("       %s\n", n.c_str());
    if (o.failures > static_cast<int>(o.notes.size()))
      std::printf("       ... %d failures in total\n", o.failures);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
