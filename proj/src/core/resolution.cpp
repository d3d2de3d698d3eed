#include "resolution.hpp"

#include "errors.hpp"

#include <numeric>

namespace qzeta {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return mod(s0, m);
}

std::int64_t den64(const Rat &r) { return to_int64(r.den()); }

Stratum stratum(MotPoly klass, RatVec N, RatVec nu, GroupAction g) {
  return Stratum{std::move(klass), std::move(N), std::move(nu), std::move(g)};
}

}  // namespace

std::int64_t gorenstein_index(const std::vector<Stratum> &strata) {
  std::int64_t r = 1;
  for (const auto &s : strata) {
    std::int64_t l = 1;
    for (const auto *v : {&s.N, &s.nu})
      for (const auto &x : *v)
        l = std::lcm(l, den64(x));
    r = std::lcm(r, s.group.dexp() * l);
  }
  return r;
}

Chain2D hj_resolve(std::int64_t d, std::int64_t a, std::int64_t b) {
  if (d < 1)
    throw Error(ErrorKind::InvalidArgument, "d must be positive");
  if (std::gcd(d, mod(a, d)) != 1 && d != 1)
    throw Error(ErrorKind::NotCoprime, "gcd(d, a) != 1");
  if (std::gcd(d, mod(b, d)) != 1 && d != 1)
    throw Error(ErrorKind::NotCoprime, "gcd(d, b) != 1");
  Chain2D c{d, a, b, {}, {}};
  if (d == 1)
    return c;
  const std::int64_t e = mod(inverse_mod(a, d) * b, d);
  // d/e = k_1 - 1/(k_2 - 1/(...))
  for (std::int64_t num = d, den = e; den > 0;) {
    std::int64_t k = (num + den - 1) / den;
    c.kappa.push_back(k);
    std::int64_t rest = k * den - num;
    num = den;
    den = rest;
  }
  std::pair<std::int64_t, std::int64_t> prev{0, d}, cur{1, e};
  for (std::size_t i = 0; i < c.kappa.size(); ++i) {
    c.coeffs.push_back(cur);
    std::pair<std::int64_t, std::int64_t> next{c.kappa[i] * cur.first - prev.first,
                                               c.kappa[i] * cur.second - prev.second};
    prev = cur;
    cur = next;
  }
  if (cur != std::make_pair(d, std::int64_t{0}))
    throw Error(ErrorKind::InvalidArgument, "continued fraction recurrence does not close");
  return c;
}

Stratification hj_stratification(const Chain2D &c, const Rat &N1, const Rat &N2, const Rat &nu1,
                                 const Rat &nu2) {
  for (const auto *x : {&N1, &N2})
    if (x->sign() < 0)
      throw Error(ErrorKind::InvalidArgument, "N entries must be nonnegative");
  for (const auto *x : {&nu1, &nu2})
    if (x->sign() <= 0)
      throw Error(ErrorKind::InvalidArgument, "nu entries must be positive");
  const Rat d(static_cast<long>(c.d));
  // numerical data of E_0 .. E_{r+1}
  std::vector<std::pair<Rat, Rat>> data{{N2, nu2}};
  for (const auto &[x, y] : c.coeffs)
    data.emplace_back((Rat(x) * N1 + Rat(y) * N2) / d, (Rat(x) * nu1 + Rat(y) * nu2) / d);
  data.emplace_back(N1, nu1);

  Stratification s;
  s.n = 2;
  const auto triv = GroupAction::trivial(2);
  const MotPoly cstar = MotPoly::L() - 1;
  for (std::size_t i = 0; i + 1 < data.size(); ++i) {
    s.strata.push_back(stratum(MotPoly(1), {data[i + 1].first, data[i].first},
                               {data[i + 1].second, data[i].second}, triv));
    if (i + 2 < data.size())
      s.strata.push_back(stratum(cstar, {data[i + 1].first, 0}, {data[i + 1].second, 1}, triv));
  }
  std::int64_t l = 1;
  for (const auto *x : {&N1, &N2, &nu1, &nu2})
    l = std::lcm(l, den64(*x));
  s.r = c.d * l;
  return s;
}

YomdinParams YomdinParams::make(std::int64_t m, std::int64_t k, std::int64_t p, std::int64_t q,
                                std::int64_t a) {
  if (m < 2 || k < 1 || p < 2 || q < 2 || a < 1 || std::gcd(p, q) != 1)
    throw Error(ErrorKind::BadParams, "Yomdin parameters need m >= 2, k >= 1, p, q >= 2 with gcd(p,q) = 1, a >= 1");
  if (m > 100000 || k > 100000 || p > 100000 || q > 100000 || a > 100000)
    throw Error(ErrorKind::BadParams, "Yomdin parameters too large");
  YomdinParams y;
  y.m = m;
  y.k = k;
  y.p = p;
  y.q = q;
  y.a = a;
  y.k1 = std::gcd(k, p);
  y.k2 = std::gcd(k, q);
  y.m1 = p * q * (m + k) / (y.k1 * y.k2);
  y.nu1 = (k * p + k * q + p * q * (a + 2)) / (y.k1 * y.k2);
  return y;
}

Int YomdinParams::chi_c0() const { return Int(-m * m + 3 * m + (p - 1) * (q - 1)); }
Int YomdinParams::chi_c1() const { return Int(k1 + k2 + 1 - k1 * k2); }

StrataWithChi yomdin_stratification(const YomdinParams &y) {
  const std::int64_t kk = y.k1 * y.k2;
  const Rat m(y.m), a2(y.a + 2), a(y.a), m1(y.m1), n1(y.nu1);
  const MotPoly L = MotPoly::L(), C0 = MotPoly::symbol("C0"), C1 = MotPoly::symbol("C1");
  const auto triv = GroupAction::trivial(3);
  const auto g6 = GroupAction::cyclic(y.q / y.k2, {y.k * y.p / kk, -1, 0});
  const auto g7 = GroupAction::cyclic(y.p / y.k1, {-1, y.k * y.q / kk, 0});
  const auto g8 = GroupAction::cyclic(y.k / kk, {0, -1, y.p * y.q / kk});
  const auto g12 = GroupAction::cyclic(y.p * y.q / kk, {y.k * y.p / kk, y.k * y.q / kk, -1});
  const auto g13 = GroupAction::cyclic(y.k * y.q / kk, {y.k * y.p / kk, -1, y.p * y.q / kk});
  const auto g14 = GroupAction::cyclic(y.k * y.p / kk, {-1, y.k * y.q / kk, y.p * y.q / kk});
  const std::int64_t mm = y.m;

  StrataWithChi out;
  auto &st = out.strata.strata;
  st.push_back(stratum(L * L - C0 + mm, {0, 0, m}, {1, 1, a2}, triv));                          // Y0
  st.push_back(stratum(C0 - (mm + 1), {1, 0, m}, {1, 1, a2}, triv));                           // Y1
  st.push_back(stratum(L + (1 - mm), {0, 0, m}, {1, a, a2}, triv));                            // Y2
  st.push_back(stratum(MotPoly(mm), {1, 0, m}, {1, a, a2}, triv));                             // Y3
  st.push_back(stratum(L * L - MotPoly(2) * L - C1 + (y.k1 + y.k2 + 2), {0, m1, 0}, {1, n1, 1}, triv)); // Y4
  st.push_back(stratum(C1 - (y.k1 + y.k2 + 1), {1, m1, 0}, {1, n1, 1}, triv));                 // Y5
  st.push_back(stratum(L - (y.k1 + 1), {0, m1, 0}, {1, n1, 1}, g6));                           // Y6
  st.push_back(stratum(L - (y.k2 + 1), {m1, 0, 0}, {n1, 1, 1}, g7));                           // Y7
  st.push_back(stratum(L - 2, {0, m1, m}, {1, n1, a2}, g8));                                   // Y8
  st.push_back(stratum(MotPoly(y.k1), {1, m1, 0}, {1, n1, 1}, g6));                            // Y9
  st.push_back(stratum(MotPoly(y.k2), {m1, 1, 0}, {n1, 1, 1}, g7));                            // Y10
  st.push_back(stratum(MotPoly(1), {1, m1, m}, {1, n1, a2}, g8));                              // Y11
  st.push_back(stratum(MotPoly(1), {0, 0, m1}, {1, 1, n1}, g12));                              // Y12
  st.push_back(stratum(MotPoly(1), {0, m1, m}, {1, n1, a2}, g13));                             // Y13
  st.push_back(stratum(MotPoly(1), {m1, 0, m}, {n1, 1, a2}, g14));                             // Y14
  out.strata.n = 3;
  out.strata.r = gorenstein_index(st);
  out.chi = {{"C0", y.chi_c0()}, {"C1", y.chi_c1()}};
  return out;
}

ZetaExpr yomdin_zeta(const YomdinParams &y) { return stratified_zeta(yomdin_stratification(y).strata); }

TopZeta yomdin_top(const YomdinParams &y) {
  auto s = yomdin_stratification(y);
  return euler_specialize(stratified_zeta(s.strata), s.chi);
}

StrataWithChi tetra_stratification(const TetraParams &input, const Rat &N, const Rat &nu) {
  if (N.sign() < 0 || nu.sign() <= 0)
    throw Error(ErrorKind::InvalidArgument, "tetrahedral data need N >= 0 and nu > 0");
  StrataWithChi out;
  TetraParams t = input;
  if (!t.divides()) {
    t = TetraParams::make(input.d_prime, input.q % input.d_prime);
    out.notice = "G_{" + std::to_string(input.d) + "," + std::to_string(input.q) +
                 "} is not small; using its small quotient G_{" + std::to_string(t.d) + "," +
                 std::to_string(t.q) + "}";
  }
  const std::int64_t d = t.d, q = t.q, beta = t.beta, alpha = t.alpha;
  const std::int64_t c = (q * q - q + 1) / beta;
  const Rat x = Rat(3) * N / Rat(beta), xv = Rat(3) * nu / Rat(beta);
  const MotPoly E = MotPoly::symbol("E"), D = MotPoly::symbol("D");
  const auto triv = GroupAction::trivial(3);

  auto &st = out.strata.strata;
  st.push_back(stratum(E - D - 3, {x, 0, 0}, {xv, 1, 1}, triv));
  st.push_back(stratum(D - 1, {x, 0, N}, {xv, 1, nu}, GroupAction::cyclic(d / beta, {q, 0, c})));
  st.push_back(stratum(MotPoly(1), {x, N, N}, {xv, nu, nu}, GroupAction(3, {d, d / beta}, {{0, 1, q}, {q, 0, c}})));
  const std::int64_t gamma = alpha * beta / d;
  for (std::int64_t k = 0; k < 3; ++k) {
    std::int64_t first = d % 3 != 0 ? k * beta : -k * ((q + 1) / alpha) * gamma;
    st.push_back(stratum(MotPoly(1), {x, 0, 0}, {xv, 1, 1}, GroupAction::cyclic(3, {first, 1, 2})));
  }
  out.strata.n = 3;
  out.strata.r = gorenstein_index(st);
  out.chi = {{"E", Int(3)}, {"D", Int(1)}};
  return out;
}

}  // namespace qzeta
