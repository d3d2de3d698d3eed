#include "zetacore.hpp"

#include "errors.hpp"

#include <numeric>

namespace qzeta {

namespace {

RatVec ones(int n) { return RatVec(static_cast<std::size_t>(n), Rat(1)); }

// L^{a s + b} = L^b T^{-a}
MotPoly lpow(const Rat &a, const Rat &b) { return MotPoly::monomial(1, b, -a); }

void check_data(const RatVec &N, const RatVec &nu, int n) {
  if (static_cast<int>(N.size()) != n || static_cast<int>(nu.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "N and nu need " + std::to_string(n) + " entries");
  for (const auto &x : N)
    if (x.sign() < 0)
      throw Error(ErrorKind::InvalidArgument, "N entries must be nonnegative");
  for (const auto &x : nu)
    if (x.sign() <= 0)
      throw Error(ErrorKind::InvalidArgument, "nu entries must be positive");
}

bool divides(const Int &den, std::int64_t r) { return Int(r) % den == 0; }

}  // namespace

void Stratification::validate() const {
  if (n < 1)
    throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  if (r < 1)
    throw Error(ErrorKind::InvalidArgument, "Gorenstein index must be positive");
  for (std::size_t k = 0; k < strata.size(); ++k) {
    const auto &s = strata[k];
    if (s.group.n() != n)
      throw Error(ErrorKind::DimensionMismatch, "stratum " + std::to_string(k) + ": group of dimension " +
                                                    std::to_string(s.group.n()));
    check_data(s.N, s.nu, n);
    if (s.klass.has_T())
      throw Error(ErrorKind::InvalidArgument, "stratum " + std::to_string(k) + ": class carries a T power");
  }
}

std::vector<std::string> Stratification::warnings() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < strata.size(); ++k) {
    const auto &s = strata[k];
    for (const auto *v : {&s.N, &s.nu})
      for (const auto &x : *v)
        if (!divides(x.den(), r))
          out.push_back("stratum " + std::to_string(k) + ": denominator of " + x.str() +
                        " does not divide r = " + std::to_string(r));
    // group exponent must divide some power of r
    std::int64_t e = s.group.dexp();
    for (std::int64_t g; e > 1 && (g = std::gcd(e, r)) > 1;)
      e /= g;
    if (e != 1)
      out.push_back("stratum " + std::to_string(k) + ": group exponent " +
                    std::to_string(s.group.dexp()) + " does not divide a power of r");
  }
  return out;
}

MotPoly s_g_sum(const GroupAction &g, const RatVec &N, const RatVec &nu) {
  if (static_cast<int>(N.size()) != g.n() || static_cast<int>(nu.size()) != g.n())
    throw Error(ErrorKind::DimensionMismatch, "N and nu need " + std::to_string(g.n()) + " entries");
  MotPoly out;
  for (const auto &e : g.elements())
    out += lpow(age(e, g.dexp(), N), age(e, g.dexp(), nu));
  return out;
}

ZetaExpr local_monomial_zeta(const GroupAction &g, const RatVec &N, const RatVec &nu,
                             bool allow_nonsmall) {
  check_data(N, nu, g.n());
  if (!allow_nonsmall && !is_small(g))
    throw Error(ErrorKind::NotSmall, "group " + to_text(g) + " is not small");
  FactorSet fs;
  for (std::size_t i = 0; i < N.size(); ++i)
    fs.emplace_back(N[i], nu[i]);
  return ZetaExpr::term(s_g_sum(g, N, nu) * MotPoly::L(-g.n()), std::move(fs));
}

ZetaExpr stratified_zeta(const Stratification &s, bool allow_nonsmall) {
  s.validate();
  ZetaExpr out;
  for (const auto &st : s.strata) {
    if (!allow_nonsmall && !is_small(st.group))
      throw Error(ErrorKind::NotSmall, "stratum group " + to_text(st.group) + " is not small");
    FactorSet fs;
    for (std::size_t i = 0; i < st.N.size(); ++i)
      fs.emplace_back(st.N[i], st.nu[i]);
    out += ZetaExpr::term(st.klass * s_g_sum(st.group, st.N, st.nu) * MotPoly::L(-s.n), std::move(fs));
  }
  return out;
}

MotPoly gor_measure_origin(const GroupAction &g) {
  GroupAction h = small_reduce(g).group;
  MotPoly out;
  for (const auto &e : h.elements())
    out += MotPoly::L(age(e, h.dexp(), ones(h.n())) - h.n());
  return out;
}

MotPoly orb_measure_origin(const GroupAction &g) {
  MotPoly out;
  for (const auto &e : g.elements())
    out += MotPoly::L(-weight(e, g.dexp(), ones(g.n())));
  return out;
}

MotPoly veys_det_713(const Rat &N1, const Rat &N2, const Rat &nu1, const Rat &nu2) {
  const MotPoly b0 = lpow(N2, nu2);
  const MotPoly b1 = lpow((N1 + 3 * N2) / 7, (nu1 + 3 * nu2) / 7);
  const MotPoly b2 = lpow((3 * N1 + 2 * N2) / 7, (3 * nu1 + 2 * nu2) / 7);
  const MotPoly b3 = lpow((5 * N1 + N2) / 7, (5 * nu1 + nu2) / 7);
  const MotPoly b4 = lpow(N1, nu1);
  const MotPoly K1 = 1 + b1 + b1 * b1;
  const MotPoly K2 = 1 + b2;
  const MotPoly K3 = 1 + b3;
  // | K1   -b3   b2-1 |
  // | -b0   K2   -b1  |
  // | 0    -b4    K3  |
  return K1 * (K2 * K3 - b1 * b4) + b3 * (-b0 * K3) + (b2 - 1) * (b0 * b4);
}

Rat jet_count_oracle(const std::vector<std::int64_t> &N, int p, int j) {
  const int n = static_cast<int>(N.size());
  if (n < 1 || n > 2 || (p != 2 && p != 3) || j < 0 || j > 3)
    throw Error(ErrorKind::InvalidArgument, "jet oracle needs n <= 2, p in {2,3}, j <= 3");
  for (auto x : N)
    if (x < 1)
      throw Error(ErrorKind::InvalidArgument, "jet oracle needs positive N");
  const int m = j;
  const int digits = (m + 1) * n;
  std::int64_t total = 1;
  for (int k = 0; k < digits; ++k)
    total *= p;
  if (total > 100'000'000)
    throw Error(ErrorKind::BudgetExceeded, "jet enumeration exceeds 10^8 tuples");
  std::int64_t count = 0;
  std::vector<int> coeff(static_cast<std::size_t>(digits), 0);
  for (std::int64_t t = 0; t < total; ++t) {
    std::int64_t rest = t;
    for (auto &c : coeff) {
      c = static_cast<int>(rest % p);
      rest /= p;
    }
    std::int64_t sum = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int ord = -1;
      for (int k = 0; k <= m; ++k)
        if (coeff[static_cast<std::size_t>(i * (m + 1) + k)] != 0) {
          ord = k;
          break;
        }
      if (ord < 1)
        ok = false;
      else
        sum += N[static_cast<std::size_t>(i)] * ord;
    }
    if (ok && sum == j)
      ++count;
  }
  return Rat(Int(static_cast<long>(count)), Int(static_cast<long>(total)));
}

bool exponents_divide(const ZetaExpr &z, std::int64_t r) {
  for (const auto &[factors, coeff] : z.terms()) {
    for (const auto &f : factors)
      if (!divides(f.N.den(), r) || !divides(f.nu.den(), r))
        return false;
    for (const auto &[m, c] : coeff.terms())
      if (!divides(m.l.den(), r) || !divides(m.t.den(), r))
        return false;
  }
  return true;
}

}  // namespace qzeta
