#include "zeta_expr.hpp"

#include "errors.hpp"

#include <algorithm>
#include <iterator>

namespace qzeta {

StdFactor::StdFactor(Rat n, Rat v) : N(std::move(n)), nu(std::move(v)) {
  if (N.sign() < 0)
    throw Error(ErrorKind::InvalidArgument, "factor multiplicity N = " + N.str() + " is negative");
  if (nu.sign() <= 0)
    throw Error(ErrorKind::InvalidArgument, "factor weight nu = " + nu.str() + " is not positive");
}

ZetaExpr::ZetaExpr(const MotPoly &coeff) { add({}, coeff); }

ZetaExpr ZetaExpr::factor(const Rat &N, const Rat &nu) {
  ZetaExpr z;
  z.add({StdFactor(N, nu)}, MotPoly(1));
  return z;
}

ZetaExpr ZetaExpr::term(const MotPoly &coeff, FactorSet factors) {
  ZetaExpr z;
  z.add(std::move(factors), coeff);
  return z;
}

void ZetaExpr::add(FactorSet factors, const MotPoly &coeff) {
  if (coeff.is_zero())
    return;
  std::erase_if(factors, [](const StdFactor &f) { return f.is_unit(); });
  std::sort(factors.begin(), factors.end());
  auto [it, inserted] = terms_.try_emplace(std::move(factors), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

ZetaExpr &ZetaExpr::operator+=(const ZetaExpr &o) {
  for (const auto &[f, c] : o.terms_)
    add(f, c);
  return *this;
}

ZetaExpr &ZetaExpr::operator-=(const ZetaExpr &o) {
  for (const auto &[f, c] : o.terms_)
    add(f, -c);
  return *this;
}

ZetaExpr ZetaExpr::operator-() const {
  ZetaExpr r;
  r -= *this;
  return r;
}

ZetaExpr operator*(const ZetaExpr &a, const ZetaExpr &b) {
  ZetaExpr r;
  for (const auto &[fa, ca] : a.terms_)
    for (const auto &[fb, cb] : b.terms_) {
      FactorSet merged;
      merged.reserve(fa.size() + fb.size());
      std::merge(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(merged));
      r.add(std::move(merged), ca * cb);
    }
  return r;
}

std::set<StdFactor> ZetaExpr::factor_kinds() const {
  std::set<StdFactor> out;
  for (const auto &[f, c] : terms_)
    out.insert(f.begin(), f.end());
  return out;
}

namespace {

// (L-1) L^{-nu} T^N
MotPoly factor_numer(const StdFactor &f) {
  MotPoly r = MotPoly::monomial(1, 1 - f.nu, f.N);
  r.add_term(Monomial{-f.nu, f.N, {}}, -1);
  return r;
}

// 1 - L^{-nu} T^N
MotPoly factor_denom(const StdFactor &f) {
  MotPoly r(1);
  r.add_term(Monomial{-f.nu, f.N, {}}, -1);
  return r;
}

std::map<StdFactor, int> multiplicities(const FactorSet &fs) {
  std::map<StdFactor, int> m;
  for (const auto &f : fs)
    ++m[f];
  return m;
}

void cancel(RatFunc &r) {
  if (r.numer.is_zero()) {
    r.denom.clear();
    return;
  }
  for (auto it = r.denom.begin(); it != r.denom.end();) {
    while (it->second > 0) {
      auto q = r.numer.divide_binomial(-it->first.nu, it->first.N);
      if (!q)
        break;
      r.numer = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? r.denom.erase(it) : std::next(it);
  }
}

// acc += coeff * prod F over factors, then cancel.
void accumulate(RatFunc &acc, const MotPoly &coeff, const FactorSet &factors) {
  auto own = multiplicities(factors);
  std::map<StdFactor, int> common = acc.denom;
  for (const auto &[f, k] : own)
    common[f] = std::max(common[f], k);

  MotPoly lhs = acc.numer;
  MotPoly rhs = coeff;
  for (const auto &f : factors)
    rhs *= factor_numer(f);
  for (const auto &[f, k] : common) {
    auto ia = acc.denom.find(f);
    int ka = ia == acc.denom.end() ? 0 : ia->second;
    auto io = own.find(f);
    int ko = io == own.end() ? 0 : io->second;
    if (k > ka && !lhs.is_zero())
      lhs *= factor_denom(f).pow(k - ka);
    if (k > ko)
      rhs *= factor_denom(f).pow(k - ko);
  }
  acc.numer = lhs + rhs;
  acc.denom = std::move(common);
  cancel(acc);
}

int new_factor_count(const RatFunc &acc, const FactorSet &factors) {
  int n = 0;
  for (const auto &[f, k] : multiplicities(factors)) {
    auto it = acc.denom.find(f);
    n += std::max(0, k - (it == acc.denom.end() ? 0 : it->second));
  }
  return n;
}

// Greedy order: the next term is the one adding the fewest new denominator
// factors, so that telescoping sums (resolution chains) stay small.
RatFunc accumulate_all(const ZetaExpr::TermMap &terms) {
  std::vector<const ZetaExpr::TermMap::value_type *> pending;
  for (const auto &kv : terms)
    pending.push_back(&kv);
  RatFunc acc;
  while (!pending.empty()) {
    std::size_t best = 0;
    int best_cost = -1;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      int cost = new_factor_count(acc, pending[i]->first);
      if (best_cost < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
        if (cost == 0)
          break;
      }
    }
    accumulate(acc, pending[best]->second, pending[best]->first);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return acc;
}

Rat rat_pow(const Rat &base, const Int &e) {
  if (e == 0)
    return 1;
  if (!e.fits_ulong_p() && !Int(-e).fits_ulong_p())
    throw Error(ErrorKind::InvalidArgument, "exponent " + e.get_str() + " too large");
  unsigned long k = e > 0 ? e.get_ui() : Int(-e).get_ui();
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  if (e > 0)
    return Rat(n, d);
  if (n == 0)
    throw Error(ErrorKind::InvalidArgument, "negative power of zero");
  return Rat(d, n);
}

// Exact k-th root of a nonnegative integer, if any.
std::optional<Int> int_root(const Int &v, unsigned long k) {
  Int r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0)
    return std::nullopt;
  return r;
}

Rat power_of(const Rat &p, const Rat &exponent) {
  if (exponent.is_integer())
    return rat_pow(p, exponent.num());
  const Int den = exponent.den();
  if (p.sign() <= 0 || !den.fits_ulong_p())
    throw Error(ErrorKind::FractionalPowerUnevaluable,
                "L^(" + exponent.str() + ") is not evaluable at L = " + p.str());
  auto rn = int_root(p.num(), den.get_ui());
  auto rd = int_root(p.den(), den.get_ui());
  if (!rn || !rd)
    throw Error(ErrorKind::FractionalPowerUnevaluable,
                "L = " + p.str() + " has no exact " + den.get_str() + "-th root");
  return rat_pow(Rat(*rn, *rd), exponent.num());
}

}  // namespace

RatFunc ze_to_ratfunc(const ZetaExpr &z) { return accumulate_all(z.terms()); }

bool ze_equal(const ZetaExpr &a, const ZetaExpr &b) {
  if (a == b)
    return true;
  return ze_to_ratfunc(a - b).numer.is_zero();
}

Int euler_value(const MotPoly &x, const ChiEnv &chi) {
  Int total = 0;
  for (const auto &[m, c] : x.terms()) {
    Int v = c;
    for (const auto &[name, e] : m.sym.factors()) {
      auto it = chi.find(name);
      if (it == chi.end())
        throw Error(ErrorKind::MissingChi, "no Euler characteristic for [" + name + "]");
      Int p;
      mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(e));
      v *= p;
    }
    total += v;
  }
  return total;
}

TopZeta euler_specialize(const ZetaExpr &z, const ChiEnv &chi) {
  std::vector<TopZeta::Part> parts;
  for (const auto &[factors, coeff] : z.terms()) {
    Int v = euler_value(coeff, chi);
    if (v != 0)
      parts.push_back({Rat(v), factors});
  }
  return TopZeta::from_parts(std::move(parts));
}

MotPoly series_expand(const ZetaExpr &z, const Rat &M) {
  if (M.sign() < 0)
    throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  MotPoly out;
  for (const auto &[factors, coeff] : z.terms()) {
    Rat budget = M - coeff.min_t();
    Rat floor_sum = 0;
    for (const auto &f : factors) {
      if (f.N.is_zero())
        throw Error(ErrorKind::NotExpandable,
                    "factor Fac(0; " + f.nu.str() + ") has no expansion in T");
      floor_sum += f.N;
    }
    if (budget < floor_sum)
      continue;
    MotPoly prod(1);
    for (const auto &f : factors) {
      Rat bound = budget - floor_sum + f.N;
      MotPoly geo;
      for (Int j = 1; Rat(j) * f.N <= bound; ++j)
        geo.add_term(Monomial{-Rat(j) * f.nu, Rat(j) * f.N, {}}, 1);
      prod = (prod * (MotPoly::L() - MotPoly(1)) * geo).truncate_T(budget);
    }
    out += (coeff * prod).truncate_T(M);
  }
  return out;
}

Rat eval_L(const MotPoly &x, const Rat &p, const SymEnv &sym) {
  Rat total = 0;
  for (const auto &[m, c] : x.terms()) {
    if (!m.t.is_zero())
      throw Error(ErrorKind::TInCoefficient, "T^(" + m.t.str() + ") cannot be evaluated at a value of L");
    Rat v = Rat(c) * power_of(p, m.l);
    for (const auto &[name, e] : m.sym.factors()) {
      auto it = sym.find(name);
      if (it == sym.end())
        throw Error(ErrorKind::InvalidArgument, "no value for symbol [" + name + "]");
      v *= rat_pow(it->second, e);
    }
    total += v;
  }
  return total;
}

std::set<Rat> candidate_poles(const ZetaExpr &z) {
  std::set<Rat> out;
  for (const auto &f : z.factor_kinds())
    if (!f.N.is_zero())
      out.insert(-f.nu / f.N);
  return out;
}

SPoly::SPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void SPoly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

Rat SPoly::eval(const Rat &s) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    v = v * s + *it;
  return v;
}

SPoly operator+(const SPoly &a, const SPoly &b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    c[i] += b.c_[i];
  return SPoly(std::move(c));
}

SPoly operator*(const SPoly &a, const SPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return SPoly(std::move(c));
}

SPoly operator*(const Rat &k, const SPoly &a) {
  std::vector<Rat> c = a.c_;
  for (auto &x : c)
    x *= k;
  return SPoly(std::move(c));
}

SPoly SPoly::divide_root(const Rat &root) const {
  if (c_.size() <= 1)
    return {};
  std::vector<Rat> q(c_.size() - 1);
  Rat carry = 0;
  for (std::size_t i = c_.size() - 1; i >= 1; --i) {
    carry = c_[i] + carry * root;
    q[i - 1] = carry;
  }
  return SPoly(std::move(q));
}

namespace {

SPoly power(const SPoly &p, int e) {
  SPoly r = SPoly::constant(1);
  for (int i = 0; i < e; ++i)
    r = r * p;
  return r;
}

}  // namespace

TopZeta TopZeta::from_parts(std::vector<Part> parts) {
  TopZeta t;
  struct Flat {
    Rat scale;
    std::map<Rat, int> roots;
  };
  std::vector<Flat> flat;
  std::map<Rat, int> common;
  for (auto &p : parts) {
    std::sort(p.factors.begin(), p.factors.end());
    Flat f{p.coeff, {}};
    for (const auto &fac : p.factors) {
      if (fac.N.is_zero()) {
        f.scale /= fac.nu;
      } else {
        f.scale /= fac.N;
        ++f.roots[-fac.nu / fac.N];
      }
    }
    for (const auto &[r, k] : f.roots)
      common[r] = std::max(common[r], k);
    flat.push_back(std::move(f));
  }
  SPoly numer;
  for (const auto &f : flat) {
    SPoly term = SPoly::constant(f.scale);
    for (const auto &[r, k] : common) {
      auto it = f.roots.find(r);
      int own = it == f.roots.end() ? 0 : it->second;
      term = term * power(SPoly::linear_root(r), k - own);
    }
    numer = numer + term;
  }
  t.parts_ = std::move(parts);
  t.numer_ = std::move(numer);
  t.roots_ = std::move(common);
  t.reduce();
  return t;
}

TopZeta TopZeta::from_quotient(SPoly numer, std::map<Rat, int> roots) {
  TopZeta t;
  std::erase_if(roots, [](const auto &kv) { return kv.second <= 0; });
  t.numer_ = std::move(numer);
  t.roots_ = std::move(roots);
  t.reduce();
  return t;
}

void TopZeta::reduce() {
  if (numer_.is_zero()) {
    roots_.clear();
    return;
  }
  for (auto it = roots_.begin(); it != roots_.end();) {
    while (it->second > 0 && numer_.eval(it->first).is_zero()) {
      numer_ = numer_.divide_root(it->first);
      --it->second;
    }
    it = it->second == 0 ? roots_.erase(it) : std::next(it);
  }
}

Rat TopZeta::eval(const Rat &s) const {
  Rat den = 1;
  for (const auto &[r, k] : roots_)
    for (int i = 0; i < k; ++i)
      den *= s - r;
  if (den.is_zero())
    throw Error(ErrorKind::InvalidArgument, "s = " + s.str() + " is a pole");
  return numer_.eval(s) / den;
}

TopZeta operator+(const TopZeta &a, const TopZeta &b) {
  auto structured = [](const TopZeta &x) { return !x.parts_.empty() || x.numer_.is_zero(); };
  if (structured(a) && structured(b)) {
    auto parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return TopZeta::from_parts(std::move(parts));
  }
  std::map<Rat, int> common = a.roots_;
  for (const auto &[r, k] : b.roots_)
    common[r] = std::max(common[r], k);
  auto lift = [&](const TopZeta &x) {
    SPoly p = x.numer_;
    for (const auto &[r, k] : common) {
      auto it = x.roots_.find(r);
      p = p * power(SPoly::linear_root(r), k - (it == x.roots_.end() ? 0 : it->second));
    }
    return p;
  };
  return TopZeta::from_quotient(lift(a) + lift(b), common);
}

TopZeta operator*(const TopZeta &a, const TopZeta &b) {
  if (!a.parts_.empty() && !b.parts_.empty()) {
    std::vector<TopZeta::Part> parts;
    for (const auto &pa : a.parts_)
      for (const auto &pb : b.parts_) {
        FactorSet fs = pa.factors;
        fs.insert(fs.end(), pb.factors.begin(), pb.factors.end());
        parts.push_back({pa.coeff * pb.coeff, std::move(fs)});
      }
    return TopZeta::from_parts(std::move(parts));
  }
  std::map<Rat, int> roots = a.roots_;
  for (const auto &[r, k] : b.roots_)
    roots[r] += k;
  return TopZeta::from_quotient(a.numer_ * b.numer_, roots);
}

}  // namespace qzeta
