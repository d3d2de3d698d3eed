#include "motpoly.hpp"

#include "errors.hpp"

#include <algorithm>

namespace qzeta {

SymMono SymMono::of(std::string name, int exponent) {
  SymMono m;
  if (exponent < 0)
    throw Error(ErrorKind::InvalidArgument, "negative exponent on class symbol [" + name + "]");
  if (exponent > 0)
    m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

int SymMono::degree() const {
  int d = 0;
  for (const auto &[name, e] : factors_)
    d += e;
  return d;
}

SymMono operator*(const SymMono &a, const SymMono &b) {
  SymMono out;
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  return Monomial{a.l + b.l, a.t + b.t, a.sym * b.sym};
}

MotPoly MotPoly::monomial(const Int &coeff, const Rat &l, const Rat &t, SymMono sym) {
  MotPoly p;
  p.add_term(Monomial{l, t, std::move(sym)}, coeff);
  return p;
}

void MotPoly::add_term(const Monomial &m, const Int &coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

MotPoly &MotPoly::operator+=(const MotPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

MotPoly &MotPoly::operator-=(const MotPoly &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

MotPoly MotPoly::operator-() const {
  MotPoly r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

MotPoly operator*(const MotPoly &a, const MotPoly &b) {
  MotPoly r;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      r.add_term(ma * mb, ca * cb);
  return r;
}

MotPoly operator*(const Int &c, const MotPoly &p) {
  if (c == 0)
    return {};
  MotPoly r = p;
  for (auto &[m, v] : r.terms_)
    v *= c;
  return r;
}

MotPoly MotPoly::pow(unsigned e) const {
  MotPoly result(1), base = *this;
  while (e) {
    if (e & 1u)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

MotPoly MotPoly::times_monomial(const Monomial &m) const {
  MotPoly r;
  for (const auto &[mm, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
  return r;
}

bool MotPoly::has_T() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto &kv) { return !kv.first.t.is_zero(); });
}

bool MotPoly::has_symbols() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto &kv) { return !kv.first.sym.empty(); });
}

std::set<std::string> MotPoly::symbols() const {
  std::set<std::string> out;
  for (const auto &[m, c] : terms_)
    for (const auto &[name, e] : m.sym.factors())
      out.insert(name);
  return out;
}

Rat MotPoly::min_l() const {
  if (terms_.empty())
    return 0;
  Rat best = terms_.begin()->first.l;
  for (const auto &[m, c] : terms_)
    best = std::min(best, m.l);
  return best;
}

Rat MotPoly::min_t() const {
  return terms_.empty() ? Rat(0) : terms_.begin()->first.t;
}

MotPoly MotPoly::truncate_T(const Rat &bound) const {
  MotPoly r;
  for (const auto &[m, c] : terms_) {
    if (m.t > bound)
      break;
    r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

MotPoly MotPoly::coefficient_T(const Rat &t) const {
  MotPoly r;
  for (const auto &[m, c] : terms_)
    if (m.t == t)
      r.add_term(Monomial{m.l, 0, m.sym}, c);
  return r;
}

std::optional<MotPoly> MotPoly::divide_binomial(const Rat &dl, const Rat &dt) const {
  if (dl.is_zero() && dt.is_zero())
    throw Error(ErrorKind::InvalidArgument, "division by 1 - 1");
  // Monomials split into chains m0 + k*(dl, dt), k in Z. Along a chain the
  // quotient coefficients are the prefix sums of the dividend's coefficients;
  // divisibility means every chain sums to zero.
  const bool use_t = !dt.is_zero();
  const Rat &step = use_t ? dt : dl;
  std::map<Monomial, std::map<Int, Int>> chains;
  for (const auto &[m, c] : terms_) {
    const Rat &coord = use_t ? m.t : m.l;
    Int k = (coord / step).floor();
    Monomial base{m.l - Rat(k) * dl, m.t - Rat(k) * dt, m.sym};
    chains[base][k] += c;
  }
  MotPoly q;
  for (const auto &[base, chain] : chains) {
    Int running = 0;
    Int prev_k = chain.begin()->first;
    for (const auto &[k, c] : chain) {
      // Fill the gap [prev_k, k) with the constant running sum.
      if (running != 0)
        for (Int j = prev_k; j < k; ++j)
          q.add_term(Monomial{base.l + Rat(j) * dl, base.t + Rat(j) * dt, base.sym}, running);
      running += c;
      prev_k = k;
    }
    if (running != 0)
      return std::nullopt;
  }
  return q;
}

}  // namespace qzeta
