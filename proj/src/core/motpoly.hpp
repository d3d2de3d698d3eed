#pragma once

#include "rat.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

// Product of variety-class symbols, e.g. [C0]^2*[D]. Factors are kept sorted by
// name with exponents >= 1; the empty product is 1.
class SymMono {
public:
  SymMono() = default;
  static SymMono of(std::string name, int exponent = 1);

  bool empty() const { return factors_.empty(); }
  const std::vector<std::pair<std::string, int>> &factors() const { return factors_; }
  int degree() const;

  friend SymMono operator*(const SymMono &a, const SymMono &b);
  friend auto operator<=>(const SymMono &, const SymMono &) = default;
  friend bool operator==(const SymMono &, const SymMono &) = default;

private:
  std::vector<std::pair<std::string, int>> factors_;
};

// One monomial L^l * T^t * sym. Canonical order is lexicographic by (t, l, sym).
struct Monomial {
  Rat l;
  Rat t;
  SymMono sym;

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
    if (auto c = a.t <=> b.t; c != 0)
      return c;
    if (auto c = a.l <=> b.l; c != 0)
      return c;
    return a.sym <=> b.sym;
  }
};

Monomial operator*(const Monomial &a, const Monomial &b);

// Finite sum of integer multiples of monomials L^l T^t [sym], T = L^{-s}.
// Zero coefficients are never stored.
class MotPoly {
public:
  using TermMap = std::map<Monomial, Int>;

  MotPoly() = default;
  MotPoly(long c) { add_term({}, Int(c)); }
  MotPoly(const Int &c) { add_term({}, c); }

  static MotPoly monomial(const Int &coeff, const Rat &l, const Rat &t = 0, SymMono sym = {});
  // L^e
  static MotPoly L(const Rat &e = 1) { return monomial(1, e, 0); }
  // T^e
  static MotPoly T(const Rat &e = 1) { return monomial(1, 0, e); }
  static MotPoly symbol(const std::string &name) { return monomial(1, 0, 0, SymMono::of(name)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap &terms() const { return terms_; }

  void add_term(const Monomial &m, const Int &coeff);

  MotPoly &operator+=(const MotPoly &o);
  MotPoly &operator-=(const MotPoly &o);
  MotPoly &operator*=(const MotPoly &o) { return *this = *this * o; }
  MotPoly operator-() const;
  friend MotPoly operator+(MotPoly a, const MotPoly &b) { return a += b; }
  friend MotPoly operator-(MotPoly a, const MotPoly &b) { return a -= b; }
  friend MotPoly operator*(const MotPoly &a, const MotPoly &b);
  friend MotPoly operator*(const Int &c, const MotPoly &p);
  friend bool operator==(const MotPoly &a, const MotPoly &b) { return a.terms_ == b.terms_; }

  MotPoly pow(unsigned e) const;
  MotPoly times_monomial(const Monomial &m) const;

  bool has_T() const;
  bool has_symbols() const;
  std::set<std::string> symbols() const;

  // Smallest exponents over all terms; zero for the zero polynomial.
  Rat min_l() const;
  Rat min_t() const;

  // Terms with T-exponent <= bound.
  MotPoly truncate_T(const Rat &bound) const;
  // Sum of the terms with T-exponent exactly t, with T removed.
  MotPoly coefficient_T(const Rat &t) const;

  // Exact quotient by (1 - L^{dl} T^{dt}), or nullopt if it does not divide.
  // (dl, dt) must not both be zero.
  std::optional<MotPoly> divide_binomial(const Rat &dl, const Rat &dt) const;

private:
  TermMap terms_;
};

}  // namespace qzeta
