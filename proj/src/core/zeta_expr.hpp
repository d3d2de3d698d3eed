#pragma once

#include "motpoly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qzeta {

// F(N, nu) = (L-1) L^{-(N s + nu)} / (1 - L^{-(N s + nu)}), with N >= 0 and nu > 0.
// In terms of T = L^{-s}: (L-1) L^{-nu} T^N / (1 - L^{-nu} T^N).
struct StdFactor {
  Rat N;
  Rat nu;

  StdFactor() : N(0), nu(1) {}
  StdFactor(Rat n, Rat v);

  // F(0, 1) == 1.
  bool is_unit() const { return N.is_zero() && nu == Rat(1); }

  friend bool operator==(const StdFactor &, const StdFactor &) = default;
  friend std::strong_ordering operator<=>(const StdFactor &a, const StdFactor &b) {
    if (auto c = a.N <=> b.N; c != 0)
      return c;
    return a.nu <=> b.nu;
  }
};

using FactorSet = std::vector<StdFactor>;  // sorted multiset

// Sum of coefficient * product of standard factors. Terms sharing a factor
// multiset are merged and F(0,1) is dropped on construction.
class ZetaExpr {
public:
  using TermMap = std::map<FactorSet, MotPoly>;

  ZetaExpr() = default;
  ZetaExpr(const MotPoly &coeff);
  ZetaExpr(long c) : ZetaExpr(MotPoly(c)) {}

  static ZetaExpr factor(const Rat &N, const Rat &nu);
  static ZetaExpr term(const MotPoly &coeff, FactorSet factors);

  bool is_zero() const { return terms_.empty(); }
  const TermMap &terms() const { return terms_; }

  ZetaExpr &operator+=(const ZetaExpr &o);
  ZetaExpr &operator-=(const ZetaExpr &o);
  ZetaExpr operator-() const;
  friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr &b) { return a += b; }
  friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr &b) { return a -= b; }
  friend ZetaExpr operator*(const ZetaExpr &a, const ZetaExpr &b);
  ZetaExpr &operator*=(const ZetaExpr &o) { return *this = *this * o; }

  // Syntactic identity of canonical forms (stronger than ze_equal).
  friend bool operator==(const ZetaExpr &a, const ZetaExpr &b) { return a.terms_ == b.terms_; }

  // Every StdFactor occurring in some term, as a set.
  std::set<StdFactor> factor_kinds() const;

private:
  void add(FactorSet factors, const MotPoly &coeff);

  TermMap terms_;
};

// numer / prod (1 - L^{-nu} T^N)^mult
struct RatFunc {
  MotPoly numer;
  std::map<StdFactor, int> denom;

  friend bool operator==(const RatFunc &, const RatFunc &) = default;
};

// Polynomial in s over Q, coefficients from low to high degree; no trailing zeros.
class SPoly {
public:
  SPoly() = default;
  explicit SPoly(std::vector<Rat> coeffs);
  static SPoly constant(const Rat &c) { return SPoly({c}); }
  // s - root
  static SPoly linear_root(const Rat &root) { return SPoly({-root, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat> &coeffs() const { return c_; }
  Rat eval(const Rat &s) const;

  friend SPoly operator+(const SPoly &a, const SPoly &b);
  friend SPoly operator*(const SPoly &a, const SPoly &b);
  friend SPoly operator*(const Rat &c, const SPoly &a);
  friend bool operator==(const SPoly &, const SPoly &) = default;

  // Quotient by (s - root); the caller guarantees eval(root) == 0.
  SPoly divide_root(const Rat &root) const;

private:
  void trim();
  std::vector<Rat> c_;
};

// Rational function of s from the Euler-characteristic specialization. Keeps
// the structured sum  sum_k c_k prod 1/(N s + nu)  and a reduced quotient
// numer / prod (s - root)^mult with numer coprime to the denominator.
class TopZeta {
public:
  struct Part {
    Rat coeff;
    FactorSet factors;
  };

  TopZeta() = default;
  static TopZeta from_parts(std::vector<Part> parts);
  static TopZeta from_quotient(SPoly numer, std::map<Rat, int> roots);

  const std::vector<Part> &parts() const { return parts_; }
  const SPoly &numer() const { return numer_; }
  // Root -> multiplicity of the reduced denominator prod (s - root)^mult.
  const std::map<Rat, int> &denom_roots() const { return roots_; }

  // Value at s; throws at a pole.
  Rat eval(const Rat &s) const;

  friend TopZeta operator+(const TopZeta &a, const TopZeta &b);
  friend TopZeta operator*(const TopZeta &a, const TopZeta &b);

  friend bool operator==(const TopZeta &a, const TopZeta &b) {
    return a.numer_ == b.numer_ && a.roots_ == b.roots_;
  }

private:
  void reduce();

  std::vector<Part> parts_;
  SPoly numer_;
  std::map<Rat, int> roots_;
};

using ChiEnv = std::map<std::string, Int>;
using SymEnv = std::map<std::string, Rat>;

// Terms are accumulated one at a time over a running common denominator, and
// every denominator factor that exactly divides the running numerator is
// cancelled after each step.
RatFunc ze_to_ratfunc(const ZetaExpr &z);
// Exact equality as rational functions (identity of cross-multiplied numerators).
bool ze_equal(const ZetaExpr &a, const ZetaExpr &b);
TopZeta euler_specialize(const ZetaExpr &z, const ChiEnv &chi);
// Expansion in T up to T-exponent M inclusive.
MotPoly series_expand(const ZetaExpr &z, const Rat &M);
Rat eval_L(const MotPoly &x, const Rat &p, const SymEnv &sym = {});
std::set<Rat> candidate_poles(const ZetaExpr &z);

// Value of a coefficient under L -> 1, T -> 1 and symbols -> chi.
Int euler_value(const MotPoly &x, const ChiEnv &chi);

}  // namespace qzeta
