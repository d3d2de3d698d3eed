#pragma once

#include "groups.hpp"
#include "zeta_expr.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qzeta {

using RatVec = std::vector<Rat>;

struct Stratum {
  MotPoly klass;  // no T powers
  RatVec N;
  RatVec nu;
  GroupAction group;

  friend bool operator==(const Stratum &a, const Stratum &b) {
    return a.klass == b.klass && a.N == b.N && a.nu == b.nu && a.group.same_group(b.group);
  }
};

struct Stratification {
  int n = 1;
  std::int64_t r = 1;  // Gorenstein index
  std::vector<Stratum> strata;

  // DimensionMismatch / InvalidArgument on broken invariants.
  void validate() const;
  // Soft checks: denominators dividing r, group exponents dividing a power of r.
  std::vector<std::string> warnings() const;

  friend bool operator==(const Stratification &, const Stratification &) = default;
};

// sum over gamma of L^{age(gamma, nu)} T^{-age(gamma, N)}, i.e. L^{age_N s + age_nu}.
MotPoly s_g_sum(const GroupAction &g, const RatVec &N, const RatVec &nu);
// S_G L^{-n} prod F(N_i, nu_i). Non-small groups raise NotSmall unless allowed.
ZetaExpr local_monomial_zeta(const GroupAction &g, const RatVec &N, const RatVec &nu,
                             bool allow_nonsmall = false);
// L^{-n} sum_k [Y_k] S_{G_k} prod F(N_ik, nu_ik)
ZetaExpr stratified_zeta(const Stratification &s, bool allow_nonsmall = false);

// Gorenstein measure of arcs at the origin, computed on the small reduction.
MotPoly gor_measure_origin(const GroupAction &g);
// sum over gamma of L^{-weight(gamma, 1)}
MotPoly orb_measure_origin(const GroupAction &g);

// The 3x3 determinant D_r for the resolution chain of 1/7(1,3).
MotPoly veys_det_713(const Rat &N1, const Rat &N2, const Rat &nu1, const Rat &nu2);

// Brute-force jet count for the smooth monomial case: tuples of polynomials of
// degree <= j over F_p, every component vanishing at the origin, with
// sum N_i ord_t = j, normalized by p^{-(j+1)n}.
Rat jet_count_oracle(const std::vector<std::int64_t> &N, int p, int j);

// True when every exponent denominator (L, T, N, nu) of z divides r.
bool exponents_divide(const ZetaExpr &z, std::int64_t r);

}  // namespace qzeta
