#pragma once

#include "tetra.hpp"
#include "zetacore.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

// Hirzebruch-Jung chain of 1/d(a,b): E_0 = strict transform of {y=0},
// E_1..E_r exceptional, E_{r+1} = strict transform of {x=0}. Divisor E_i
// carries N = (c_i . (N1,N2))/d and nu = (c_i . (nu1,nu2))/d.
struct Chain2D {
  std::int64_t d = 1, a = 0, b = 0;
  std::vector<std::int64_t> kappa;                              // r entries, each >= 2
  std::vector<std::pair<std::int64_t, std::int64_t>> coeffs;   // c_1..c_r

  friend bool operator==(const Chain2D &, const Chain2D &) = default;
};

// NotCoprime unless gcd(d,a) = gcd(d,b) = 1; d = 1 gives the empty chain.
Chain2D hj_resolve(std::int64_t d, std::int64_t a, std::int64_t b);
Stratification hj_stratification(const Chain2D &c, const Rat &N1, const Rat &N2, const Rat &nu1,
                                 const Rat &nu2);

struct YomdinParams {
  std::int64_t m = 2, k = 1, p = 2, q = 3, a = 1;
  std::int64_t k1 = 1, k2 = 1;  // gcd(k,p), gcd(k,q)
  std::int64_t m1 = 0;          // pq(m+k)/(k1k2)
  std::int64_t nu1 = 0;         // (kp + kq + pq(a+2))/(k1k2)

  // BadParams unless m >= 2, k >= 1, p, q >= 2, gcd(p,q) = 1, a >= 1.
  static YomdinParams make(std::int64_t m, std::int64_t k, std::int64_t p, std::int64_t q,
                           std::int64_t a);
  Int chi_c0() const;  // -m^2 + 3m + (p-1)(q-1)
  Int chi_c1() const;  // k1 + k2 + 1 - k1k2
};

struct StrataWithChi {
  Stratification strata;
  ChiEnv chi;
  std::string notice;  // nonempty when the input was adjusted
};

StrataWithChi yomdin_stratification(const YomdinParams &y);
ZetaExpr yomdin_zeta(const YomdinParams &y);
TopZeta yomdin_top(const YomdinParams &y);

// Non-small G_{d,q} are replaced by G_{d',q mod d'} with a notice.
StrataWithChi tetra_stratification(const TetraParams &t, const Rat &N, const Rat &nu);

// lcm over strata of (group exponent) * (lcm of N, nu denominators)
std::int64_t gorenstein_index(const std::vector<Stratum> &strata);

}  // namespace qzeta
