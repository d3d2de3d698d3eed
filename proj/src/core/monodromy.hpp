#pragma once

#include "resolution.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qzeta {

// prod (t^M - 1)^{e_M}; zero exponents are not stored.
class CyclotomicProduct {
public:
  CyclotomicProduct() = default;
  CyclotomicProduct(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init);

  void multiply(std::int64_t M, std::int64_t e);
  const std::map<std::int64_t, std::int64_t> &exponents() const { return e_; }

  friend bool operator==(const CyclotomicProduct &, const CyclotomicProduct &) = default;

private:
  std::map<std::int64_t, std::int64_t> e_;
};

CyclotomicProduct yomdin_charpoly(const YomdinParams &y);
std::int64_t degree(const CyclotomicProduct &c);
// Multiplicity of the o-th cyclotomic polynomial: sum of e_M over o | M.
std::int64_t phi_multiplicity(const CyclotomicProduct &c, std::int64_t o);
// exp(2 pi i s0) is a root: phi_multiplicity(c, den(s0)) > 0.
bool is_eigenvalue_pole(const CyclotomicProduct &c, const Rat &s0);

std::string to_text(const CyclotomicProduct &c);
// Coefficients from t^0 up; nullopt when the product is not a polynomial.
// SizeLimit when the degree exceeds 200.
std::optional<std::vector<Int>> expand(const CyclotomicProduct &c);
std::string polynomial_text(const std::vector<Int> &coeffs);

}  // namespace qzeta
