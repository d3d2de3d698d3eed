#pragma once

#include "rat.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace qzeta {

struct TetraParams {
  std::int64_t d = 1;
  std::int64_t q = 0;
  std::int64_t d_prime = 1;  // gcd(d, q^3+1)
  std::int64_t alpha = 1;    // gcd(d, q+1)
  std::int64_t beta = 1;     // gcd(d, q^2-q+1)

  // Throws BadParams unless 0 <= q < d and gcd(d, q) = 1.
  static TetraParams make(std::int64_t d, std::int64_t q);

  bool divides() const { return d_prime == d; }  // d | q^3+1
  // alpha*beta/d; meaningful when d | q^3+1.
  Rat gamma() const { return Rat(alpha * beta, d); }
};

// B^shift * diag(xi^u, xi^v, xi^w), xi a primitive d-th root of unity, with
// A = diag(1, xi, xi^q) and B the cyclic permutation matrix.
struct TetraElement {
  int shift = 0;
  std::array<std::int64_t, 3> diag{0, 0, 0};

  friend bool operator==(const TetraElement &, const TetraElement &) = default;
  friend auto operator<=>(const TetraElement &, const TetraElement &) = default;
};

class TetraGroup {
public:
  static constexpr std::int64_t kMaxOrder = 1'000'000;

  explicit TetraGroup(const TetraParams &p);

  const TetraParams &params() const { return p_; }
  const std::vector<TetraElement> &elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }

  TetraElement mul(const TetraElement &a, const TetraElement &b) const;
  TetraElement inv(const TetraElement &a) const;
  TetraElement gen_a() const { return {0, {0, 1, p_.q % p_.d}}; }
  TetraElement gen_b() const { return {1, {0, 0, 0}}; }
  std::size_t index_of(const TetraElement &e) const;

private:
  std::uint64_t key(const TetraElement &e) const;

  TetraParams p_;
  std::vector<TetraElement> elems_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

TetraGroup build_tetra(std::int64_t d, std::int64_t q);
// d | q^3+1, cross-checked by scanning for elements with eigenvalue 1 of
// multiplicity exactly 2.
bool is_small_tetra(const TetraGroup &g);
bool has_reflection(const TetraGroup &g);
// Orbits of conjugation by the generators A and B.
std::size_t conjugacy_count(const TetraGroup &g);
// (d^2 + 8 beta)/3; NotSmall unless d | q^3+1.
Rat stringy_euler_tetra(const TetraParams &p);

}  // namespace qzeta
