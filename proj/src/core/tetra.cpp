#include "tetra.hpp"

#include "errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace qzeta {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// B^{-s} D B^s: one step sends (x, y, z) to (z, x, y).
std::array<std::int64_t, 3> rotate(std::array<std::int64_t, 3> v, int s) {
  for (int k = 0; k < s; ++k)
    v = {v[2], v[0], v[1]};
  return v;
}

}  // namespace

TetraParams TetraParams::make(std::int64_t d, std::int64_t q) {
  if (d < 1 || q < 0 || q >= d || std::gcd(d, q) != 1)
    throw Error(ErrorKind::BadParams, "tetrahedral parameters need 0 <= q < d and gcd(d, q) = 1 (got d = " +
                                          std::to_string(d) + ", q = " + std::to_string(q) + ")");
  if (d > 2'000'000)
    throw Error(ErrorKind::BadParams, "d too large");
  TetraParams p;
  p.d = d;
  p.q = q;
  // q^3 + 1 mod d, avoiding overflow
  std::int64_t q3 = mod(mod(mod(q * q, d) * q, d) + 1, d);
  p.d_prime = std::gcd(d, q3);
  if (p.d_prime == 0)
    p.d_prime = d;
  p.alpha = std::gcd(d, mod(q + 1, d));
  p.beta = std::gcd(d, mod(q * q - q + 1, d));
  if (p.alpha == 0)
    p.alpha = d;
  if (p.beta == 0)
    p.beta = d;
  return p;
}

TetraGroup::TetraGroup(const TetraParams &p) : p_(p) {
  const std::int64_t d = p.d;
  const std::int64_t order = 3 * d * d * (d / p.d_prime);
  if (d > 10'000 || order > kMaxOrder)
    throw Error(ErrorKind::SizeLimit, "group of order 3d^3/d' = " + std::to_string(order) + " exceeds 10^6");
  std::unordered_set<std::uint64_t> seen;
  std::vector<TetraElement> diag;
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j)
      for (std::int64_t k = 0; k < d; ++k) {
        TetraElement e{0, {mod(j * p.q + k, d), mod(i + k * p.q, d), mod(i * p.q + j, d)}};
        if (seen.insert(key(e)).second)
          diag.push_back(e);
      }
  for (int s = 0; s < 3; ++s)
    for (auto e : diag) {
      e.shift = s;
      elems_.push_back(e);
    }
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i)
    index_.emplace(key(elems_[i]), i);
  if (static_cast<std::int64_t>(elems_.size()) != order)
    throw Error(ErrorKind::InvalidArgument, "tetrahedral enumeration disagrees with 3d^3/d'");
}

std::uint64_t TetraGroup::key(const TetraElement &e) const {
  auto d = static_cast<std::uint64_t>(p_.d);
  return ((static_cast<std::uint64_t>(e.shift) * d + static_cast<std::uint64_t>(e.diag[0])) * d +
          static_cast<std::uint64_t>(e.diag[1])) * d + static_cast<std::uint64_t>(e.diag[2]);
}

std::size_t TetraGroup::index_of(const TetraElement &e) const {
  auto it = index_.find(key(e));
  if (it == index_.end())
    throw Error(ErrorKind::InvalidArgument, "element not in group");
  return it->second;
}

TetraElement TetraGroup::mul(const TetraElement &a, const TetraElement &b) const {
  auto r = rotate(a.diag, b.shift);
  TetraElement out;
  out.shift = (a.shift + b.shift) % 3;
  for (int i = 0; i < 3; ++i)
    out.diag[static_cast<std::size_t>(i)] = mod(r[static_cast<std::size_t>(i)] + b.diag[static_cast<std::size_t>(i)], p_.d);
  return out;
}

TetraElement TetraGroup::inv(const TetraElement &a) const {
  // (B^s D)^{-1} = D^{-1} B^{-s} = B^{-s} (B^s D^{-1} B^{-s})
  int s = (3 - a.shift) % 3;
  std::array<std::int64_t, 3> neg{mod(-a.diag[0], p_.d), mod(-a.diag[1], p_.d), mod(-a.diag[2], p_.d)};
  return {s, rotate(neg, s)};
}

TetraGroup build_tetra(std::int64_t d, std::int64_t q) { return TetraGroup(TetraParams::make(d, q)); }

bool has_reflection(const TetraGroup &g) {
  // Elements B D with shift != 0 have three distinct eigenvalues.
  for (const auto &e : g.elements()) {
    if (e.shift != 0)
      continue;
    int zeros = (e.diag[0] == 0) + (e.diag[1] == 0) + (e.diag[2] == 0);
    if (zeros == 2)
      return true;
  }
  return false;
}

bool is_small_tetra(const TetraGroup &g) {
  bool by_formula = g.params().divides();
  if (by_formula == has_reflection(g))
    throw Error(ErrorKind::InvalidArgument, "smallness criterion disagrees with element scan");
  return by_formula;
}

std::size_t conjugacy_count(const TetraGroup &g) {
  const TetraElement gens[] = {g.gen_a(), g.gen_b()};
  TetraElement gens_inv[] = {g.inv(gens[0]), g.inv(gens[1])};
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> stack;
  std::size_t classes = 0;
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (seen[start])
      continue;
    ++classes;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const TetraElement x = g.elements()[stack.back()];
      stack.pop_back();
      for (int k = 0; k < 2; ++k) {
        std::size_t y = g.index_of(g.mul(g.mul(gens[k], x), gens_inv[k]));
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return classes;
}

Rat stringy_euler_tetra(const TetraParams &p) {
  if (!p.divides())
    throw Error(ErrorKind::NotSmall, "G_{d,q} is not small: d does not divide q^3+1");
  Rat v(p.d * p.d + 8 * p.beta, 3);
  if (!v.is_integer())
    throw Error(ErrorKind::InvalidArgument, "stringy Euler number is not an integer");
  return v;
}

}  // namespace qzeta
