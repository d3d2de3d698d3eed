#pragma once

#include "rat.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qzeta {

using Exps = std::vector<std::int64_t>;

// Diagonal abelian action of type (d; A): generator j acts by
// x_i -> zeta_{d_j}^{a_ji} x_i. Elements are the distinct exponent vectors
// eps with gamma = diag(zeta_dExp^{eps_i}), dExp = lcm(d).
class GroupAction {
public:
  static constexpr std::int64_t kMaxTuples = 10'000'000;

  GroupAction() : GroupAction(trivial(1)) {}
  // Rows of A are reduced mod d_j. Throws InvalidArgument/SizeLimit.
  GroupAction(int n, std::vector<std::int64_t> orders, std::vector<Exps> rows);
  static GroupAction cyclic(std::int64_t d, Exps a);
  static GroupAction trivial(int n);

  int n() const { return n_; }
  const std::vector<std::int64_t> &orders() const { return d_; }
  const std::vector<Exps> &rows() const { return a_; }
  std::int64_t dexp() const { return dexp_; }
  // Sorted lexicographically; the identity comes first.
  const std::vector<Exps> &elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool is_trivial() const { return elems_.size() == 1; }

  // Same element set after scaling to a common exponent.
  bool same_group(const GroupAction &o) const;

private:
  void enumerate();

  int n_ = 1;
  std::vector<std::int64_t> d_;
  std::vector<Exps> a_;
  std::int64_t dexp_ = 1;
  std::vector<Exps> elems_;
};

// (1/dExp) sum k_i eps_i
Rat age(const Exps &eps, std::int64_t dexp, const std::vector<Rat> &k);
// (1/dExp) sum k_i e_i with e_i = eps_i if eps_i > 0 else dExp
Rat weight(const Exps &eps, std::int64_t dexp, const std::vector<Rat> &k);
Exps inverse(const Exps &eps, std::int64_t dexp);

// No element with exactly n-1 zero coordinates.
bool is_small(const GroupAction &g);

struct SmallReduction {
  GroupAction group;
  std::vector<std::int64_t> m;  // substitution y_i = x_i^{m_i}
};
SmallReduction small_reduce(const GroupAction &g);

// "(d1,...,dr; a11,...,a1n; ...; ar1,...,arn)"; the cyclic case is "(d; a1,...,an)".
// With expected_n > 0 a row of another length raises DimensionMismatch.
GroupAction parse_group(std::string_view text, int expected_n = 0, int line = 1, int column = 1);
std::string to_text(const GroupAction &g);

}  // namespace qzeta
