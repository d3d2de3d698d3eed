#include "doctest.h"

#include "errors.hpp"
#include "expr_parse.hpp"
#include "render.hpp"
#include "zetacore.hpp"

#include <random>

using namespace qzeta;

namespace {

MotPoly P(const char *s) { return parse_motpoly(s); }

// L^{a s + b}
MotPoly lp(const Rat &a, const Rat &b) { return MotPoly::monomial(1, b, -a); }

Rat rnd(std::mt19937 &rng) {
  std::uniform_int_distribution<int> num(0, 30), den(1, 12);
  return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("S_G sums") {
  auto g = GroupAction::cyclic(7, {1, 3});
  // seven exponent pairs ((i N1 + (3i mod 7) N2)/7, same with nu)
  Rat N1(2, 3), N2(5), v1(1), v2(7, 4);
  MotPoly expect;
  for (int i = 0; i < 7; ++i) {
    int b = (3 * i) % 7;
    expect += lp((i * N1 + b * N2) / 7, (i * v1 + b * v2) / 7);
  }
  CHECK(s_g_sum(g, {N1, N2}, {v1, v2}) == expect);
  CHECK(s_g_sum(GroupAction::trivial(3), {1, 2, 3}, {1, 1, 1}) == MotPoly(1));
  CHECK(s_g_sum(GroupAction::cyclic(2, {1, 1}), {0, 0}, {1, 1}) == P("1 + L"));
  // S_G -> |G| under L, T -> 1
  CHECK(euler_value(s_g_sum(GroupAction::cyclic(12, {1, 5, 7}), {1, 2, 0}, {1, 1, 3}), {}) == 12);
}

TEST_CASE("local monomial zeta") {
  ZetaExpr z = local_monomial_zeta(GroupAction::trivial(1), {1}, {1});
  CHECK(z == ZetaExpr::term(MotPoly::L(-1), {StdFactor(1, 1)}));
  z = local_monomial_zeta(GroupAction::cyclic(2, {1, 1}), {0, 0}, {1, 1});
  CHECK(to_text(z) == "L^-2 * (1 + L)");
  try {
    local_monomial_zeta(GroupAction::cyclic(4, {1, 2}), {1, 1}, {1, 1});
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotSmall);
  }
  CHECK_NOTHROW(local_monomial_zeta(GroupAction::cyclic(4, {1, 2}), {1, 1}, {1, 1}, true));
  TopZeta t = euler_specialize(local_monomial_zeta(GroupAction::cyclic(7, {1, 3}), {2, 1}, {3, 1}), {});
  CHECK(t == TopZeta::from_parts({{7, {StdFactor(2, 3), StdFactor(1, 1)}}}));
}

TEST_CASE("stratified zeta") {
  Stratification s;
  s.n = 1;
  s.strata.push_back({MotPoly(1), {1}, {1}, GroupAction::trivial(1)});
  CHECK(stratified_zeta(s) == local_monomial_zeta(GroupAction::trivial(1), {1}, {1}));
  s.strata[0].N = {1, 2};
  CHECK_THROWS_AS(stratified_zeta(s), Error);
  Stratification t;
  t.n = 2;
  t.r = 6;
  t.strata.push_back({MotPoly::symbol("E") - 1, {Rat(1, 2), 0}, {1, 1}, GroupAction::cyclic(3, {1, 2})});
  t.strata.push_back({MotPoly(1), {1, 1}, {2, 1}, GroupAction::trivial(2)});
  CHECK(t.warnings().empty());
  CHECK(exponents_divide(stratified_zeta(t), 6));
  CHECK(euler_specialize(stratified_zeta(t), {{"E", 5}}) ==
        TopZeta::from_parts({{12, {StdFactor(Rat(1, 2), 1)}}, {1, {StdFactor(1, 2), StdFactor(1, 1)}}}));
  t.r = 5;
  CHECK(t.warnings().size() == 2);
}

TEST_CASE("Gorenstein and orbifold measures") {
  CHECK(gor_measure_origin(GroupAction::cyclic(2, {1, 1})) == P("L^-2 * (1 + L)"));
  CHECK(gor_measure_origin(GroupAction::cyclic(4, {1, 2})) == P("L^-2 * (1 + L)"));
  CHECK(gor_measure_origin(GroupAction::trivial(2)) == P("L^-2"));
  CHECK(orb_measure_origin(GroupAction::cyclic(2, {1, 1})) == P("L^-2 + L^-1"));
  CHECK(orb_measure_origin(GroupAction::cyclic(4, {1, 2})) ==
        P("L^-2 + L^(-3/4) + L^(-3/2) + L^(-5/4)"));
  CHECK(orb_measure_origin(GroupAction::trivial(2)) == P("L^-2"));
}

TEST_CASE("Veys determinant") {
  auto g = GroupAction::cyclic(7, {1, 3});
  std::mt19937 rng(31);
  for (int i = 0; i < 25; ++i) {
    Rat N1 = rnd(rng), N2 = rnd(rng), v1 = rnd(rng) + 1, v2 = rnd(rng) + 1;
    CHECK(veys_det_713(N1, N2, v1, v2) == s_g_sum(g, {N1, N2}, {v1, v2}));
  }
  CHECK(euler_value(veys_det_713(0, 0, 1, 1), {}) == 7);
  CHECK(veys_det_713(1, 1, 1, 1).size() == 7);
}

TEST_CASE("jet oracle") {
  CHECK(jet_count_oracle({1}, 2, 1) == Rat(1, 4));
  CHECK(jet_count_oracle({1}, 2, 0) == 0);
  for (std::int64_t N1 : {1, 2})
    for (std::int64_t N2 : {1, 2})
      for (int p : {2, 3})
        for (int j = 0; j <= 3; ++j) {
          ZetaExpr z = local_monomial_zeta(GroupAction::trivial(2), {N1, N2}, {1, 1});
          Rat expect = eval_L(series_expand(z, j).coefficient_T(j), p);
          CHECK(jet_count_oracle({N1, N2}, p, j) == expect);
        }
  try {
    jet_count_oracle({1, 1}, 5, 1);
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}
