#include "doctest.h"

#include "errors.hpp"
#include "groups.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace qzeta;

namespace {

std::vector<Rat> ones(int n) { return std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)); }

GroupAction random_group(std::mt19937 &rng, int n) {
  std::uniform_int_distribution<int> rcount(1, 2), ord(1, 8), ex(-9, 9);
  int r = rcount(rng);
  std::vector<std::int64_t> d;
  std::vector<Exps> a;
  for (int j = 0; j < r; ++j) {
    d.push_back(ord(rng));
    Exps row;
    for (int i = 0; i < n; ++i)
      row.push_back(ex(rng));
    a.push_back(row);
  }
  return GroupAction(n, d, a);
}

}  // namespace

TEST_CASE("enumeration") {
  auto g = GroupAction::cyclic(7, {1, 3});
  REQUIRE(g.order() == 7);
  std::set<Exps> expect;
  for (int i = 0; i < 7; ++i)
    expect.insert({i, (3 * i) % 7});
  CHECK(std::set<Exps>(g.elements().begin(), g.elements().end()) == expect);
  CHECK(GroupAction::cyclic(1, {0, 0, 0}).elements() == std::vector<Exps>{{0, 0, 0}});
  // The order-2 row (2,0) acts trivially: eps = 2 * (4/2) = 0 mod 4.
  GroupAction h(2, {4, 2}, {{1, 2}, {2, 0}});
  CHECK(h.order() == 4);
  CHECK(h.dexp() == 4);
  CHECK(GroupAction(2, {4, 2}, {{1, 1}, {1, 0}}).order() == 8);
}

TEST_CASE("age and weight") {
  CHECK(age({0, 0}, 5, {Rat(3), Rat(1, 2)}) == 0);
  CHECK(age({1, 2}, 4, ones(2)) == Rat(3, 4));
  CHECK(age({1, 3}, 7, {Rat(2), Rat(5)}) == Rat(17, 7));
  CHECK(weight({0, 0}, 3, ones(2)) == 2);
  CHECK(weight({1, 1}, 2, ones(2)) == 1);
  // weights of 1/4(1,2): 2, 3/4, 3/2, 5/4
  std::multiset<Rat> w;
  auto g = GroupAction::cyclic(4, {1, 2});
  for (const auto &e : g.elements())
    w.insert(weight(e, 4, ones(2)));
  CHECK(w == std::multiset<Rat>{Rat(2), Rat(3, 4), Rat(3, 2), Rat(5, 4)});
}

TEST_CASE("weight and age of the inverse add up") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int t = 0; t < 40; ++t) {
    auto g = random_group(rng, 3);
    for (int r = 0; r < 50; ++r) {
      std::vector<Rat> k, k2;
      for (int i = 0; i < 3; ++i) {
        k.push_back(Rat(num(rng), den(rng)));
        k2.push_back(Rat(num(rng), den(rng)));
      }
      Rat sum = k[0] + k[1] + k[2];
      for (const auto &e : g.elements()) {
        CHECK(weight(e, g.dexp(), k) + age(inverse(e, g.dexp()), g.dexp(), k) == sum);
        std::vector<Rat> ks{k[0] + k2[0], k[1] + k2[1], k[2] + k2[2]};
        CHECK(age(e, g.dexp(), ks) == age(e, g.dexp(), k) + age(e, g.dexp(), k2));
      }
    }
  }
}

TEST_CASE("group axioms and orders") {
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    auto g = random_group(rng, 1 + t % 4);
    std::set<Exps> s(g.elements().begin(), g.elements().end());
    CHECK(s.count(Exps(static_cast<std::size_t>(g.n()), 0)));
    std::int64_t prod = 1;
    for (auto d : g.orders())
      prod *= d;
    CHECK(prod % static_cast<std::int64_t>(g.order()) == 0);
    for (const auto &a : g.elements()) {
      CHECK(s.count(inverse(a, g.dexp())));
      for (const auto &b : g.elements()) {
        Exps c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
          c[i] = (a[i] + b[i]) % g.dexp();
        CHECK(s.count(c));
      }
    }
  }
  for (int d = 1; d <= 30; ++d)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; b += 3)
        if (std::gcd(std::gcd(d, a), b) == 1)
          CHECK(GroupAction::cyclic(d, {a, b}).order() == static_cast<std::size_t>(d));
}

TEST_CASE("smallness") {
  CHECK(is_small(GroupAction::cyclic(2, {1, 1})));
  CHECK_FALSE(is_small(GroupAction::cyclic(4, {1, 2})));
  CHECK(is_small(GroupAction::cyclic(7, {1, 3})));
  CHECK_FALSE(is_small(GroupAction::cyclic(2, {1})));
  CHECK(is_small(GroupAction::trivial(1)));
}

TEST_CASE("small reduction") {
  auto r = small_reduce(GroupAction::cyclic(4, {1, 2}));
  CHECK(r.group.dexp() == 2);
  CHECK(r.group.elements() == std::vector<Exps>{{0, 0}, {1, 1}});
  CHECK(r.m == std::vector<std::int64_t>{2, 1});
  r = small_reduce(GroupAction::cyclic(2, {1, 1}));
  CHECK(r.group.same_group(GroupAction::cyclic(2, {1, 1})));
  CHECK(r.m == std::vector<std::int64_t>{1, 1});
  r = small_reduce(GroupAction(2, {4, 2}, {{1, 0}, {0, 1}}));
  CHECK(r.group.is_trivial());
  CHECK(r.m == std::vector<std::int64_t>{4, 2});

  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    auto g = random_group(rng, 1 + t % 3);
    auto once = small_reduce(g);
    CHECK(is_small(once.group));
    auto twice = small_reduce(once.group);
    CHECK(twice.group.same_group(once.group));
    CHECK(std::all_of(twice.m.begin(), twice.m.end(), [](auto x) { return x == 1; }));
  }
}

TEST_CASE("group literals") {
  auto g = parse_group("(4,2; 1,1; 3,0)");
  CHECK(g.order() == 8);
  CHECK(to_text(g) == "(4,2; 1,1; 1,0)");
  CHECK(parse_group(to_text(g)).same_group(g));
  auto y = parse_group("(3; 2, -1, 0)");
  CHECK(to_text(y) == "(3; 2,2,0)");
  CHECK(GroupAction::cyclic(6, {2, 4}).same_group(GroupAction::cyclic(3, {1, 2})));
  CHECK_FALSE(GroupAction::cyclic(3, {1, 1}).same_group(GroupAction::cyclic(3, {1, 2})));
  CHECK_THROWS_AS(parse_group("(7; 1"), ParseError);
  CHECK_THROWS_AS(parse_group("(7,2; 1,3)"), ParseError);
  try {
    parse_group("(7; 1,3,5)", 2);
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  try {
    GroupAction(1, {10000, 10000}, {{1}, {1}});
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}
