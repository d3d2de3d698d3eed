#include "groups.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace qzeta {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct ExpsHash {
  std::size_t operator()(const Exps &v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v)
      h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

std::vector<Exps> closure(const std::vector<Exps> &gens, std::int64_t dexp, int n) {
  std::unordered_set<Exps, ExpsHash> seen{Exps(static_cast<std::size_t>(n), 0)};
  std::vector<Exps> frontier(seen.begin(), seen.end());
  std::vector<Exps> all = frontier;
  for (const auto &g : gens) {
    // Multiply the current subgroup by the cyclic group <g>.
    std::vector<Exps> base = all;
    Exps step = g;
    for (;;) {
      bool added = false;
      for (const auto &b : base) {
        Exps v(b.size());
        for (std::size_t i = 0; i < v.size(); ++i)
          v[i] = mod(b[i] + step[i], dexp);
        if (seen.insert(v).second) {
          all.push_back(std::move(v));
          added = true;
        }
      }
      if (!added)
        break;
      for (std::size_t i = 0; i < step.size(); ++i)
        step[i] = mod(step[i] + g[i], dexp);
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

GroupAction::GroupAction(int n, std::vector<std::int64_t> orders, std::vector<Exps> rows)
    : n_(n), d_(std::move(orders)), a_(std::move(rows)) {
  if (n < 1)
    throw Error(ErrorKind::InvalidArgument, "group dimension must be positive");
  if (d_.empty() || d_.size() != a_.size())
    throw Error(ErrorKind::InvalidArgument, "group needs one exponent row per cyclic factor");
  std::int64_t tuples = 1;
  for (std::size_t j = 0; j < d_.size(); ++j) {
    if (d_[j] < 1)
      throw Error(ErrorKind::InvalidArgument, "cyclic orders must be positive");
    if (static_cast<int>(a_[j].size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "exponent row of length " +
                                                    std::to_string(a_[j].size()) + ", expected " +
                                                    std::to_string(n));
    if (tuples > kMaxTuples / d_[j])
      throw Error(ErrorKind::SizeLimit, "group presentation exceeds 10^7 tuples");
    tuples *= d_[j];
    for (auto &x : a_[j])
      x = mod(x, d_[j]);
  }
  dexp_ = 1;
  for (auto d : d_)
    dexp_ = std::lcm(dexp_, d);
  enumerate();
}

void GroupAction::enumerate() {
  std::vector<Exps> gens;
  for (std::size_t j = 0; j < d_.size(); ++j) {
    Exps g(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      g[static_cast<std::size_t>(i)] = mod(a_[j][static_cast<std::size_t>(i)] * (dexp_ / d_[j]), dexp_);
    gens.push_back(std::move(g));
  }
  elems_ = closure(gens, dexp_, n_);
}

GroupAction GroupAction::cyclic(std::int64_t d, Exps a) {
  int n = static_cast<int>(a.size());
  return GroupAction(n, {d}, {std::move(a)});
}

GroupAction GroupAction::trivial(int n) { return cyclic(1, Exps(static_cast<std::size_t>(n), 0)); }

bool GroupAction::same_group(const GroupAction &o) const {
  if (n_ != o.n_ || order() != o.order())
    return false;
  std::int64_t l = std::lcm(dexp_, o.dexp_);
  auto scaled = [l](const std::vector<Exps> &es, std::int64_t d) {
    std::vector<Exps> out = es;
    for (auto &e : out)
      for (auto &x : e)
        x *= l / d;
    std::sort(out.begin(), out.end());
    return out;
  };
  return scaled(elems_, dexp_) == scaled(o.elems_, o.dexp_);
}

Rat age(const Exps &eps, std::int64_t dexp, const std::vector<Rat> &k) {
  if (k.size() != eps.size())
    throw Error(ErrorKind::DimensionMismatch, "weight vector length differs from dimension");
  Rat s = 0;
  for (std::size_t i = 0; i < eps.size(); ++i)
    s += k[i] * Rat(eps[i]);
  return s / Rat(dexp);
}

Rat weight(const Exps &eps, std::int64_t dexp, const std::vector<Rat> &k) {
  if (k.size() != eps.size())
    throw Error(ErrorKind::DimensionMismatch, "weight vector length differs from dimension");
  Rat s = 0;
  for (std::size_t i = 0; i < eps.size(); ++i)
    s += k[i] * Rat(eps[i] > 0 ? eps[i] : dexp);
  return s / Rat(dexp);
}

Exps inverse(const Exps &eps, std::int64_t dexp) {
  Exps r(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i)
    r[i] = mod(-eps[i], dexp);
  return r;
}

bool is_small(const GroupAction &g) {
  for (const auto &e : g.elements()) {
    auto zeros = std::count(e.begin(), e.end(), 0);
    if (zeros == g.n() - 1)
      return false;
  }
  return true;
}

namespace {

// Presentation of an element set by greedily chosen generators.
GroupAction present(int n, std::int64_t dexp, const std::vector<Exps> &elems) {
  std::vector<std::int64_t> orders;
  std::vector<Exps> rows, gens;
  std::unordered_set<Exps, ExpsHash> span{Exps(static_cast<std::size_t>(n), 0)};
  for (const auto &e : elems) {
    if (span.count(e))
      continue;
    std::int64_t g = dexp;
    for (auto x : e)
      g = std::gcd(g, x);
    std::int64_t ord = dexp / g;
    Exps row(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      row[i] = e[i] / g;
    orders.push_back(ord);
    rows.push_back(std::move(row));
    gens.push_back(e);
    auto sub = closure(gens, dexp, n);
    span.insert(sub.begin(), sub.end());
  }
  if (orders.empty())
    return GroupAction::trivial(n);
  return GroupAction(n, std::move(orders), std::move(rows));
}

}  // namespace

SmallReduction small_reduce(const GroupAction &g) {
  const int n = g.n();
  std::vector<std::int64_t> m(static_cast<std::size_t>(n), 1);
  GroupAction cur = g;
  while (!is_small(cur)) {
    const std::int64_t d = cur.dexp();
    std::vector<std::int64_t> axis(static_cast<std::size_t>(n), d);
    for (const auto &e : cur.elements()) {
      if (std::count(e.begin(), e.end(), 0) != n - 1)
        continue;
      for (int i = 0; i < n; ++i)
        if (e[static_cast<std::size_t>(i)] != 0)
          axis[static_cast<std::size_t>(i)] = std::gcd(axis[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    }
    std::vector<std::int64_t> step(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      step[static_cast<std::size_t>(i)] = d / axis[static_cast<std::size_t>(i)];
    std::unordered_set<Exps, ExpsHash> seen;
    std::int64_t common = d;
    for (const auto &e : cur.elements()) {
      Exps v(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        v[i] = mod(e[i] * step[i], d);
        common = std::gcd(common, v[i]);
      }
      seen.insert(std::move(v));
    }
    std::int64_t nd = d / common;
    std::vector<Exps> elems;
    for (const auto &v : seen) {
      Exps w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = v[i] / common;
      elems.push_back(std::move(w));
    }
    std::sort(elems.begin(), elems.end());
    cur = present(n, nd, elems);
    for (int i = 0; i < n; ++i)
      m[static_cast<std::size_t>(i)] *= step[static_cast<std::size_t>(i)];
  }
  return {cur, m};
}

GroupAction parse_group(std::string_view s, int expected_n, int line, int column) {
  std::size_t i = 0;
  auto fail = [&](const std::string &msg) -> void {
    throw ParseError("group literal: " + msg, line, column + static_cast<int>(i));
  };
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  };
  auto accept = [&](char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  };
  auto integer = [&]() -> std::int64_t {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
      neg = s[i++] == '-';
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (start == i || i - start > 15)
      fail("expected integer");
    std::int64_t v = std::stoll(std::string(s.substr(start, i - start)));
    return neg ? -v : v;
  };
  auto list = [&] {
    std::vector<std::int64_t> v{integer()};
    while (accept(','))
      v.push_back(integer());
    return v;
  };
  if (!accept('('))
    fail("expected '('");
  auto orders = list();
  std::vector<Exps> rows;
  while (accept(';'))
    rows.push_back(list());
  if (!accept(')'))
    fail("expected ')'");
  skip();
  if (i != s.size())
    fail("trailing characters");
  if (rows.size() != orders.size())
    fail(std::to_string(orders.size()) + " orders but " + std::to_string(rows.size()) + " rows");
  int n = static_cast<int>(rows.front().size());
  for (const auto &r : rows)
    if (static_cast<int>(r.size()) != n)
      fail("rows of different lengths");
  if (expected_n > 0 && n != expected_n)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(line) + ":" + std::to_string(column) + ": group of dimension " +
                    std::to_string(n) + " where dimension " + std::to_string(expected_n) + " is required");
  return GroupAction(n, std::move(orders), std::move(rows));
}

std::string to_text(const GroupAction &g) {
  std::string out = "(";
  for (std::size_t j = 0; j < g.orders().size(); ++j)
    out += (j ? "," : "") + std::to_string(g.orders()[j]);
  for (const auto &row : g.rows()) {
    out += "; ";
    for (std::size_t i = 0; i < row.size(); ++i)
      out += (i ? "," : "") + std::to_string(row[i]);
  }
  return out + ")";
}

}  // namespace qzeta
