#include "monodromy.hpp"

#include "errors.hpp"

namespace qzeta {

CyclotomicProduct::CyclotomicProduct(
    std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
  for (const auto &[M, e] : init)
    multiply(M, e);
}

void CyclotomicProduct::multiply(std::int64_t M, std::int64_t e) {
  if (M < 1)
    throw Error(ErrorKind::InvalidArgument, "cyclotomic factor needs M >= 1");
  if (e == 0)
    return;
  auto &slot = e_[M];
  slot += e;
  if (slot == 0)
    e_.erase(M);
}

CyclotomicProduct yomdin_charpoly(const YomdinParams &y) {
  CyclotomicProduct c;
  const std::int64_t mk = y.m + y.k;
  c.multiply(y.m, y.m * y.m - 3 * y.m + 3 - (y.p - 1) * (y.q - 1));
  c.multiply(1, -1);
  c.multiply(mk, 1);
  c.multiply(y.m1, y.k1 * y.k2);
  c.multiply(y.p * mk / y.k1, -y.k1);
  c.multiply(y.q * mk / y.k2, -y.k2);
  return c;
}

std::int64_t degree(const CyclotomicProduct &c) {
  std::int64_t d = 0;
  for (const auto &[M, e] : c.exponents())
    d += M * e;
  return d;
}

std::int64_t phi_multiplicity(const CyclotomicProduct &c, std::int64_t o) {
  if (o < 1)
    throw Error(ErrorKind::InvalidArgument, "order must be positive");
  std::int64_t s = 0;
  for (const auto &[M, e] : c.exponents())
    if (M % o == 0)
      s += e;
  return s;
}

bool is_eigenvalue_pole(const CyclotomicProduct &c, const Rat &s0) {
  return phi_multiplicity(c, to_int64(s0.den())) > 0;
}

std::string to_text(const CyclotomicProduct &c) {
  if (c.exponents().empty())
    return "1";
  std::string out;
  for (const auto &[M, e] : c.exponents()) {
    if (!out.empty())
      out += " * ";
    out += M == 1 ? "(t - 1)" : "(t^" + std::to_string(M) + " - 1)";
    if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

std::optional<std::vector<Int>> expand(const CyclotomicProduct &c) {
  const std::int64_t deg = degree(c);
  if (deg > 200)
    throw Error(ErrorKind::SizeLimit, "expanded form is limited to degree 200");
  if (deg < 0)
    return std::nullopt;
  std::int64_t top = 0;
  for (const auto &[M, e] : c.exponents())
    if (e > 0)
      top += M * e;
  // numerator first, then exact division by each (t^M - 1)
  std::vector<Int> p{1};
  for (const auto &[M, e] : c.exponents())
    for (std::int64_t k = 0; k < e; ++k) {
      std::vector<Int> r(p.size() + static_cast<std::size_t>(M));
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + static_cast<std::size_t>(M)] += p[i];
        r[i] -= p[i];
      }
      p = std::move(r);
    }
  for (const auto &[M, e] : c.exponents())
    for (std::int64_t k = 0; k < -e; ++k) {
      // p = (t^M - 1) q  =>  q_i = q_{i-M} - p_i
      const auto m = static_cast<std::size_t>(M);
      if (p.size() <= m)
        return std::nullopt;
      std::vector<Int> q(p.size() - m);
      for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = (i >= m ? q[i - m] : Int(0)) - p[i];
      for (std::size_t i = q.size(); i < p.size(); ++i)
        if ((i >= m && i - m < q.size() ? q[i - m] : Int(0)) - (i < q.size() ? q[i] : Int(0)) != p[i])
          return std::nullopt;
      p = std::move(q);
    }
  (void)top;
  return p;
}

std::string polynomial_text(const std::vector<Int> &coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Int &a = coeffs[i];
    if (a == 0)
      continue;
    Int mag = a < 0 ? Int(-a) : a;
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
    if (out.empty())
      out = (a < 0 ? "-" : "") + body;
    else
      out += (a < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace qzeta
