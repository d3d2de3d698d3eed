#include "rat.hpp"

#include <stdexcept>

namespace qzeta {

Rat::Rat(const Int &num, const Int &den) : v_(num, den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rat &Rat::operator/=(const Rat &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::int64_t Rat::to_int64() const {
  if (!is_integer())
    throw std::domain_error("rational " + str() + " is not an integer");
  return qzeta::to_int64(v_.get_num());
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rat::str() const {
  if (is_integer())
    return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

Int parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  Int v(std::string(s), 10);
  return neg ? Int(-v) : v;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
  Int den(std::string(den_text), 10);
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

Rat abs(const Rat &r) { return r.sign() < 0 ? -r : r; }

Int gcd(const Int &a, const Int &b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int &a, const Int &b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::int64_t to_int64(const Int &v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("integer " + v.get_str() + " exceeds 64 bits");
  return v.get_si();
}

std::size_t hash_value(const Rat &r) {
  std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t()) ^ (r.sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
  return h1 * 1000003u ^ h2;
}

}  // namespace qzeta
