#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace qzeta {

using Int = mpz_class;

// Exact rational in lowest terms with positive denominator.
class Rat {
public:
  Rat() = default;
  Rat(long v) : v_(v) {}
  Rat(int v) : v_(v) {}
  Rat(const Int &v) : v_(v) {}
  Rat(const Int &num, const Int &den);
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}
  explicit Rat(const mpq_class &v) : v_(v) { v_.canonicalize(); }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class &raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Requires fitting into int64; throws std::overflow_error otherwise.
  std::int64_t to_int64() const;
  Int floor() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
  Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
  Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
  Rat &operator/=(const Rat &o);

  friend Rat operator+(Rat a, const Rat &b) { return a += b; }
  friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

  friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "a" or "a/b"
  std::string str() const;
  // Accepts "[-]INT" or "[-]INT/INT"; throws std::invalid_argument.
  static Rat parse(std::string_view text);

private:
  mpq_class v_;
};

Rat abs(const Rat &r);
Int gcd(const Int &a, const Int &b);
Int lcm(const Int &a, const Int &b);
std::int64_t to_int64(const Int &v);
std::size_t hash_value(const Rat &r);

}  // namespace qzeta

template <> struct std::hash<qzeta::Rat> {
  std::size_t operator()(const qzeta::Rat &r) const { return qzeta::hash_value(r); }
};
