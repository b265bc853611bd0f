#pragma once

#include "qgrass/poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qgrass {

// Element of Q(q). Canonical form: gcd(num, den) = 1, den monic, zero is 0/1,
// so structural equality is field equality. Rational scalars live in the numerator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const mpq_class& c) : num_(c), den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}

  static RatFunc normalize(Poly num, Poly den);
  static RatFunc q_pow(int k);
  static RatFunc q() { return q_pow(1); }
  static RatFunc parse(std::string_view s);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // Laurent monomial c*q^k, returned as k when so
  std::optional<int> monomial_power() const;

  RatFunc inverse() const;
  std::optional<mpq_class> eval(const mpq_class& x) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;
  std::size_t hash() const { return num_.hash() * 31u ^ den_.hash(); }

 private:
  Poly num_, den_;
};

Poly parse_poly(std::string_view s);

}  // namespace qgrass
