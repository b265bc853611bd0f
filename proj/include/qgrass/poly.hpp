#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qgrass {

// Univariate polynomial in q over the rationals, dense, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  Poly(long c);
  Poly(const mpq_class& c);

  static Poly monomial(const mpq_class& c, int deg);
  static Poly from_coeffs(std::vector<mpq_class> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // lowest power with nonzero coefficient, -1 for the zero polynomial
  int valuation() const;
  bool is_monomial() const;
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int k) const;
  mpq_class eval(const mpq_class& x) const;

  Poly shift(int k) const;      // multiply by q^k, k >= 0
  Poly unshift(int k) const;    // exact division by q^k
  Poly monic() const;
  Poly content_scaled(const mpq_class& s) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpq_class& s);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
  // exact division; throws if b does not divide a
  static Poly exact_div(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

  std::string to_string() const;
  std::size_t hash() const;

 private:
  explicit Poly(std::vector<mpq_class> c, bool) : c_(std::move(c)) { trim(); }
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace qgrass
