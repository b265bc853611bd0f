#include "qgrass/poly.hpp"

#include <stdexcept>

namespace qgrass {

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly Poly::monomial(const mpq_class& c, int deg) {
  if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  Poly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(deg + 1, mpq_class(0));
  p.c_[deg] = c;
  return p;
}

Poly Poly::from_coeffs(std::vector<mpq_class> c) { return Poly(std::move(c), true); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

bool Poly::is_monomial() const {
  return !c_.empty() && valuation() == degree();
}

mpq_class Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shift(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<mpq_class> c(k, mpq_class(0));
  c.insert(c.end(), c_.begin(), c_.end());
  return Poly(std::move(c), true);
}

Poly Poly::unshift(int k) const {
  if (c_.empty() || k == 0) return *this;
  if (valuation() < k) throw std::invalid_argument("Poly::unshift: not divisible");
  return Poly(std::vector<mpq_class>(c_.begin() + k, c_.end()), true);
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  mpq_class inv = 1 / c_.back();
  return content_scaled(inv);
}

Poly Poly::content_scaled(const mpq_class& s) const {
  Poly p = *this;
  p *= s;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const mpq_class& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(c), true);
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
  std::vector<mpq_class> r = a.c_;
  int db = b.degree();
  int dr = static_cast<int>(r.size()) - 1;
  std::vector<mpq_class> q(dr >= db ? dr - db + 1 : 0, mpq_class(0));
  mpq_class inv = 1 / b.lead();
  for (int d = dr; d >= db; --d) {
    if (sgn(r[d]) == 0) continue;
    mpq_class f = r[d] * inv;
    q[d - db] = f;
    for (int i = 0; i <= db; ++i) r[d - db + i] -= f * b.c_[i];
  }
  quo = Poly(std::move(q), true);
  rem = Poly(std::move(r), true);
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  if (b.is_monomial()) {
    Poly p = a.unshift(b.degree());
    return p.content_scaled(1 / b.lead());
  }
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::invalid_argument("Poly::exact_div: not divisible");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // monomial fast paths: gcd is a power of q or 1
  if (a.is_monomial() || b.is_monomial()) {
    int k = a.is_monomial() ? std::min(a.degree(), b.valuation())
                            : std::min(b.degree(), a.valuation());
    return monomial(1, k);
  }
  int va = a.valuation(), vb = b.valuation();
  int k = std::min(va, vb);
  a = a.unshift(va);
  b = b.unshift(vb);
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic().shift(k);
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    std::string c = c_[i].get_str();
    if (i == 0) {
      s += c;
    } else {
      if (c == "-1")
        s += "-";
      else if (c != "1")
        s += c + "*";
      s += "q";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::size_t Poly::hash() const {
  std::size_t h = c_.size();
  for (const auto& x : c_) {
    h = h * 1000003u ^ mpz_get_si(x.get_num_mpz_t());
    h = h * 1000003u ^ mpz_get_si(x.get_den_mpz_t());
  }
  return h;
}

}  // namespace qgrass
