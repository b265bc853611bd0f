#include "qgrass/ratfunc.hpp"

#include <cctype>
#include <stdexcept>

namespace qgrass {

namespace {

bool is_q_power(const Poly& p) { return p.is_monomial() && p.lead() == 1; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return trim(s.substr(1, s.size() - 2));
  return s;
}

mpq_class parse_rational(std::string_view s) {
  mpq_class c;
  if (c.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
  c.canonicalize();
  return c;
}

Poly parse_term(std::string_view t) {
  t = trim(t);
  if (t.empty()) throw std::invalid_argument("empty polynomial term");
  auto pos = t.find('q');
  if (pos == std::string_view::npos) return Poly(parse_rational(t));
  std::string_view pre = trim(t.substr(0, pos));
  std::string_view post = trim(t.substr(pos + 1));
  if (!pre.empty() && pre.back() == '*') pre = trim(pre.substr(0, pre.size() - 1));
  mpq_class c = 1;
  if (pre == "-")
    c = -1;
  else if (!pre.empty())
    c = parse_rational(pre);
  int k = 1;
  if (!post.empty()) {
    if (post.front() != '^') throw std::invalid_argument("bad polynomial term: " + std::string(t));
    k = std::stoi(std::string(post.substr(1)));
  }
  return Poly::monomial(c, k);
}

}  // namespace

Poly parse_poly(std::string_view s) {
  s = strip_parens(s);
  Poly p;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+') {
      p += parse_term(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return p;
}

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  if (den.degree() > 0) {
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::exact_div(num, g);
      den = Poly::exact_div(den, g);
    }
  }
  if (den.lead() != 1) {
    mpq_class inv = 1 / den.lead();
    num *= inv;
    den *= inv;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc RatFunc::q_pow(int k) {
  RatFunc r;
  if (k >= 0) {
    r.num_ = Poly::monomial(1, k);
  } else {
    r.num_ = Poly(1);
    r.den_ = Poly::monomial(1, -k);
  }
  return r;
}

RatFunc RatFunc::parse(std::string_view s) {
  s = trim(s);
  // split at a '/' that sits at parenthesis depth zero and is followed by '('
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0 && i + 1 < s.size() && s[i + 1] == '(') {
      return normalize(parse_poly(s.substr(0, i)), parse_poly(s.substr(i + 1)));
    }
  }
  return RatFunc(parse_poly(s));
}

bool RatFunc::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lead() == 1; }

std::optional<int> RatFunc::monomial_power() const {
  if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  return num_.degree() - den_.degree();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return normalize(den_, num_);
}

std::optional<mpq_class> RatFunc::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (sgn(d) == 0) return std::nullopt;
  return mpq_class(num_.eval(x) / d);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.degree() == 0) {
      num_ += o.num_;
      return *this;
    }
    return *this = normalize(num_ + o.num_, den_);
  }
  if (is_q_power(den_) && is_q_power(o.den_)) {
    int a = den_.degree(), b = o.den_.degree();
    int m = std::max(a, b);
    return *this = normalize(num_.shift(m - a) + o.num_.shift(m - b), Poly::monomial(1, m));
  }
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

}  // namespace qgrass
