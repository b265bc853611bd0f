#pragma once

#include "qgrass/ratfunc.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgrass {

struct Gen {
  int row = 1, col = 1;
  friend bool operator==(const Gen&, const Gen&) = default;
};

// A word in the generators u^i_j. Letters are stored as (i-1)*n + (j-1),
// so letter order is the (row, col)-lexicographic PBW order.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : s_(std::move(letters)) {}
  static Word of(int n, const std::vector<Gen>& gens);

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int letter(std::size_t k) const { return static_cast<unsigned char>(s_[k]); }
  Gen gen(int n, std::size_t k) const { return {letter(k) / n + 1, letter(k) % n + 1}; }
  void push(int letter) { s_.push_back(static_cast<char>(letter)); }
  const std::string& str() const { return s_; }
  bool is_normal() const;
  Word operator+(const Word& o) const { return Word(s_ + o.s_); }
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const { return Word(s_.substr(pos, len)); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string s_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>()(w.str()); }
};

inline int letter_of(int n, int row, int col) { return (row - 1) * n + (col - 1); }

// Normal-form element of C_q[M_n]: PBW-ordered words with nonzero coefficients.
class NCPoly {
 public:
  using Terms = std::map<Word, RatFunc>;

  explicit NCPoly(int n = 1) : n_(n) {}
  static NCPoly scalar(int n, const RatFunc& c);
  static NCPoly gen(int n, int row, int col);
  // caller guarantees w is normal
  static NCPoly from_normal_word(int n, const Word& w, const RatFunc& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  RatFunc coeff(const Word& w) const;
  bool is_homogeneous() const;
  // degree of a homogeneous element, -1 for zero
  int degree() const;
  std::map<int, NCPoly> homogeneous_parts() const;

  // adds c*w where w must already be normal
  void add_term(const Word& w, const RatFunc& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const RatFunc& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const RatFunc& c) { return a *= c; }
  friend NCPoly operator*(const RatFunc& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  NCPoly map_coeffs(const std::function<RatFunc(const Word&, const RatFunc&)>& f) const;

  std::string to_string() const;
  static NCPoly parse(int n, std::string_view s);

 private:
  void check(const NCPoly& o) const;
  int n_;
  Terms t_;
};

// c * w expanded in the PBW basis
NCPoly normal_form(int n, const Word& w, const RatFunc& coeff = 1);
NCPoly mul(const NCPoly& a, const NCPoly& b);
NCPoly power(const NCPoly& a, int k);

// Plain rewriting of adjacent out-of-order pairs with a chosen site policy;
// independent of the memoized engine behind normal_form.
enum class RewriteSite { Leftmost, Rightmost, Random };
NCPoly normal_form_by_rewriting(int n, const Word& w, RewriteSite site, std::uint64_t seed = 0);

// Tensor element keyed by pairs of normal words.
class TensorPoly {
 public:
  using Terms = std::map<std::pair<Word, Word>, RatFunc>;
  explicit TensorPoly(int n = 1) : n_(n) {}
  int n() const { return n_; }
  const Terms& terms() const { return t_; }
  void add(const Word& a, const Word& b, const RatFunc& c);
  void add_product(const NCPoly& a, const NCPoly& b, const RatFunc& c = 1);
  // the (NCPoly, NCPoly) pair form, grouped by left word
  std::vector<std::pair<NCPoly, NCPoly>> pairs() const;
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

 private:
  int n_;
  Terms t_;
};

TensorPoly coproduct(const NCPoly& f);
RatFunc counit(const NCPoly& f);
NCPoly qdet(int n);
// S(u^i_j) = p * det^{-power}
struct AntipodeValue {
  NCPoly p;
  int det_power;
};
AntipodeValue antipode_gen(int n, int i, int j);
// image of S(f) in C_q[SU_n], with det^{-1} replaced by 1
NCPoly antipode_mod_det(const NCPoly& f);
bool eq_mod_det1(const NCPoly& f, const NCPoly& g);

// Ideal membership in the degree-deg(f) component of the two-sided ideal generated
// by gens. By default a and b range over monomials in all u^i_j; `letters` replaces
// them by products of the given homogeneous elements (membership in a subalgebra ideal).
bool ideal_membership_graded(const NCPoly& f, const std::vector<NCPoly>& gens, int max_deg);
bool ideal_membership_graded(const NCPoly& f, const std::vector<NCPoly>& gens, int max_deg,
                             const std::vector<NCPoly>& letters);
// Solves f = sum c_t targets_t modulo the ideal, when possible.
std::optional<std::vector<RatFunc>> solve_modulo_ideal(const NCPoly& f, const std::vector<NCPoly>& gens,
                                                       const std::vector<NCPoly>& letters,
                                                       const std::vector<NCPoly>& targets);

std::string format_gen(const Gen& g);

}  // namespace qgrass
