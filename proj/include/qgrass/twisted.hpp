#pragma once

#include "qgrass/minors.hpp"
#include "qgrass/ncpoly.hpp"
#include "qgrass/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgrass {

// Formal combination of ordered products of the minors z_I = z^R_I.
struct ZTerm {
  RatFunc c;
  std::vector<IndexSet> factors;
};

class ZElement {
 public:
  ZElement() = default;
  static ZElement one();
  static ZElement gen(const IndexSet& I, const RatFunc& c = 1);
  const std::vector<ZTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const ZTerm& t);
  ZElement operator+(const ZElement& o) const;
  ZElement operator*(const ZElement& o) const;
  ZElement scaled(const RatFunc& c) const;
  ZElement power(int a) const;
  NCPoly eval(int n, int r) const;
  // eps(z^R_I) = [I == R]
  RatFunc counit(int r) const;
  std::string to_string() const;

 private:
  std::vector<ZTerm> t_;
};

// Where sigma enters the product rule:
//   Left:  d(ab) = d(a) b + sigma(a) d(b)
//   Right: d(ab) = d(a) sigma(b) + a d(b)
// The ladder results agree for both; the (j', j) component of dbar obeys neither exactly.
enum class TwistSide { Left, Right };

// Z_j, T_j, sigma_j and the twisted derivation for one rung j in r+1..n.
class TwistedLadder {
 public:
  TwistedLadder(int n, int r, int j, TwistSide side = TwistSide::Left);
  int n() const { return n_; }
  int r() const { return r_; }
  int j() const { return j_; }
  TwistSide side() const { return side_; }
  int jprime() const { return n_ - j_ + 1; }

  const std::vector<IndexSet>& admissible() const { return adm_; }
  const std::vector<NCPoly>& letters() const { return letters_; }
  const std::vector<NCPoly>& t_generators() const { return tgens_; }
  bool is_admissible(const IndexSet& I) const;
  bool is_t_generator(const IndexSet& I) const;
  NCPoly gen(const IndexSet& I) const;

  // q^{[j in I] + [j' in I]}
  RatFunc sigma_factor(const IndexSet& I) const;
  ZElement sigma(const ZElement& x) const;
  // u^k_l -> q^{[l = j] + [l = j']} u^k_l, the automorphism on representatives
  NCPoly sigma(const NCPoly& x) const;

  // the (j', j) component of dbar, applied to a representative
  NCPoly d_direct(const NCPoly& x) const;
  // value on a generator, as a multiple of the minor with j replaced by j'
  ZElement d_gen(const IndexSet& I) const;
  // extension of d_gen by the sigma-twisted Leibniz rule on side()
  ZElement twisted_d(const ZElement& x) const;
  // the product rule on side() applied to representatives, with d_direct on each factor
  NCPoly leibniz_rhs(const NCPoly& x, const NCPoly& y) const;

  bool in_T(const NCPoly& f) const;
  bool equal_mod_T(const NCPoly& a, const NCPoly& b) const;
  // c with f = c * target mod T_j, if such c exists
  std::optional<RatFunc> ratio_mod_T(const NCPoly& f, const NCPoly& target) const;

 private:
  int n_, r_, j_;
  TwistSide side_;
  std::vector<IndexSet> adm_;
  std::vector<NCPoly> letters_, tgens_;
  mutable std::map<IndexSet, ZElement> dcache_;
};

// P_k = {k..n}; P^l_k replaces its first l elements p by n-p+1
IndexSet ladder_P(int n, int k, int l);

// A p in P(S_{r+1}) given as a product of P_k generators, e.g. "P3" or "P3*P3".
std::vector<IndexSet> parse_p_description(int n, const std::string& desc);

struct LadderWitness {
  std::vector<int> exponents;  // a_{r+1}, ..., a_n
  RatFunc value;
};
// bounded search for exponents with a nonzero counit at the end of the ladder
std::optional<LadderWitness> find_ladder_witness(int n, int r, const ZElement& p, int max_total,
                                                 TwistSide side = TwistSide::Left);
CheckResult verify_ladder_witness(int n, int r, const std::string& p_description, int max_total = 4,
                         TwistSide side = TwistSide::Left);
// d_direct(xy) against the product rule on `side`, modulo T_j; the other side is reported alongside
CheckResult verify_twisted_leibniz(int n, int r, int pairs, std::uint64_t seed, TwistSide side = TwistSide::Left);
CheckResult verify_sigma_multiplicative(int n, int r, int pairs, std::uint64_t seed);
// d_j(z_J) = 0 for j not in J, and d_j^2(z_J) in T_j, for every rung and admissible J
CheckResult verify_ladder_vanishing(int n, int r, TwistSide side = TwistSide::Left);
// d^a(z_{P^l_k}^a) = C_a z_{P^{l+1}_k}^a mod T with C_a != 0 and C_a / C_1^a -> a! at q = 1
CheckResult verify_ladder_power(int n, int r, int a_max, TwistSide side = TwistSide::Left);

}  // namespace qgrass
