#pragma once

#include "qgrass/minors.hpp"
#include "qgrass/ncpoly.hpp"
#include "qgrass/rform.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qgrass {

enum class FormDomain { OffDiag, Holo, AntiHolo, Levi };

bool in_domain(FormDomain d, int n, int r, int i, int j);
std::vector<std::pair<int, int>> domain_pairs(FormDomain d, int n, int r);
std::string domain_name(FormDomain d);

// element of C_q[M_n] (x) Lambda^1 in the basis b_ij
class FormVector {
 public:
  FormVector(int n, int r, FormDomain d) : n_(n), r_(r), d_(d) {}
  int n() const { return n_; }
  int r() const { return r_; }
  FormDomain domain() const { return d_; }
  const std::map<std::pair<int, int>, NCPoly>& components() const { return c_; }
  NCPoly component(int i, int j) const;
  void add(int i, int j, const NCPoly& p);
  bool is_zero() const { return c_.empty(); }
  // f * v, acting on the coefficient polynomials
  FormVector left_mul(const NCPoly& f) const;
  friend bool operator==(const FormVector& a, const FormVector& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.c_ == b.c_;
  }

 private:
  int n_, r_;
  FormDomain d_;
  std::map<std::pair<int, int>, NCPoly> c_;
};

RatFunc lambda1_coord(const NCPoly& g, int i, int j);
RatFunc lambda1_coord(const RTable& t, const NCPoly& g, int i, int j);

// (i,j) component = sum g_(1) Q_ji(g_(2)), via a pruned transfer-chain search
FormVector dbar(const NCPoly& g, int r);
FormVector dbar(const RTable& t, const NCPoly& g, int r);
FormVector del(const NCPoly& g, int r);
FormVector del(const RTable& t, const NCPoly& g, int r);
// same components through the explicit coproduct and Q
FormVector dbar_brute(const NCPoly& g, int r);
FormVector del_brute(const NCPoly& g, int r);
// closed form on a single minor z^I_J
FormVector dbar_minor_closed(int n, int r, const IndexSet& I, const IndexSet& J);
FormVector del_minor_closed(int n, int r, const IndexSet& I, const IndexSet& J);

int hk_first_order_dim(int n, int r);
FormVector proj_V0(const FormVector& v);

}  // namespace qgrass
