#pragma once

#include "qgrass/exact_matrix.hpp"
#include "qgrass/minors.hpp"
#include "qgrass/ncpoly.hpp"

#include <array>
#include <vector>

namespace qgrass {

// r(u^i_j (x) u^k_l) without the q^{-1/n} factor; theta(0) = 0.
RatFunc r_gen(int n, int i, int j, int k, int l);

// Generator table of r, optionally multiplied by a global constant per generator pair.
class RTable {
 public:
  explicit RTable(int n, const RatFunc& scale = 1);
  int n() const { return n_; }
  const RatFunc& scale() const { return scale_; }
  const RatFunc& operator()(int i, int j, int k, int l) const {
    return t_[(((i - 1) * n_ + (j - 1)) * n_ + (k - 1)) * n_ + (l - 1)];
  }
  // M(y)_{ia} = r(u^i_a (x) y) and N(y)_{ai} = r(y (x) u^a_i) for a generator letter y
  const ExactMatrix& M(int letter) const { return m_[letter]; }
  const ExactMatrix& N(int letter) const { return nmat_[letter]; }

  // sparse transfer superoperator of a generator u^p_s: X -> sum_m M(u^p_m) X N(u^m_s)
  struct Entry {
    int out_row, out_col, in_row, in_col;
    RatFunc c;
  };
  const std::vector<Entry>& transfer(int letter) const { return transfer_[letter]; }

 private:
  int n_;
  RatFunc scale_;
  std::vector<RatFunc> t_;
  std::vector<ExactMatrix> m_, nmat_;
  std::vector<std::vector<Entry>> transfer_;
};

const RTable& unscaled_table(int n);

ExactMatrix l_plus(const RTable& t, const Word& w);
ExactMatrix l_minus(const RTable& t, const Word& w);
ExactMatrix l_plus(const RTable& t, const NCPoly& f);
ExactMatrix l_minus(const RTable& t, const NCPoly& f);
// r(f (x) g) by the multiplicativity axioms, independent of l_plus/l_minus
RatFunc r_eval(const RTable& t, const NCPoly& f, const NCPoly& g);

using KillingMatrix = ExactMatrix;
enum class QMode { BruteForce, Transfer };
KillingMatrix killing_Q(const RTable& t, const NCPoly& g, QMode mode = QMode::Transfer);
KillingMatrix killing_Q(const NCPoly& g, QMode mode = QMode::Transfer);
// Q of a single (possibly non-normal) word by the transfer chain
KillingMatrix killing_Q_word(const RTable& t, const Word& w);

// r(u^i_j (x) z^I_J) can be nonzero only when this holds
bool goodearl_support_r(int i, int j, const IndexSet& I, const IndexSet& J);
// Q_{ij}(z^I_J) can be nonzero only when this holds
bool goodearl_support_minor_q(int i, int j, const IndexSet& I, const IndexSet& J);
// Q_{ij}(z^{IJ}) can be nonzero only when this holds; (i,j) in R^c x R^c is unconstrained
bool goodearl_support_q(int n, int r, int i, int j, const IndexSet& I, const IndexSet& J);

}  // namespace qgrass
