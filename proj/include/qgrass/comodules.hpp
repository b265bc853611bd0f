#pragma once

#include "qgrass/minors.hpp"
#include "qgrass/ncpoly.hpp"

#include <string>
#include <vector>

namespace qgrass {

struct DomWeight {
  std::vector<int> parts;
  explicit DomWeight(std::vector<int> p);
  static DomWeight rectangle(int r, int k);
};

// Filling of the r x k rectangle, stored row-major.
class Tableau {
 public:
  Tableau(int rows, int cols, std::vector<int> entries);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int row, int col) const { return e_[row * cols_ + col]; }  // 0-based
  const std::vector<int>& entries() const { return e_; }
  IndexSet column(int s) const;
  bool is_semistandard() const;
  DomWeight shape() const;
  std::string to_string() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  int rows_, cols_;
  std::vector<int> e_;
};

std::vector<Tableau> enumerate_ssyt(int r, int k, int n);
long long dim_formula(int r, int k, int n);
// z^{T_1} ... z^{T_k} with z^{T_s} = z^{T_s}_R
NCPoly standard_monomial(int n, const Tableau& T);

// Exponents of the K_i eigenvalues (i = 1..n-1). Each letter with the chosen index a
// contributes -1 to K_a and +1 to K_{a-1}. Rows give the left-comodule weight of z^T.
enum class WeightSide { Row, Column };
std::vector<int> k_weight(int n, const Word& m, WeightSide side = WeightSide::Row);
std::vector<int> k_weight(const NCPoly& f, WeightSide side = WeightSide::Row);

}  // namespace qgrass
