#pragma once

#include "qgrass/ratfunc.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace qgrass {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatFunc& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const RatFunc& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  bool is_zero() const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix scaled(const RatFunc& c) const;
  std::vector<RatFunc> apply(const std::vector<RatFunc>& v) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;
};

// sorted by index, no zero entries
using SparseVec = std::vector<std::pair<int, RatFunc>>;

SparseVec sparse_axpy(const SparseVec& x, const RatFunc& a, const SparseVec& y);  // x + a*y

// Incremental row echelon form over Q(q). Each stored row has leading entry 1.
class Echelon {
 public:
  SparseVec reduce(const SparseVec& v) const;
  // returns true when v was independent of the stored rows
  bool insert(const SparseVec& v);
  int rank() const { return static_cast<int>(rows_.size()); }
  // fully reduced rows keyed by pivot column
  std::map<int, SparseVec> reduced_rows() const;

 private:
  std::map<int, SparseVec> rows_;
};

int rank_exact(const ExactMatrix& m);
// Right null space basis; each vector has a 1 in its free coordinate.
std::vector<std::vector<RatFunc>> kernel_basis(const ExactMatrix& m);
std::vector<std::vector<RatFunc>> kernel_of_rows(const std::vector<SparseVec>& rows, int cols);
// Fraction-free elimination over Q[q] after clearing denominators row by row.
int rank_bareiss(const ExactMatrix& m);
int rank_at_points(const ExactMatrix& m, const std::vector<mpq_class>& points);
int rank_probabilistic(const ExactMatrix& m, int sample_count, std::uint64_t seed = 0);

}  // namespace qgrass
