#include "qgrass/exact_matrix.hpp"

#include <random>
#include <stdexcept>

namespace qgrass {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RatFunc& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ExactMatrix ExactMatrix::scaled(const RatFunc& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

std::vector<RatFunc> ExactMatrix::apply(const std::vector<RatFunc>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("ExactMatrix::apply: size mismatch");
  std::vector<RatFunc> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

SparseVec sparse_axpy(const SparseVec& x, const RatFunc& a, const SparseVec& y) {
  SparseVec r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      r.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      RatFunc s = x[i].second + a * y[j].second;
      if (!s.is_zero()) r.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec cur = v;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    auto it = rows_.find(cur[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    int col = cur[pos].first;
    cur = sparse_axpy(cur, -cur[pos].second, it->second);
    pos = 0;
    while (pos < cur.size() && cur[pos].first <= col) ++pos;
  }
  return cur;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  RatFunc inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  int piv = r.front().first;
  rows_.emplace(piv, std::move(r));
  return true;
}

std::map<int, SparseVec> Echelon::reduced_rows() const {
  std::map<int, SparseVec> out = rows_;
  // back substitution from the last pivot upward
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    int piv = it->first;
    for (auto jt = out.begin(); jt->first != piv; ++jt) {
      const SparseVec& row = jt->second;
      for (const auto& [c, x] : row) {
        if (c == piv) {
          jt->second = sparse_axpy(row, -x, it->second);
          break;
        }
        if (c > piv) break;
      }
    }
  }
  return out;
}

std::vector<std::vector<RatFunc>> kernel_of_rows(const std::vector<SparseVec>& rows, int cols) {
  Echelon e;
  for (const auto& r : rows) {
    if (e.rank() == cols) break;
    e.insert(r);
  }
  auto red = e.reduced_rows();
  std::vector<std::vector<RatFunc>> basis;
  for (int f = 0; f < cols; ++f) {
    if (red.count(f)) continue;
    std::vector<RatFunc> v(cols);
    v[f] = 1;
    for (const auto& [piv, row] : red)
      for (const auto& [c, x] : row)
        if (c == f) v[piv] = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::vector<SparseVec> sparse_rows(const ExactMatrix& m) {
  std::vector<SparseVec> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) rows[i].emplace_back(j, m.at(i, j));
  return rows;
}

}  // namespace

int rank_exact(const ExactMatrix& m) {
  Echelon e;
  for (const auto& r : sparse_rows(m)) e.insert(r);
  return e.rank();
}

std::vector<std::vector<RatFunc>> kernel_basis(const ExactMatrix& m) {
  return kernel_of_rows(sparse_rows(m), m.cols());
}

int rank_bareiss(const ExactMatrix& m) {
  int R = m.rows(), C = m.cols();
  std::vector<std::vector<Poly>> a(R, std::vector<Poly>(C));
  for (int i = 0; i < R; ++i) {
    Poly l(1);
    for (int j = 0; j < C; ++j) {
      const Poly& d = m.at(i, j).den();
      if (d.degree() > 0) l = Poly::exact_div(l * d, Poly::gcd(l, d));
    }
    for (int j = 0; j < C; ++j) {
      const RatFunc& x = m.at(i, j);
      if (!x.is_zero()) a[i][j] = Poly::exact_div(x.num() * l, x.den());
    }
  }
  Poly prev(1);
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int i = rank; i < R; ++i)
      if (!a[i][col].is_zero() && (piv < 0 || a[i][col].degree() < a[piv][col].degree())) piv = i;
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < R; ++i) {
      for (int j = col + 1; j < C; ++j)
        a[i][j] = Poly::exact_div(a[rank][col] * a[i][j] - a[i][col] * a[rank][j], prev);
      a[i][col] = Poly();
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int rank_at_points(const ExactMatrix& m, const std::vector<mpq_class>& points) {
  int best = -1;
  for (const auto& x : points) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    bool pole = false;
    for (int i = 0; i < m.rows() && !pole; ++i)
      for (int j = 0; j < m.cols(); ++j) {
        auto v = m.at(i, j).eval(x);
        if (!v) {
          pole = true;
          break;
        }
        a[i][j] = *v;
      }
    if (pole) continue;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
      int piv = -1;
      for (int i = rank; i < m.rows(); ++i)
        if (sgn(a[i][col]) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[rank]);
      for (int i = rank + 1; i < m.rows(); ++i) {
        if (sgn(a[i][col]) == 0) continue;
        mpq_class f = a[i][col] / a[rank][col];
        for (int j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
      }
      ++rank;
    }
    best = std::max(best, rank);
  }
  if (best < 0) throw std::runtime_error("rank_at_points: every sample point is a pole");
  return best;
}

int rank_probabilistic(const ExactMatrix& m, int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("rank_probabilistic: sample_count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(2, 997), den(1, 61);
  std::vector<mpq_class> pts;
  while (static_cast<int>(pts.size()) < sample_count) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    bool dup = false;
    for (const auto& p : pts) dup = dup || p == x;
    if (!dup && x != 1) pts.push_back(x);
  }
  return rank_at_points(m, pts);
}

}  // namespace qgrass
