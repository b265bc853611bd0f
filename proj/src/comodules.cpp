#include "qgrass/comodules.hpp"

#include <functional>
#include <stdexcept>

namespace qgrass {

DomWeight::DomWeight(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("DomWeight: negative part");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("DomWeight: parts must be non-increasing");
  }
}

DomWeight DomWeight::rectangle(int r, int k) { return DomWeight(std::vector<int>(r, k)); }

Tableau::Tableau(int rows, int cols, std::vector<int> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0 || static_cast<int>(e_.size()) != rows * cols)
    throw std::invalid_argument("Tableau: entry count does not match shape");
}

IndexSet Tableau::column(int s) const {
  std::vector<int> c;
  for (int i = 0; i < rows_; ++i) c.push_back(at(i, s));
  return IndexSet(c);
}

bool Tableau::is_semistandard() const {
  for (int i = 0; i < rows_; ++i)
    for (int s = 0; s < cols_; ++s) {
      if (at(i, s) < 1) return false;
      if (i > 0 && at(i - 1, s) >= at(i, s)) return false;
      if (s > 0 && at(i, s - 1) > at(i, s)) return false;
    }
  return true;
}

DomWeight Tableau::shape() const { return DomWeight::rectangle(rows_, cols_); }

std::string Tableau::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < e_.size(); ++k) s += (k ? "," : "") + std::to_string(e_[k]);
  return s + "]";
}

std::vector<Tableau> enumerate_ssyt(int r, int k, int n) {
  if (r < 1 || r >= n || k < 0) throw std::invalid_argument("enumerate_ssyt: need 1 <= r < n, k >= 0");
  auto cols = subsets(n, r);
  std::vector<Tableau> out;
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) {
      std::vector<int> e(r * k);
      for (int s = 0; s < k; ++s)
        for (int i = 0; i < r; ++i) e[i * k + s] = cols[chosen[s]].elems()[i];
      out.emplace_back(r, k, std::move(e));
      return;
    }
    for (std::size_t c = from; c < cols.size(); ++c) {
      if (!chosen.empty()) {
        const auto& prev = cols[chosen.back()].elems();
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) ok = prev[i] <= cols[c].elems()[i];
        if (!ok) continue;
      }
      chosen.push_back(static_cast<int>(c));
      rec(c);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

long long dim_formula(int r, int k, int n) {
  if (r < 1 || r >= n || k < 0) throw std::invalid_argument("dim_formula: need 1 <= r < n, k >= 0");
  mpq_class d = 1;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= n - r; ++j) d *= mpq_class(k + i + j - 1, i + j - 1);
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("dim_formula: non-integral result");
  return d.get_num().get_si();
}

NCPoly standard_monomial(int n, const Tableau& T) {
  if (!T.is_semistandard()) throw std::invalid_argument("standard_monomial: tableau is not semistandard");
  NCPoly p = NCPoly::scalar(n, 1);
  for (int s = 0; s < T.cols(); ++s) p = mul(p, z_plus(n, T.rows(), T.column(s)));
  return p;
}

std::vector<int> k_weight(int n, const Word& m, WeightSide side) {
  std::vector<int> w(n - 1, 0);
  for (std::size_t t = 0; t < m.size(); ++t) {
    Gen g = m.gen(n, t);
    int a = side == WeightSide::Row ? g.row : g.col;
    if (a <= n - 1) --w[a - 1];
    if (a >= 2) ++w[a - 2];
  }
  return w;
}

std::vector<int> k_weight(const NCPoly& f, WeightSide side) {
  std::vector<int> w(f.n() - 1, 0);
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    auto x = k_weight(f.n(), m, side);
    if (first) {
      w = x;
      first = false;
    } else if (x != w) {
      throw std::invalid_argument("k_weight: element mixes weights");
    }
  }
  return w;
}

}  // namespace qgrass
