#include "qgrass/rform.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qgrass {

RatFunc r_gen(int n, int i, int j, int k, int l) {
  for (int x : {i, j, k, l})
    if (x < 1 || x > n) throw std::out_of_range("r_gen: index");
  RatFunc v;
  if (i == j && k == l) v += (i == k) ? RatFunc::q() : RatFunc(1);
  if (i > k && i == l && k == j) v += RatFunc::q() - RatFunc::q_pow(-1);
  return v;
}

RTable::RTable(int n, const RatFunc& scale) : n_(n), scale_(scale) {
  t_.resize(static_cast<std::size_t>(n) * n * n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          t_[(((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1)] = r_gen(n, i, j, k, l) * scale;
  for (int y = 0; y < n * n; ++y) {
    int yr = y / n + 1, yc = y % n + 1;
    ExactMatrix m(n, n), nm(n, n);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        m.at(a - 1, b - 1) = (*this)(a, b, yr, yc);
        nm.at(a - 1, b - 1) = (*this)(yr, yc, a, b);
      }
    m_.push_back(m);
    nmat_.push_back(nm);
  }
  for (int p = 1; p <= n; ++p)
    for (int s = 1; s <= n; ++s) {
      std::map<std::array<int, 4>, RatFunc> acc;
      for (int m = 1; m <= n; ++m) {
        const ExactMatrix& L = m_[letter_of(n, p, m)];
        const ExactMatrix& R = nmat_[letter_of(n, m, s)];
        for (int j = 0; j < n; ++j)
          for (int a = 0; a < n; ++a) {
            if (L.at(j, a).is_zero()) continue;
            for (int b = 0; b < n; ++b)
              for (int i = 0; i < n; ++i) {
                if (R.at(b, i).is_zero()) continue;
                acc[{j, i, a, b}] += L.at(j, a) * R.at(b, i);
              }
          }
      }
      std::vector<Entry> es;
      for (auto& [k, c] : acc)
        if (!c.is_zero()) es.push_back({k[0], k[1], k[2], k[3], c});
      transfer_.push_back(std::move(es));
    }
}

const RTable& unscaled_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<RTable>(n);
  return *slot;
}

ExactMatrix l_plus(const RTable& t, const Word& w) {
  ExactMatrix m = ExactMatrix::identity(t.n());
  for (std::size_t k = 0; k < w.size(); ++k) m = t.M(w.letter(k)) * m;
  return m;
}

ExactMatrix l_minus(const RTable& t, const Word& w) {
  ExactMatrix m = ExactMatrix::identity(t.n());
  for (std::size_t k = 0; k < w.size(); ++k) m = m * t.N(w.letter(k));
  return m;
}

ExactMatrix l_plus(const RTable& t, const NCPoly& f) {
  ExactMatrix m(t.n(), t.n());
  for (const auto& [w, c] : f.terms()) m += l_plus(t, w).scaled(c);
  return m;
}

ExactMatrix l_minus(const RTable& t, const NCPoly& f) {
  ExactMatrix m(t.n(), t.n());
  for (const auto& [w, c] : f.terms()) m += l_minus(t, w).scaled(c);
  return m;
}

namespace {

RatFunc word_counit(int n, const Word& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    Gen g = w.gen(n, k);
    if (g.row != g.col) return RatFunc();
  }
  return 1;
}

// r(x (x) y) for a single generator x and a raw word y, by r(f (x) gh) = r(f1 (x) h) r(f2 (x) g)
RatFunc r_gen_word(const RTable& t, int xr, int xc, const Word& y) {
  int n = t.n();
  if (y.empty()) return xr == xc ? RatFunc(1) : RatFunc();
  Gen last = y.gen(n, y.size() - 1);
  Word head = y.sub(0, y.size() - 1);
  RatFunc s;
  for (int b = 1; b <= n; ++b) {
    const RatFunc& v = t(xr, b, last.row, last.col);
    if (v.is_zero()) continue;
    RatFunc rest = r_gen_word(t, b, xc, head);
    if (!rest.is_zero()) s += v * rest;
  }
  return s;
}

// r(x1..xa (x) y) by r(fg (x) h) = r(f (x) h1) r(g (x) h2)
RatFunc r_word_word(const RTable& t, const Word& x, const Word& y) {
  int n = t.n();
  if (x.empty()) return word_counit(n, y);
  if (y.empty()) return word_counit(n, x);
  Gen first = x.gen(n, 0);
  Word rest = x.sub(1);
  std::size_t d = y.size();
  std::vector<int> k(d, 1);
  RatFunc s;
  while (true) {
    Word left, right;
    for (std::size_t i = 0; i < d; ++i) {
      Gen g = y.gen(n, i);
      left.push(letter_of(n, g.row, k[i]));
      right.push(letter_of(n, k[i], g.col));
    }
    RatFunc a = r_gen_word(t, first.row, first.col, left);
    if (!a.is_zero()) {
      RatFunc b = r_word_word(t, rest, right);
      if (!b.is_zero()) s += a * b;
    }
    std::size_t i = 0;
    while (i < d && k[i] == n) k[i++] = 1;
    if (i == d) break;
    ++k[i];
  }
  return s;
}

}  // namespace

RatFunc r_eval(const RTable& t, const NCPoly& f, const NCPoly& g) {
  RatFunc s;
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) {
      RatFunc v = r_word_word(t, wf, wg);
      if (!v.is_zero()) s += cf * cg * v;
    }
  return s;
}

KillingMatrix killing_Q_word(const RTable& t, const Word& w) {
  int n = t.n();
  std::map<std::pair<int, int>, RatFunc> e;
  for (int i = 0; i < n; ++i) e[{i, i}] = 1;
  for (std::size_t k = 0; k < w.size() && !e.empty(); ++k) {
    std::map<std::pair<int, int>, RatFunc> next;
    for (const auto& en : t.transfer(w.letter(k))) {
      auto it = e.find({en.in_row, en.in_col});
      if (it == e.end()) continue;
      next[{en.out_row, en.out_col}] += en.c * it->second;
    }
    e.clear();
    for (auto& [key, v] : next)
      if (!v.is_zero()) e.emplace(key, std::move(v));
  }
  KillingMatrix m(n, n);
  for (auto& [key, v] : e) m.at(key.first, key.second) = v;
  return m;
}

KillingMatrix killing_Q(const RTable& t, const NCPoly& g, QMode mode) {
  int n = t.n();
  if (g.n() != n) throw std::invalid_argument("killing_Q: ambient size mismatch");
  KillingMatrix m(n, n);
  if (mode == QMode::Transfer) {
    for (const auto& [w, c] : g.terms()) m += killing_Q_word(t, w).scaled(c);
    return m;
  }
  TensorPoly cp = coproduct(g);
  for (const auto& [k, c] : cp.terms()) m += (l_plus(t, k.first) * l_minus(t, k.second)).scaled(c);
  return m;
}

KillingMatrix killing_Q(const NCPoly& g, QMode mode) { return killing_Q(unscaled_table(g.n()), g, mode); }

bool goodearl_support_r(int i, int j, const IndexSet& I, const IndexSet& J) {
  if (i < j) return false;
  auto s = index_surgery(I, j, i);
  return s && *s == J;
}

bool goodearl_support_minor_q(int i, int j, const IndexSet& I, const IndexSet& J) {
  auto s = index_surgery(J, i, j);
  return s && *s == I;
}

bool goodearl_support_q(int n, int r, int i, int j, const IndexSet& I, const IndexSet& J) {
  if (i > r && j > r) return true;
  IndexSet R = block_R(r), Rc = block_Rc(n, r);
  auto Rij = index_surgery(R, i, j);
  auto Rcij = index_surgery(Rc, i, j);
  return (Rij && *Rij == I && J == Rc) || (I == R && Rcij && *Rcij == J);
}

}  // namespace qgrass
