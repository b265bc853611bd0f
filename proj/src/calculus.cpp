#include "qgrass/calculus.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace qgrass {

bool in_domain(FormDomain d, int, int r, int i, int j) {
  bool ir = i <= r, jr = j <= r;
  switch (d) {
    case FormDomain::OffDiag: return i != j;
    case FormDomain::Holo: return !ir && jr;
    case FormDomain::AntiHolo: return ir && !jr;
    case FormDomain::Levi: return ir && jr;
  }
  return false;
}

std::vector<std::pair<int, int>> domain_pairs(FormDomain d, int n, int r) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (in_domain(d, n, r, i, j)) out.emplace_back(i, j);
  return out;
}

std::string domain_name(FormDomain d) {
  switch (d) {
    case FormDomain::OffDiag: return "offdiag";
    case FormDomain::Holo: return "holo";
    case FormDomain::AntiHolo: return "antiholo";
    case FormDomain::Levi: return "levi";
  }
  return "";
}

NCPoly FormVector::component(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? NCPoly(n_) : it->second;
}

void FormVector::add(int i, int j, const NCPoly& p) {
  if (!in_domain(d_, n_, r_, i, j)) throw std::invalid_argument("FormVector: index pair outside domain");
  if (p.is_zero()) return;
  auto [it, fresh] = c_.try_emplace({i, j}, p);
  if (fresh) return;
  it->second += p;
  if (it->second.is_zero()) c_.erase(it);
}

FormVector FormVector::left_mul(const NCPoly& f) const {
  FormVector v(n_, r_, d_);
  for (const auto& [k, p] : c_) v.add(k.first, k.second, mul(f, p));
  return v;
}

RatFunc lambda1_coord(const RTable& t, const NCPoly& g, int i, int j) {
  if (i == j) throw std::invalid_argument("lambda1_coord: diagonal coordinates are not supported");
  // Q_ji(1) vanishes off the diagonal
  return killing_Q(t, g).at(j - 1, i - 1);
}

RatFunc lambda1_coord(const NCPoly& g, int i, int j) { return lambda1_coord(unscaled_table(g.n()), g, i, j); }

namespace {

using PairMap = std::map<std::pair<int, int>, NCPoly>;

// all off-diagonal components of d(w) for one normal monomial
PairMap differential_word(const RTable& t, const Word& w) {
  int n = t.n();
  std::size_t d = w.size();
  std::vector<int> p(d), s(d), count_s(n + 1, 0);
  for (std::size_t k = 0; k < d; ++k) {
    Gen g = w.gen(n, k);
    p[k] = g.row;
    s[k] = g.col;
    ++count_s[g.col];
  }
  std::map<std::pair<int, int>, std::map<Word, RatFunc>> raw;
  std::vector<int> count_k(n + 1, 0);
  using E = std::map<std::pair<int, int>, RatFunc>;
  std::string left;
  // the chosen middle indices differ from the column multiset by at most one swap
  std::function<void(std::size_t, const E&, int)> rec = [&](std::size_t k, const E& e, int excess) {
    if (k == d) {
      for (const auto& [key, v] : e) {
        int j = key.first + 1, i = key.second + 1;
        if (i == j) continue;
        auto& bucket = raw[{i, j}];
        auto [it, fresh] = bucket.try_emplace(Word(left), v);
        if (!fresh) it->second += v;
      }
      return;
    }
    for (int m = 1; m <= n; ++m) {
      int ex = excess + (count_k[m] + 1 > count_s[m] ? 1 : 0);
      if (ex > 1) continue;
      E next;
      for (const auto& en : t.transfer(letter_of(n, m, s[k]))) {
        auto it = e.find({en.in_row, en.in_col});
        if (it == e.end()) continue;
        next[{en.out_row, en.out_col}] += en.c * it->second;
      }
      for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
      if (next.empty()) continue;
      ++count_k[m];
      left.push_back(static_cast<char>(letter_of(n, p[k], m)));
      rec(k + 1, next, ex);
      left.pop_back();
      --count_k[m];
    }
  };
  E start;
  for (int i = 0; i < n; ++i) start[{i, i}] = 1;
  rec(0, start, 0);
  PairMap out;
  for (auto& [key, words] : raw) {
    NCPoly acc(n);
    for (auto& [word, c] : words)
      if (!c.is_zero()) acc += normal_form(n, word, c);
    if (!acc.is_zero()) out.emplace(key, std::move(acc));
  }
  return out;
}

const PairMap& differential_word_cached(const RTable& t, const Word& w) {
  // keyed by content: a table is determined by n and its scale
  static thread_local std::map<std::pair<int, std::string>, std::unordered_map<Word, PairMap, WordHash>> cache;
  auto& c = cache[{t.n(), t.scale().to_string()}];
  auto it = c.find(w);
  if (it != c.end()) return it->second;
  return c.emplace(w, differential_word(t, w)).first->second;
}

FormVector differential(const RTable& t, const NCPoly& g, int r, FormDomain dom) {
  int n = g.n();
  if (r < 1 || r >= n) throw std::invalid_argument("differential: need 1 <= r < n");
  std::map<std::pair<int, int>, NCPoly> acc;
  for (const auto& [w, c] : g.terms())
    for (const auto& [key, p] : differential_word_cached(t, w))
      if (in_domain(dom, n, r, key.first, key.second)) {
        auto [it, fresh] = acc.try_emplace(key, p * c);
        if (!fresh) it->second += p * c;
      }
  FormVector v(n, r, dom);
  for (auto& [key, p] : acc) v.add(key.first, key.second, p);
  return v;
}

FormVector differential_brute(const NCPoly& g, int r, FormDomain dom) {
  int n = g.n();
  const RTable& t = unscaled_table(n);
  FormVector v(n, r, dom);
  TensorPoly cp = coproduct(g);
  for (const auto& [k, c] : cp.terms()) {
    KillingMatrix q = killing_Q(t, NCPoly::from_normal_word(n, k.second), QMode::BruteForce);
    for (const auto& [i, j] : domain_pairs(dom, n, r)) {
      const RatFunc& x = q.at(j - 1, i - 1);
      if (!x.is_zero()) v.add(i, j, NCPoly::from_normal_word(n, k.first, c * x));
    }
  }
  return v;
}

FormVector minor_closed(int n, int r, const IndexSet& I, const IndexSet& J, FormDomain dom) {
  FormVector v(n, r, dom);
  for (const auto& [i, j] : domain_pairs(dom, n, r)) {
    auto Jji = index_surgery(J, j, i);
    if (!Jji) continue;
    RatFunc c = killing_Q(minor(n, *Jji, J)).at(j - 1, i - 1);
    if (c.is_zero()) continue;
    v.add(i, j, minor(n, I, *Jji) * c);
  }
  return v;
}

}  // namespace

FormVector dbar(const RTable& t, const NCPoly& g, int r) { return differential(t, g, r, FormDomain::AntiHolo); }
FormVector dbar(const NCPoly& g, int r) { return dbar(unscaled_table(g.n()), g, r); }
FormVector del(const RTable& t, const NCPoly& g, int r) { return differential(t, g, r, FormDomain::Holo); }
FormVector del(const NCPoly& g, int r) { return del(unscaled_table(g.n()), g, r); }
FormVector dbar_brute(const NCPoly& g, int r) { return differential_brute(g, r, FormDomain::AntiHolo); }
FormVector del_brute(const NCPoly& g, int r) { return differential_brute(g, r, FormDomain::Holo); }

FormVector dbar_minor_closed(int n, int r, const IndexSet& I, const IndexSet& J) {
  return minor_closed(n, r, I, J, FormDomain::AntiHolo);
}

FormVector del_minor_closed(int n, int r, const IndexSet& I, const IndexSet& J) {
  return minor_closed(n, r, I, J, FormDomain::Holo);
}

int hk_first_order_dim(int n, int r) {
  if (n < 2 || r < 1 || r >= n) throw std::invalid_argument("hk_first_order_dim: need n >= 2, 1 <= r < n");
  auto pairs = domain_pairs(FormDomain::Holo, n, r);
  auto anti = domain_pairs(FormDomain::AntiHolo, n, r);
  pairs.insert(pairs.end(), anti.begin(), anti.end());
  std::vector<NCPoly> gens;
  for (const auto& I : subsets(n, r))
    for (const auto& J : subsets(n, n - r)) gens.push_back(z_gr(n, r, I, J));
  ExactMatrix m(static_cast<int>(gens.size()), static_cast<int>(pairs.size()));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    KillingMatrix q = killing_Q(gens[a]);
    for (std::size_t b = 0; b < pairs.size(); ++b) m.at(a, b) = q.at(pairs[b].second - 1, pairs[b].first - 1);
  }
  return rank_exact(m);
}

FormVector proj_V0(const FormVector& v) {
  FormVector out(v.n(), v.r(), FormDomain::Levi);
  for (const auto& [k, p] : v.components())
    if (in_domain(FormDomain::Levi, v.n(), v.r(), k.first, k.second)) out.add(k.first, k.second, p);
  return out;
}

}  // namespace qgrass
