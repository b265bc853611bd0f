#include "qgrass/borelweil.hpp"

#include "qgrass/comodules.hpp"
#include "qgrass/exact_matrix.hpp"
#include "qgrass/minors.hpp"
#include "qgrass/parallel.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace qgrass {

namespace {

struct Raw {
  std::string label;
  NCPoly p;
};

// all ordered m-fold products of the factors
std::vector<Raw> ordered_products(int n, const std::vector<Raw>& factors, int m) {
  std::vector<Raw> out{{"", NCPoly::scalar(n, 1)}};
  for (int step = 0; step < m; ++step) {
    std::vector<Raw> next;
    for (const auto& a : out)
      for (const auto& f : factors) next.push_back({a.label + f.label, mul(a.p, f.p)});
    out = std::move(next);
  }
  return out;
}

class WordIndex {
 public:
  SparseVec vec(const NCPoly& p) {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) v.emplace_back(index_.try_emplace(w, int(index_.size())).first->second, c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

 private:
  std::unordered_map<Word, int, WordHash> index_;
};

void check_params(int n, int r) {
  if (n < 2 || r < 1 || r >= n) throw std::invalid_argument("need n >= 2 and 1 <= r < n");
}

}  // namespace

BundleSpan bundle_span(int n, int r, int k, int extra) {
  check_params(n, r);
  if (extra < 0) throw std::invalid_argument("bundle_span: extra must be non-negative");
  BundleSpan s;
  s.n = n;
  s.r = r;
  s.k = k;
  s.extra = extra;

  std::vector<Raw> gens;
  if (k > 0)
    for (const auto& I : subsets(n, r)) gens.push_back({"z" + I.to_string(), z_plus(n, r, I)});
  else if (k < 0)
    for (const auto& J : subsets(n, n - r)) gens.push_back({"zb" + J.to_string(), z_bar(n, r, J)});
  std::vector<Raw> core = ordered_products(n, gens, k < 0 ? -k : k);

  std::vector<Raw> pad;
  if (extra > 0) {
    std::vector<Raw> pairs;
    for (const auto& I : subsets(n, r))
      for (const auto& J : subsets(n, n - r)) pairs.push_back({"zz" + I.to_string() + J.to_string(), z_gr(n, r, I, J)});
    NCPoly det = qdet(n);
    for (int m = 0; m <= extra; ++m) {
      NCPoly dp = power(det, extra - m);
      std::string dl = extra - m > 0 ? "det^" + std::to_string(extra - m) : "";
      for (auto& pr : ordered_products(n, pairs, m)) pad.push_back({pr.label + dl, mul(pr.p, dp)});
    }
  } else {
    pad.push_back({"", NCPoly::scalar(n, 1)});
  }

  WordIndex idx;
  Echelon ech;
  for (const auto& c : core)
    for (const auto& p : pad) {
      std::string label = c.label + p.label;
      if (label.empty()) label = "1";
      s.raw_span.push_back(label);
      NCPoly prod = mul(c.p, p.p);
      if (ech.insert(idx.vec(prod))) {
        s.basis.push_back(std::move(prod));
        s.basis_labels.push_back(label);
      }
    }
  return s;
}

int span_rank(const std::vector<NCPoly>& elems) {
  WordIndex idx;
  Echelon ech;
  for (const auto& e : elems) ech.insert(idx.vec(e));
  return ech.rank();
}

KernelResult joint_kernel(const BundleSpan& s, const std::vector<Holo>& ops, const KernelOptions& opt) {
  const RTable& t = opt.table ? *opt.table : unscaled_table(s.n);
  if (t.n() != s.n) throw std::invalid_argument("joint_kernel: r-table size does not match the span");
  std::size_t cols = s.basis.size();
  std::vector<std::vector<FormVector>> images(cols);
  parallel_for(cols, opt.jobs, [&](std::size_t c) {
    for (Holo op : ops) images[c].push_back(op == Holo::Dbar ? dbar(t, s.basis[c], s.r) : del(t, s.basis[c], s.r));
  });

  // rows indexed by (operator, index pair, monomial)
  std::map<std::tuple<int, int, int, Word>, SparseVec> rowmap;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t o = 0; o < ops.size(); ++o)
      for (const auto& [key, p] : images[c][o].components())
        for (const auto& [w, x] : p.terms()) rowmap[{int(o), key.first, key.second, w}].emplace_back(int(c), x);

  KernelResult res;
  std::vector<SparseVec> rows;
  rows.reserve(rowmap.size());
  for (auto& [k, v] : rowmap) rows.push_back(std::move(v));

  if (opt.prescreen && !rows.empty()) {
    ExactMatrix m(int(rows.size()), int(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, x] : rows[i]) m.at(int(i), c) = x;
    res.prescreen_rank = rank_probabilistic(m, 3, opt.seed);
  }

  auto ker = kernel_of_rows(rows, int(cols));
  res.dim = int(ker.size());
  for (const auto& v : ker) {
    NCPoly e(s.n);
    for (std::size_t c = 0; c < cols; ++c)
      if (!v[c].is_zero()) e += s.basis[c] * v[c];
    res.basis.push_back(std::move(e));
  }
  return res;
}

KernelResult h0(const BundleSpan& s, Holo op, const KernelOptions& opt) { return joint_kernel(s, {op}, opt); }

namespace {

nlohmann::json kernel_json(const KernelResult& k) {
  nlohmann::json j = {{"dim", k.dim}};
  if (k.prescreen_rank >= 0) j["prescreen_rank"] = k.prescreen_rank;
  return j;
}

}  // namespace

CheckResult verify_borel_weil(int n, int r, int k, const KernelOptions& opt) {
  check_params(n, r);
  if (k < 0) throw std::invalid_argument("verify_borel_weil: k must be non-negative");
  Stopwatch sw;
  CheckResult res;
  res.check = "borel-weil";
  res.params = {{"n", n}, {"r", r}, {"k", k}};
  long long want = dim_formula(r, k, n);
  res.expected = {{"h0_positive", want}, {"standard_monomials_holomorphic", true}, {"h0_negative", 0}};

  KernelResult pos = h0(bundle_span(n, r, k, k == 0 ? 1 : 0), Holo::Dbar, opt);
  auto tableaux = enumerate_ssyt(r, k, n);
  int holo = 0;
  for (const auto& T : tableaux)
    if (dbar(opt.table ? *opt.table : unscaled_table(n), standard_monomial(n, T), r).is_zero()) ++holo;
  int neg = 0;
  if (k >= 1) neg = h0(bundle_span(n, r, -k), Holo::Dbar, opt).dim;

  bool all_holo = holo == int(tableaux.size());
  res.got = {{"h0_positive", pos.dim},
             {"standard_monomials_holomorphic", all_holo},
             {"standard_monomials", {{"holomorphic", holo}, {"total", tableaux.size()}}},
             {"h0_negative", neg}};
  if (pos.prescreen_rank >= 0) res.got["prescreen_rank"] = pos.prescreen_rank;
  res.pass = pos.dim == want && all_holo && neg == 0;
  res.millis = sw.millis();
  return res;
}

CheckResult verify_coordinate_ring(int n, int r, int k_max, const KernelOptions& opt) {
  check_params(n, r);
  if (k_max < 1) throw std::invalid_argument("verify_coordinate_ring: k_max must be at least 1");
  Stopwatch sw;
  CheckResult res;
  res.check = "coordinate-ring";
  res.params = {{"n", n}, {"r", r}, {"k_max", k_max}};
  std::map<int, KernelResult> H;
  auto get = [&](int k) -> const KernelResult& {
    auto it = H.find(k);
    if (it == H.end()) it = H.emplace(k, h0(bundle_span(n, r, k), Holo::Dbar, opt)).first;
    return it->second;
  };
  const RTable& t = opt.table ? *opt.table : unscaled_table(n);
  nlohmann::json rows = nlohmann::json::array(), want = nlohmann::json::array();
  bool pass = true;
  for (int k = 1; k < k_max; ++k)
    for (int l = 1; k + l <= k_max; ++l) {
      const auto& a = get(k);
      const auto& b = get(l);
      const auto& c = get(k + l);
      std::vector<NCPoly> prods;
      int holo = 0;
      for (const auto& x : a.basis)
        for (const auto& y : b.basis) {
          prods.push_back(mul(x, y));
          if (dbar(t, prods.back(), r).is_zero()) ++holo;
        }
      int rk = span_rank(prods);
      std::vector<NCPoly> uni = prods;
      uni.insert(uni.end(), c.basis.begin(), c.basis.end());
      int rk_union = span_rank(uni);
      long long d = dim_formula(r, k + l, n);
      bool ok = holo == int(prods.size()) && rk == c.dim && rk_union == c.dim && c.dim == d;
      pass = pass && ok;
      want.push_back({{"k", k}, {"l", l}, {"rank", d}});
      rows.push_back({{"k", k},
                      {"l", l},
                      {"products", prods.size()},
                      {"holomorphic_products", holo},
                      {"rank", rk},
                      {"h0_sum_dim", c.dim},
                      {"rank_with_h0_sum", rk_union}});
    }
  res.expected = want;
  res.got = rows;
  res.pass = pass;
  res.millis = sw.millis();
  return res;
}

CheckResult verify_opposite(int n, int r, int k, const KernelOptions& opt) {
  check_params(n, r);
  if (k < 1) throw std::invalid_argument("verify_opposite: k must be at least 1");
  Stopwatch sw;
  CheckResult res;
  res.check = "opposite";
  res.params = {{"n", n}, {"r", r}, {"k", k}};
  long long want = dim_formula(r, k, n);
  res.expected = {{"del_kernel_positive", 0}, {"del_kernel_negative", want}};
  int pos = h0(bundle_span(n, r, k), Holo::Del, opt).dim;
  int neg = h0(bundle_span(n, r, -k), Holo::Del, opt).dim;
  res.got = {{"del_kernel_positive", pos}, {"del_kernel_negative", neg}};
  res.pass = pos == 0 && neg == want;
  res.millis = sw.millis();
  return res;
}

CheckResult verify_connectedness(int n, int r, int max_deg, const KernelOptions& opt) {
  check_params(n, r);
  if (max_deg < 1) throw std::invalid_argument("verify_connectedness: max_deg must be at least 1");
  Stopwatch sw;
  CheckResult res;
  res.check = "connectedness";
  res.params = {{"n", n}, {"r", r}, {"max_deg", max_deg}};
  res.expected = {{"dim", 1}, {"spanned_by_unit", true}};
  BundleSpan s = bundle_span(n, r, 0, max_deg);
  KernelResult k = joint_kernel(s, {Holo::Dbar, Holo::Del}, opt);
  // the unit appears as det^max_deg in this homogeneous model
  bool unit = k.dim == 1 && span_rank({k.basis[0], power(qdet(n), max_deg)}) == 1;
  res.got = {{"dim", k.dim}, {"spanned_by_unit", unit}, {"span_size", s.basis.size()}};
  res.pass = k.dim == 1 && unit;
  res.millis = sw.millis();
  return res;
}

namespace {

// S(z^A_K) with det^{-1} = 1, checked against the minor it is proportional to
struct LegFactor {
  NCPoly antipode;
  bool graded;
};

LegFactor leg_factor(int n, const IndexSet& A, const IndexSet& K) {
  NCPoly s = antipode_mod_det(minor(n, A, K));
  IndexSet Ac = A.complement(n), Kc = K.complement(n);
  NCPoly expect = minor(n, Kc, Ac) * minus_q_power(inversion_count(A, Ac) - inversion_count(K, Kc));
  return {s, eq_mod_det1(s, expect)};
}

}  // namespace

CheckResult verify_ell(int n, int r, int k_max) {
  check_params(n, r);
  if (k_max < 1) throw std::invalid_argument("verify_ell: k_max must be at least 1");
  Stopwatch sw;
  CheckResult res;
  res.check = "ell-map";
  res.params = {{"n", n}, {"r", r}, {"k_max", k_max}};
  res.expected = {{"unit", true}, {"multiplication_is_counit", true}, {"legs_graded", true}};

  // l(1) = 1 (x) 1
  TensorPoly one(n);
  one.add(Word(), Word(), 1);
  TensorPoly unit_image(n);
  unit_image.add_product(NCPoly::scalar(n, 1), NCPoly::scalar(n, 1));
  bool unit = one == unit_image;

  bool mult = unit, graded = true;
  nlohmann::json rows = nlohmann::json::array();
  IndexSet R = block_R(r), Rc = block_Rc(n, r);
  for (int k = -k_max; k <= k_max; ++k) {
    if (k == 0) continue;
    const IndexSet& A = k > 0 ? R : Rc;
    int m = k > 0 ? k : -k;
    std::vector<IndexSet> Ks = subsets(n, A.size());
    std::map<IndexSet, LegFactor> legs;
    for (const auto& K : Ks) legs.emplace(K, leg_factor(n, A, K));
    bool g = true;
    for (const auto& [K, f] : legs) g = g && f.graded;

    // sum over K_1..K_m of S(z^A_{K_m})...S(z^A_{K_1}) z^{K_1}_A ... z^{K_m}_A
    NCPoly total(n);
    std::vector<std::size_t> ix(m, 0);
    std::size_t terms = 0;
    while (true) {
      NCPoly left = NCPoly::scalar(n, 1), right = NCPoly::scalar(n, 1);
      for (int s = m - 1; s >= 0; --s) left = mul(left, legs.at(Ks[ix[s]]).antipode);
      for (int s = 0; s < m; ++s) right = mul(right, minor(n, Ks[ix[s]], A));
      total += mul(left, right);
      ++terms;
      int p = m - 1;
      while (p >= 0 && ++ix[p] == Ks.size()) ix[p--] = 0;
      if (p < 0) break;
    }
    bool ok = eq_mod_det1(total, NCPoly::scalar(n, 1));
    mult = mult && ok;
    graded = graded && g;
    rows.push_back({{"k", k}, {"terms", terms}, {"multiplication_is_counit", ok}, {"legs_graded", g}});
  }
  res.got = {{"unit", unit}, {"multiplication_is_counit", mult}, {"legs_graded", graded}, {"by_degree", rows}};
  res.pass = unit && mult && graded;
  res.millis = sw.millis();
  return res;
}

}  // namespace qgrass
