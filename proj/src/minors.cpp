#include "qgrass/minors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgrass {

IndexSet::IndexSet(std::vector<int> elems) : e_(std::move(elems)) {
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] < 1) throw std::invalid_argument("IndexSet: elements must be positive");
    if (k > 0 && e_[k - 1] >= e_[k]) throw std::invalid_argument("IndexSet: elements must be strictly increasing");
  }
}

IndexSet IndexSet::range(int a, int b) {
  std::vector<int> e;
  for (int x = a; x <= b; ++x) e.push_back(x);
  return IndexSet(std::move(e));
}

bool IndexSet::contains(int x) const { return std::binary_search(e_.begin(), e_.end(), x); }

IndexSet IndexSet::complement(int n) const { return complement_in(range(1, n)); }

IndexSet IndexSet::complement_in(const IndexSet& universe) const {
  std::vector<int> e;
  for (int x : universe.e_)
    if (!contains(x)) e.push_back(x);
  return IndexSet(std::move(e));
}

bool IndexSet::subset_of(const IndexSet& o) const {
  return std::includes(o.e_.begin(), o.e_.end(), e_.begin(), e_.end());
}

IndexSet IndexSet::with(int x) const {
  std::vector<int> e = e_;
  if (!contains(x)) e.insert(std::upper_bound(e.begin(), e.end(), x), x);
  return IndexSet(std::move(e));
}

IndexSet IndexSet::without(int x) const {
  std::vector<int> e;
  for (int y : e_)
    if (y != x) e.push_back(y);
  return IndexSet(std::move(e));
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < e_.size(); ++k) s += (k ? "," : "") + std::to_string(e_[k]);
  return s + "}";
}

IndexSet IndexSet::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw std::invalid_argument("IndexSet::parse: " + s);
  std::vector<int> e;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) e.push_back(std::stoi(tok));
  return IndexSet(std::move(e));
}

std::vector<IndexSet> subsets_of(const IndexSet& universe, int size) {
  std::vector<IndexSet> out;
  const auto& u = universe.elems();
  int m = static_cast<int>(u.size());
  if (size < 0 || size > m) return out;
  std::vector<int> idx(size);
  for (int k = 0; k < size; ++k) idx[k] = k;
  while (true) {
    std::vector<int> e;
    for (int k : idx) e.push_back(u[k]);
    out.emplace_back(std::move(e));
    int k = size - 1;
    while (k >= 0 && idx[k] == m - size + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int t = k + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> subsets(int n, int size) { return subsets_of(IndexSet::range(1, n), size); }

int inversion_count(const IndexSet& s, const IndexSet& t) {
  int c = 0;
  for (int a : s.elems())
    for (int b : t.elems())
      if (a > b) ++c;
  return c;
}

std::optional<IndexSet> index_surgery(const IndexSet& I, int i, int j) {
  if (i == j) return I;
  if (!I.contains(i) || I.contains(j)) return std::nullopt;
  return I.without(i).with(j);
}

RatFunc minus_q_power(int k) {
  RatFunc r = RatFunc::q_pow(k);
  return (k % 2 != 0) ? -r : r;
}

namespace {

int perm_inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++c;
  return c;
}

void check_minor_args(int n, const IndexSet& I, const IndexSet& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor: |I| != |J|");
  if (I.max() > n || J.max() > n) throw std::out_of_range("minor: index exceeds n");
}

}  // namespace

NCPoly minor(int n, const IndexSet& I, const IndexSet& J) {
  check_minor_args(n, I, J);
  NCPoly out(n);
  std::vector<int> cols = J.elems();
  do {
    Word w;
    for (int t = 0; t < I.size(); ++t) w.push(letter_of(n, I.elems()[t], cols[t]));
    out.add_term(w, minus_q_power(perm_inversions(cols)));
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

NCPoly minor(int n, const std::optional<IndexSet>& I, const std::optional<IndexSet>& J) {
  if (!I || !J) return NCPoly(n);
  return minor(n, *I, *J);
}

NCPoly minor_row_form(int n, const IndexSet& I, const IndexSet& J) {
  check_minor_args(n, I, J);
  NCPoly out(n);
  std::vector<int> rows = I.elems();
  do {
    Word w;
    for (int t = 0; t < J.size(); ++t) w.push(letter_of(n, rows[t], J.elems()[t]));
    out += normal_form(n, w, minus_q_power(perm_inversions(rows)));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

bool laplace_check(int n, const IndexSet& I, const IndexSet& J, const IndexSet& J1) {
  if (I.size() != J.size()) throw std::invalid_argument("laplace_check: |I| != |J|");
  if (J1.empty() || !J1.subset_of(J)) throw std::invalid_argument("laplace_check: J1 must be a nonempty subset of J");
  IndexSet J1c = J1.complement_in(J);
  NCPoly lhs = minor(n, I, J) * minus_q_power(inversion_count(J1, J1c));
  NCPoly rhs(n);
  for (const auto& I1 : subsets_of(I, J1.size())) {
    IndexSet I1c = I1.complement_in(I);
    rhs += mul(minor(n, I1, J1), minor(n, I1c, J1c)) * minus_q_power(inversion_count(I1, I1c));
  }
  return lhs == rhs;
}

IndexSet block_R(int r) { return IndexSet::range(1, r); }
IndexSet block_Rc(int n, int r) { return IndexSet::range(r + 1, n); }

NCPoly z_plus(int n, int r, const IndexSet& I) {
  if (I.size() != r) throw std::invalid_argument("z_plus: |I| must equal r");
  return minor(n, I, block_R(r));
}

NCPoly z_bar(int n, int r, const IndexSet& J) {
  if (J.size() != n - r) throw std::invalid_argument("z_bar: |J| must equal n-r");
  return minor(n, J, block_Rc(n, r));
}

NCPoly z_gr(int n, int r, const IndexSet& I, const IndexSet& J) { return mul(z_plus(n, r, I), z_bar(n, r, J)); }

NCPoly z_lower(int n, int r, const IndexSet& I) {
  if (I.size() != r) throw std::invalid_argument("z_lower: |I| must equal r");
  return minor(n, block_R(r), I);
}

bool star_minor_check(int n, const IndexSet& I, const IndexSet& J) {
  NCPoly lhs = antipode_mod_det(minor(n, J, I));
  IndexSet Ic = I.complement(n), Jc = J.complement(n);
  NCPoly rhs = minor(n, Ic, Jc) * minus_q_power(inversion_count(J, Jc) - inversion_count(I, Ic));
  return eq_mod_det1(lhs, rhs);
}

}  // namespace qgrass
