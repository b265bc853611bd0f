// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Expected values come from brute-force oracles or are written out by hand.

#include "oracles.hpp"
#include "qgrass/borelweil.hpp"
#include "qgrass/calculus.hpp"
#include "qgrass/commands.hpp"
#include "qgrass/comodules.hpp"
#include "qgrass/twisted.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

using namespace qgrass;

namespace {

struct Line {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, Line& l) {
  std::cout << (l.pass ? "PASS " : "FAIL ") << id << ' ' << name;
  if (!l.detail.str().empty()) std::cout << ": " << l.detail.str();
  std::cout << std::endl;
  if (!l.pass) ++failures;
}

const std::vector<std::tuple<int, int, std::vector<int>>> kBorelWeilGrid{
    {2, 1, {1, 2, 3, 4, 5}}, {3, 1, {1, 3, 6, 10}}, {3, 2, {1, 3, 6}}, {4, 2, {1, 6, 20}}};

std::string tag(int n, int r, int k) {
  return "(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",k=" + std::to_string(k) + ")";
}

void borel_weil_dims() {
  Line l;
  for (const auto& [n, r, dims] : kBorelWeilGrid)
    for (int k = 0; k < int(dims.size()); ++k) {
      if (oracle::count_ssyt(r, k, n) != dims[k]) l.fail("oracle disagrees with table at " + tag(n, r, k));
      // the degree-0 bundle needs one Grassmannian generator padded by det to see anything but scalars
      int d = h0(bundle_span(n, r, k, k == 0 ? 1 : 0)).dim;
      if (d != dims[k]) l.fail("dim " + std::to_string(d) + " at " + tag(n, r, k));
    }
  if (l.pass) l.detail << "all 15 grid points";
  report(1, "borel-weil dimensions", l);
}

void vanishing() {
  Line l;
  for (const auto& [n, r, dims] : kBorelWeilGrid)
    for (int k = 1; k <= 2; ++k)
      if (int d = h0(bundle_span(n, r, -k)).dim; d != 0) l.fail("dim " + std::to_string(d) + " at " + tag(n, r, -k));
  report(2, "negative-degree vanishing", l);
}

void standard_monomials() {
  Line l;
  int count = 0;
  for (const auto& [n, r, dims] : kBorelWeilGrid)
    for (int k = 0; k < int(dims.size()); ++k)
      for (const auto& fill : oracle::semistandard_fillings(r, k, n)) {
        ++count;
        if (!dbar(standard_monomial(n, Tableau(r, k, fill)), r).is_zero()) l.fail("non-holomorphic at " + tag(n, r, k));
      }
  l.detail << count << " tableaux";
  report(3, "standard monomials holomorphic", l);
}

void calculus_dim() {
  Line l;
  for (auto [n, r, want] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 4}, {4, 1, 6}, {4, 2, 8}}) {
    int got = hk_first_order_dim(n, r);
    if (got != want || got != 2 * r * (n - r)) l.fail(std::to_string(got) + " at n=" + std::to_string(n));
  }
  report(4, "calculus dimension", l);
}

// support statements re-encoded with std::set: r(u^i_j, z^I_J) needs i >= j and J = I - {j} + {i};
// Q_ij(z^I_J) needs I = J - {i} + {j}
bool swap_matches(const IndexSet& from, int out, int in, const IndexSet& to) {
  if (out == in) return from == to;
  std::set<int> s(from.elems().begin(), from.elems().end());
  if (!s.count(out)) return false;
  s.erase(out);
  s.insert(in);
  return std::set<int>(to.elems().begin(), to.elems().end()) == s && int(s.size()) == to.size();
}

void goodearl() {
  Line l;
  long cases = 0;
  for (int n = 2; n <= 3; ++n) {
    const RTable& t = unscaled_table(n);
    for (int s = 1; s <= n; ++s)
      for (const auto& I : subsets(n, s))
        for (const auto& J : subsets(n, s)) {
          NCPoly m = minor(n, I, J);
          KillingMatrix Q = killing_Q(t, m, QMode::BruteForce);
          for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
              cases += 2;
              bool r_allowed = i >= j && swap_matches(I, j, i, J);
              if (!r_allowed && !r_eval(t, NCPoly::gen(n, i, j), m).is_zero())
                l.fail("r(u^" + std::to_string(i) + "_" + std::to_string(j) + ", z^" + I.to_string() + "_" + J.to_string() + ")");
              if (!swap_matches(J, i, j, I) && !Q.at(i - 1, j - 1).is_zero())
                l.fail("Q_" + std::to_string(i) + std::to_string(j) + "(z^" + I.to_string() + "_" + J.to_string() + ")");
            }
        }
  }
  l.detail << (l.pass ? "" : "; ") << cases << " cases";
  report(5, "goodearl support", l);
}

void laplace() {
  Line l;
  long cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int s = 1; s <= n; ++s)
      for (const auto& I : subsets(n, s))
        for (const auto& J : subsets(n, s))
          for (int s1 = 1; s1 <= s; ++s1)
            for (const auto& J1 : subsets_of(J, s1)) {
              ++cases;
              if (!laplace_check(n, I, J, J1)) l.fail(I.to_string() + J.to_string() + J1.to_string());
            }
  NCPoly det2 = NCPoly::parse(2, "u[1,1]u[2,2]") - mul(NCPoly::gen(2, 2, 1), NCPoly::gen(2, 1, 2)) * RatFunc::q();
  if (!(qdet(2) == det2)) l.fail("det_2 = " + qdet(2).to_string());
  l.detail << (l.pass ? "" : "; ") << cases << " cases";
  report(6, "laplace identities", l);
}

void killing_constants() {
  Line l;
  RatFunc q2 = RatFunc::q_pow(2), qm2 = RatFunc::q_pow(-2);
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r <= 2 && r < n; ++r) {
      const RTable& t = unscaled_table(n);
      KillingMatrix Qz = killing_Q(t, z_plus(n, r, block_R(r)), QMode::BruteForce);
      KillingMatrix Qzb = killing_Q(t, z_bar(n, r, block_Rc(n, r)), QMode::BruteForce);
      for (int i = 1; i <= n; ++i) {
        std::string at = " at n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",i=" + std::to_string(i);
        if (i <= r && Qz.at(i - 1, i - 1) != q2) l.fail("Q_ii(z)=" + Qz.at(i - 1, i - 1).to_string() + at);
        if (Qzb.at(i - 1, i - 1) != qm2) l.fail("Q_ii(zbar)=" + Qzb.at(i - 1, i - 1).to_string() + at);
      }
    }
  int bad = 0;
  for (int n = 2; n <= 4; ++n)
    for (int s = 1; s <= n; ++s)
      for (const auto& I : subsets(n, s))
        for (const auto& J : subsets(n, s)) {
          NCPoly m = minor(n, I, J);
          if (!(killing_Q(m, QMode::BruteForce) == killing_Q(m, QMode::Transfer))) ++bad;
        }
  if (bad) l.fail(std::to_string(bad) + " mode disagreements");
  else l.detail << (l.pass ? "" : "; ") << "transfer and brute-force modes agree on all minors";
  report(7, "killing constants", l);
}

void twisted() {
  Line l;
  std::ostringstream leib;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}}) {
    CheckResult c = verify_twisted_leibniz(n, r, 100, 2024);
    leib << " (" << n << "," << r << "):" << c.got["violations"].get<int>() << "/100";
    if (!c.pass) l.fail("twisted Leibniz");
  }
  int vanishing_cases = 0, witnesses = 0;
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r < n; ++r) {
      CheckResult c = verify_ladder_vanishing(n, r);
      vanishing_cases += c.got["cases"].get<int>();
      if (!c.pass) l.fail("vanishing at (" + std::to_string(n) + "," + std::to_string(r) + ")");
      for (int k = r + 1; k <= n; ++k) {
        // single generators P_k that are admissible sets of size r
        if (n - k + 1 != r) continue;
        ++witnesses;
        CheckResult w = verify_ladder_witness(n, r, "P" + std::to_string(k));
        if (!w.pass) l.fail("no witness for P" + std::to_string(k) + " at n=" + std::to_string(n));
      }
    }
  l.detail << "; Leibniz violations" << leib.str() << "; vanishing " << vanishing_cases << " cases; " << witnesses
           << " single-generator witness searches";
  report(8, "twisted derivations", l);
}

void ell() {
  Line l;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
    CheckResult c = verify_ell(n, r, 2);
    if (!c.pass) l.fail(c.params.dump() + " " + c.got.dump());
  }
  report(9, "principal l-map", l);
}

void connectedness() {
  Line l;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
    BundleSpan s = bundle_span(n, r, 0, 2);
    KernelResult k = joint_kernel(s, {Holo::Dbar, Holo::Del});
    if (k.dim != 1) l.fail("kernel dim " + std::to_string(k.dim) + " at n=" + std::to_string(n));
    else if (span_rank({k.basis[0], power(qdet(n), 2)}) != 1) l.fail("kernel is not the unit at n=" + std::to_string(n));
  }
  report(10, "connectedness", l);
}

void coordinate_ring() {
  Line l;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}}) {
    KernelResult h1 = h0(bundle_span(n, r, 1));
    std::vector<NCPoly> prods;
    for (const auto& a : h1.basis)
      for (const auto& b : h1.basis) prods.push_back(mul(a, b));
    long long want = oracle::count_ssyt(r, 2, n);
    int got = span_rank(prods);
    // products must lie in H^0(E_2): adding them to its basis may not raise the rank
    std::vector<NCPoly> both = h0(bundle_span(n, r, 2)).basis;
    both.insert(both.end(), prods.begin(), prods.end());
    if (got != want || span_rank(both) != want)
      l.fail("rank " + std::to_string(got) + " vs " + std::to_string(want) + " at n=" + std::to_string(n));
  }
  report(11, "coordinate ring", l);
}

void opposite() {
  Line l;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
    int pos = h0(bundle_span(n, r, 1), Holo::Del).dim;
    int neg = h0(bundle_span(n, r, -1), Holo::Del).dim;
    if (pos != 0 || neg != oracle::count_ssyt(r, 1, n))
      l.fail("dims " + std::to_string(pos) + "," + std::to_string(neg) + " at n=" + std::to_string(n));
  }
  report(12, "opposite structure", l);
}

void engine() {
  Line l;
  for (int n = 2; n <= 4; ++n)
    for (const CheckResult& c : {check_confluence(n, 1000, 6, 11), check_coassociativity(n, 40, 12), check_det_central(n),
                                 check_classical_limit(n, 200, 13)})
      if (!c.pass) l.fail(c.check + " at n=" + std::to_string(n));
  report(13, "engine properties", l);
}

}  // namespace

int main() {
  borel_weil_dims();
  vanishing();
  standard_monomials();
  calculus_dim();
  goodearl();
  laplace();
  killing_constants();
  twisted();
  ell();
  connectedness();
  coordinate_ring();
  opposite();
  engine();
  return failures == 0 ? 0 : 1;
}
