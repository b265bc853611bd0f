#include "qgrass/commands.hpp"

#include "qgrass/borelweil.hpp"
#include "qgrass/calculus.hpp"
#include "qgrass/comodules.hpp"
#include "qgrass/minors.hpp"
#include "qgrass/ncpoly.hpp"
#include "qgrass/parallel.hpp"
#include "qgrass/rform.hpp"
#include "qgrass/twisted.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace qgrass {

namespace {

Word random_word(int n, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, n * n - 1);
  Word w;
  for (int k = 0; k < len; ++k) w.push(pick(rng));
  return w;
}

CheckResult start(const std::string& name, nlohmann::json params) {
  CheckResult c;
  c.check = name;
  c.params = std::move(params);
  return c;
}

using Triple = std::map<std::tuple<Word, Word, Word>, RatFunc>;

void add_to(Triple& t, const Word& a, const Word& b, const Word& c, const RatFunc& x) {
  auto [it, fresh] = t.try_emplace({a, b, c}, x);
  if (fresh) return;
  it->second += x;
  if (it->second.is_zero()) t.erase(it);
}

}  // namespace

CheckResult check_confluence(int n, int words, int max_len, std::uint64_t seed) {
  Stopwatch sw;
  CheckResult c = start("pbw-confluence", {{"n", n}, {"words", words}, {"max_len", max_len}, {"seed", seed}});
  c.expected = {{"disagreements", 0}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(2, max_len);
  int bad = 0;
  nlohmann::json example;
  for (int t = 0; t < words; ++t) {
    Word w = random_word(n, rng, len(rng));
    NCPoly ref = normal_form(n, w);
    RewriteSite site = t % 3 == 0 ? RewriteSite::Leftmost : t % 3 == 1 ? RewriteSite::Rightmost : RewriteSite::Random;
    if (normal_form_by_rewriting(n, w, site, seed + t) == ref) continue;
    if (bad++ == 0) example = {{"word", NCPoly::from_normal_word(n, w).to_string()}, {"index", t}};
  }
  c.got = {{"disagreements", bad}};
  if (bad) c.got["first"] = example;
  c.pass = bad == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_coassociativity(int n, int samples, std::uint64_t seed) {
  Stopwatch sw;
  CheckResult c = start("coassociativity", {{"n", n}, {"samples", samples}, {"seed", seed}});
  c.expected = {{"coassociativity_failures", 0}, {"counit_failures", 0}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 3);
  int coassoc = 0, counit_bad = 0;
  for (int t = 0; t < samples; ++t) {
    NCPoly f = normal_form(n, random_word(n, rng, len(rng)));
    TensorPoly d = coproduct(f);
    Triple left, right;
    NCPoly lcounit(n), rcounit(n);
    for (const auto& [k, x] : d.terms()) {
      TensorPoly dl = coproduct(NCPoly::from_normal_word(n, k.first));
      TensorPoly dr = coproduct(NCPoly::from_normal_word(n, k.second));
      for (const auto& [k2, y] : dl.terms()) add_to(left, k2.first, k2.second, k.second, x * y);
      for (const auto& [k2, y] : dr.terms()) add_to(right, k.first, k2.first, k2.second, x * y);
      lcounit += NCPoly::from_normal_word(n, k.second, x * counit(NCPoly::from_normal_word(n, k.first)));
      rcounit += NCPoly::from_normal_word(n, k.first, x * counit(NCPoly::from_normal_word(n, k.second)));
    }
    if (left != right) ++coassoc;
    if (!(lcounit == f) || !(rcounit == f)) ++counit_bad;
  }
  c.got = {{"coassociativity_failures", coassoc}, {"counit_failures", counit_bad}};
  c.pass = coassoc == 0 && counit_bad == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_det_central(int n) {
  Stopwatch sw;
  CheckResult c = start("det-central-grouplike", {{"n", n}});
  NCPoly det = qdet(n);
  int bad = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly u = NCPoly::gen(n, i, j);
      if (!(mul(det, u) == mul(u, det))) ++bad;
    }
  TensorPoly dd(n);
  dd.add_product(det, det);
  bool grouplike = coproduct(det) == dd;
  c.expected = {{"noncommuting_generators", 0}, {"grouplike", true}};
  c.got = {{"noncommuting_generators", bad}, {"grouplike", grouplike}, {"det", det.to_string()}};
  c.pass = bad == 0 && grouplike;
  c.millis = sw.millis();
  return c;
}

CheckResult check_classical_limit(int n, int words, std::uint64_t seed) {
  Stopwatch sw;
  CheckResult c = start("classical-limit", {{"n", n}, {"words", words}, {"seed", seed}});
  c.expected = {{"word_failures", 0}, {"det_is_classical", true}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 5);
  int bad = 0;
  for (int t = 0; t < words; ++t) {
    Word w = random_word(n, rng, len(rng));
    std::string sorted = w.str();
    std::sort(sorted.begin(), sorted.end());
    std::map<Word, mpq_class> at1;
    NCPoly nf = normal_form(n, w);
    for (const auto& [v, x] : nf.terms()) {
      auto y = x.eval(1);
      if (!y) {
        ++bad;
        continue;
      }
      if (*y != 0) at1[v] = *y;
    }
    if (at1.size() != 1 || at1.begin()->first != Word(sorted) || at1.begin()->second != 1) ++bad;
  }
  // the determinant at q = 1 is the signed permutation sum
  bool det_ok = true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t count = 0;
  NCPoly det = qdet(n);
  do {
    std::vector<Gen> gens;
    for (int i = 0; i < n; ++i) gens.push_back({i + 1, perm[i]});
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += perm[a] > perm[b];
    auto y = det.coeff(Word::of(n, gens)).eval(1);
    det_ok = det_ok && y && *y == (inv % 2 ? -1 : 1);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  det_ok = det_ok && det.size() == count;
  c.got = {{"word_failures", bad}, {"det_is_classical", det_ok}};
  c.pass = bad == 0 && det_ok;
  c.millis = sw.millis();
  return c;
}

CheckResult check_antipode(int n) {
  Stopwatch sw;
  CheckResult c = start("antipode-axiom", {{"n", n}});
  c.expected = {{"failures", 0}};
  int bad = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly left(n), right(n);
      for (int k = 1; k <= n; ++k) {
        left += mul(antipode_mod_det(NCPoly::gen(n, i, k)), NCPoly::gen(n, k, j));
        right += mul(NCPoly::gen(n, i, k), antipode_mod_det(NCPoly::gen(n, k, j)));
      }
      NCPoly delta = NCPoly::scalar(n, i == j ? 1 : 0);
      if (!eq_mod_det1(left, delta) || !eq_mod_det1(right, delta)) ++bad;
    }
  c.got = {{"failures", bad}};
  c.pass = bad == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_r_axioms(int n) {
  Stopwatch sw;
  CheckResult c = start("r-form-axioms", {{"n", n}});
  c.expected = {{"failures", 0}};
  const RTable& t = unscaled_table(n);
  auto g = [&](int l) { return NCPoly::gen(n, l / n + 1, l % n + 1); };
  int bad = 0, cases = 0;
  NCPoly one = NCPoly::scalar(n, 1);
  for (int f = 0; f < n * n; ++f) {
    if (!(r_eval(t, g(f), one) == counit(g(f))) || !(r_eval(t, one, g(f)) == counit(g(f)))) ++bad;
    for (int a = 0; a < n * n; ++a)
      for (int b = 0; b < n * n; ++b) {
        ++cases;
        int fi = f / n + 1, fj = f % n + 1, bi = b / n + 1, bj = b % n + 1;
        // r(f (x) ab) = r(f_(1) (x) b) r(f_(2) (x) a)
        RatFunc lhs = r_eval(t, g(f), mul(g(a), g(b))), rhs = 0;
        for (int m = 1; m <= n; ++m) rhs += t(fi, m, bi, bj) * t(m, fj, a / n + 1, a % n + 1);
        // r(fa (x) b) = r(f (x) b_(1)) r(a (x) b_(2))
        RatFunc lhs2 = r_eval(t, mul(g(f), g(a)), g(b)), rhs2 = 0;
        for (int m = 1; m <= n; ++m) rhs2 += t(fi, fj, bi, m) * t(a / n + 1, a % n + 1, m, bj);
        if (!(lhs == rhs) || !(lhs2 == rhs2)) ++bad;
      }
  }
  c.got = {{"failures", bad}, {"triples", cases}};
  c.pass = bad == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_goodearl(int n) {
  Stopwatch sw;
  CheckResult c = start("goodearl-support", {{"n", n}});
  c.expected = {{"violations", 0}};
  const RTable& t = unscaled_table(n);
  int viol_r = 0, viol_minor = 0, viol_gr = 0, viol_gen = 0, cases = 0;
  for (int s = 1; s <= n; ++s)
    for (const auto& I : subsets(n, s))
      for (const auto& J : subsets(n, s)) {
        NCPoly m = minor(n, I, J);
        KillingMatrix Q = killing_Q(t, m);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            ++cases;
            if (!goodearl_support_r(i, j, I, J) && !r_eval(t, NCPoly::gen(n, i, j), m).is_zero()) ++viol_r;
            if (!goodearl_support_minor_q(i, j, I, J) && !Q.at(i - 1, j - 1).is_zero()) ++viol_minor;
          }
      }
  for (int r = 1; r < n; ++r)
    for (const auto& I : subsets(n, r))
      for (const auto& J : subsets(n, n - r)) {
        KillingMatrix Q = killing_Q(t, z_gr(n, r, I, J));
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (i > r && j > r) continue;
            ++cases;
            if (!goodearl_support_q(n, r, i, j, I, J) && !Q.at(i - 1, j - 1).is_zero()) ++viol_gr;
          }
      }
  // Q_ij(u^k_l) != 0 exactly when (k, l) = (j, i), or i = j and k = l
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      KillingMatrix Q = killing_Q(t, NCPoly::gen(n, k, l));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          ++cases;
          if (Q.at(i - 1, j - 1).is_zero() == ((k == j && l == i) || (i == j && k == l))) ++viol_gen;
        }
    }
  int total = viol_r + viol_minor + viol_gr + viol_gen;
  c.got = {{"violations", total},
           {"by_kind", {{"r_on_minor", viol_r}, {"Q_on_minor", viol_minor}, {"Q_on_grassmann", viol_gr}, {"Q_on_generator", viol_gen}}},
           {"cases", cases}};
  c.pass = total == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_laplace(int n) {
  Stopwatch sw;
  CheckResult c = start("laplace", {{"n", n}});
  c.expected = {{"failures", 0}};
  int bad = 0, cases = 0;
  for (int s = 1; s <= n; ++s)
    for (const auto& I : subsets(n, s))
      for (const auto& J : subsets(n, s))
        for (int s1 = 1; s1 <= s; ++s1)
          for (const auto& J1 : subsets_of(J, s1)) {
            ++cases;
            if (!laplace_check(n, I, J, J1)) ++bad;
          }
  c.got = {{"failures", bad}, {"cases", cases}};
  if (n == 2) {
    NCPoly expect = mul(NCPoly::gen(2, 1, 1), NCPoly::gen(2, 2, 2)) -
                    mul(NCPoly::gen(2, 2, 1), NCPoly::gen(2, 1, 2)) * RatFunc::q();
    bool det_ok = qdet(2) == expect;
    c.got["det_2x2"] = qdet(2).to_string();
    c.got["det_2x2_matches"] = det_ok;
    bad += det_ok ? 0 : 1;
  }
  c.pass = bad == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_star(int n) {
  Stopwatch sw;
  CheckResult c = start("antipode-on-minors", {{"n", n}});
  c.expected = {{"failures", 0}};
  int bad = 0, cases = 0;
  for (int s = 1; s < n; ++s)
    for (const auto& I : subsets(n, s))
      for (const auto& J : subsets(n, s)) {
        ++cases;
        if (!star_minor_check(n, I, J)) ++bad;
      }
  c.got = {{"failures", bad}, {"cases", cases}};
  c.pass = bad == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_killing_constants(int n, int r) {
  Stopwatch sw;
  CheckResult c = start("killing-constants", {{"n", n}, {"r", r}});
  RatFunc q2 = RatFunc::q_pow(2), qm2 = RatFunc::q_pow(-2);
  c.expected = {{"Q_ii_z_on_R", q2.to_string()}, {"Q_ii_zbar_all", qm2.to_string()}};
  IndexSet R = block_R(r), Rc = block_Rc(n, r);
  KillingMatrix Qz = killing_Q(z_plus(n, r, R)), Qzb = killing_Q(z_bar(n, r, Rc));
  bool zok = true, zbok = true;
  nlohmann::json zvals = nlohmann::json::array(), zbvals = nlohmann::json::array();
  for (int i = 1; i <= n; ++i) {
    const RatFunc& a = Qz.at(i - 1, i - 1);
    const RatFunc& b = Qzb.at(i - 1, i - 1);
    zvals.push_back(a.to_string());
    zbvals.push_back(b.to_string());
    if (i <= r) zok = zok && a == q2;
    zbok = zbok && b == qm2;
  }
  // Q(z^{R R^c}) against Q(1) = identity, away from R^c x R^c; degree n carries q^2 unscaled
  KillingMatrix Qg = killing_Q(z_gr(n, r, R, Rc));
  bool gr_ok = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i <= r || j <= r) gr_ok = gr_ok && Qg.at(i - 1, j - 1) == (i == j ? q2 : RatFunc(0));
  c.got = {{"Q_ii_z", zvals}, {"Q_ii_zbar", zbvals}, {"Q_ii_z_on_R_ok", zok}, {"Q_ii_zbar_all_ok", zbok},
           {"Q_zRRc_is_q2_identity", gr_ok}};
  c.pass = zok && zbok && gr_ok;
  c.millis = sw.millis();
  return c;
}

CheckResult check_q_modes(int n) {
  Stopwatch sw;
  CheckResult c = start("killing-modes-agree", {{"n", n}});
  c.expected = {{"disagreements", 0}};
  const RTable& t = unscaled_table(n);
  int bad = 0, cases = 0;
  for (int s = 1; s <= n; ++s)
    for (const auto& I : subsets(n, s))
      for (const auto& J : subsets(n, s)) {
        NCPoly m = minor(n, I, J);
        ++cases;
        if (!(killing_Q(t, m, QMode::BruteForce) == killing_Q(t, m, QMode::Transfer))) ++bad;
      }
  if (n <= 3) {
    // every normal monomial of degree <= 3
    std::vector<Word> words{Word()};
    for (int d = 1; d <= 3; ++d) {
      std::vector<Word> next;
      for (const auto& w : words)
        for (int l = w.empty() ? 0 : w.letter(w.size() - 1); l < n * n; ++l) {
          Word v = w;
          v.push(l);
          next.push_back(v);
        }
      for (const auto& w : next) {
        NCPoly m = NCPoly::from_normal_word(n, w);
        ++cases;
        if (!(killing_Q(t, m, QMode::BruteForce) == killing_Q(t, m, QMode::Transfer))) ++bad;
      }
      words = std::move(next);
    }
  }
  c.got = {{"disagreements", bad}, {"cases", cases}};
  c.pass = bad == 0;
  c.millis = sw.millis();
  return c;
}

CheckResult check_calculus_dim(int n, int r) {
  Stopwatch sw;
  CheckResult c = start("calculus-dim", {{"n", n}, {"r", r}});
  c.expected = 2 * r * (n - r);
  c.got = hk_first_order_dim(n, r);
  c.pass = c.got == c.expected;
  c.millis = sw.millis();
  return c;
}

IntRange IntRange::parse(const std::string& s) {
  auto dots = s.find("..");
  try {
    std::size_t used = 0;
    IntRange r;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &used);
      if (used != s.size()) throw UsageError("bad integer '" + s + "'");
    } else {
      std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw UsageError("bad range '" + s + "'");
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw UsageError("bad range '" + s + "'");
    }
    if (r.empty()) throw UsageError("empty range '" + s + "'");
    return r;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError("bad range '" + s + "'");
  }
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"relations", "goodearl",    "laplace",      "calculus-dim",
                                              "borel-weil", "opposite",   "coordinate-ring", "twisted",
                                              "ell-map",    "connectedness", "all"};
  return names;
}

nlohmann::json config_json(const CheckConfig& c) {
  nlohmann::json j;
  j["n"] = c.n ? nlohmann::json(std::to_string(c.n->lo) + ".." + std::to_string(c.n->hi)) : nlohmann::json(nullptr);
  j["r"] = c.r ? nlohmann::json(std::to_string(c.r->lo) + ".." + std::to_string(c.r->hi)) : nlohmann::json(nullptr);
  j["k_max"] = c.k_max ? nlohmann::json(*c.k_max) : nlohmann::json(nullptr);
  j["max_deg"] = c.max_deg ? nlohmann::json(*c.max_deg) : nlohmann::json(nullptr);
  j["mode"] = c.mode == RunMode::Exact ? "exact" : "prescreen";
  j["seed"] = c.seed;
  return j;
}

namespace {

using Job = std::function<CheckResult()>;
using NR = std::pair<int, int>;

// explicit (n, r) grid from the flags, or the default when no --n was given
std::vector<NR> pairs_from(const CheckConfig& c, const std::vector<NR>& fallback, int n_floor = 2) {
  if (!c.n) {
    if (!c.r) return fallback;
    std::vector<NR> out;
    for (auto [n, r] : fallback)
      if (r >= c.r->lo && r <= c.r->hi) out.push_back({n, r});
    if (out.empty()) throw UsageError("no default (n, r) pair matches --r");
    return out;
  }
  if (c.n->lo < n_floor) throw UsageError("--n must be at least " + std::to_string(n_floor));
  if (c.r && (c.r->lo < 1 || c.r->hi >= c.n->lo)) throw UsageError("--r must satisfy 1 <= r < n");
  std::vector<NR> out;
  for (int n = c.n->lo; n <= c.n->hi; ++n) {
    int lo = c.r ? c.r->lo : 1, hi = c.r ? c.r->hi : n - 1;
    for (int r = lo; r <= hi; ++r) out.push_back({n, r});
  }
  return out;
}

std::vector<int> ns_from(const CheckConfig& c, std::vector<int> fallback) {
  if (!c.n) return fallback;
  if (c.n->lo < 2) throw UsageError("--n must be at least 2");
  std::vector<int> out;
  for (int n = c.n->lo; n <= c.n->hi; ++n) out.push_back(n);
  return out;
}

int positive(const std::optional<int>& v, int fallback, const char* flag) {
  int x = v.value_or(fallback);
  if (x < 1) throw UsageError(std::string(flag) + " must be at least 1");
  return x;
}

KernelOptions kernel_opts(const CheckConfig& c) {
  KernelOptions o;
  o.prescreen = c.mode == RunMode::Prescreen;
  o.seed = c.seed;
  return o;
}

void add_jobs(const std::string& cmd, const CheckConfig& c, std::vector<Job>& jobs) {
  KernelOptions ko = kernel_opts(c);
  if (cmd == "relations") {
    for (int n : ns_from(c, {2, 3})) {
      jobs.push_back([=] { return check_confluence(n, 1000, n == 2 ? 6 : 5, c.seed); });
      jobs.push_back([=] { return check_coassociativity(n, 30, c.seed); });
      jobs.push_back([=] { return check_det_central(n); });
      jobs.push_back([=] { return check_classical_limit(n, 200, c.seed); });
      jobs.push_back([=] { return check_antipode(n); });
      jobs.push_back([=] { return check_r_axioms(n); });
    }
  } else if (cmd == "goodearl") {
    for (int n : ns_from(c, {2, 3})) jobs.push_back([=] { return check_goodearl(n); });
  } else if (cmd == "laplace") {
    for (int n : ns_from(c, {2, 3})) {
      jobs.push_back([=] { return check_laplace(n); });
      jobs.push_back([=] { return check_star(n); });
    }
  } else if (cmd == "calculus-dim") {
    for (auto [n, r] : pairs_from(c, {{2, 1}, {3, 1}, {4, 1}, {4, 2}})) {
      jobs.push_back([=] { return check_calculus_dim(n, r); });
      if (n <= 4 && r <= 2) jobs.push_back([=] { return check_killing_constants(n, r); });
    }
    for (int n : std::vector<int>{2, 3, 4}) jobs.push_back([=] { return check_q_modes(n); });
  } else if (cmd == "borel-weil") {
    static const std::map<NR, int> kmax{{{2, 1}, 4}, {{3, 1}, 3}, {{3, 2}, 2}, {{4, 2}, 2}};
    for (auto [n, r] : pairs_from(c, {{2, 1}, {3, 1}, {3, 2}, {4, 2}})) {
      int km = c.k_max ? *c.k_max : (kmax.count({n, r}) ? kmax.at({n, r}) : 2);
      if (km < 0) throw UsageError("--k-max must be non-negative");
      for (int k = 0; k <= km; ++k) jobs.push_back([=] { return verify_borel_weil(n, r, k, ko); });
    }
  } else if (cmd == "opposite") {
    int km = positive(c.k_max, 1, "--k-max");
    for (auto [n, r] : pairs_from(c, {{2, 1}, {3, 1}}))
      for (int k = 1; k <= km; ++k) jobs.push_back([=] { return verify_opposite(n, r, k, ko); });
  } else if (cmd == "coordinate-ring") {
    int km = positive(c.k_max, 2, "--k-max");
    for (auto [n, r] : pairs_from(c, {{2, 1}, {3, 1}, {4, 2}}))
      jobs.push_back([=] { return verify_coordinate_ring(n, r, km, ko); });
  } else if (cmd == "connectedness") {
    int md = positive(c.max_deg, 2, "--max-deg");
    for (auto [n, r] : pairs_from(c, {{2, 1}, {3, 1}, {3, 2}}))
      jobs.push_back([=] { return verify_connectedness(n, r, md, ko); });
  } else if (cmd == "ell-map") {
    int km = positive(c.k_max, 2, "--k-max");
    for (auto [n, r] : pairs_from(c, {{2, 1}, {3, 1}, {3, 2}})) jobs.push_back([=] { return verify_ell(n, r, km); });
  } else if (cmd == "twisted") {
    auto grid = pairs_from(c, {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}});
    for (auto [n, r] : grid) {
      jobs.push_back([=] { return verify_ladder_vanishing(n, r); });
      jobs.push_back([=] { return verify_ladder_power(n, r, 3); });
      jobs.push_back([=] { return verify_sigma_multiplicative(n, r, 50, c.seed); });
      int k = n - r + 1;
      if (k > r) {
        std::string p = "P" + std::to_string(k);
        jobs.push_back([=] { return verify_ladder_witness(n, r, p); });
        jobs.push_back([=] { return verify_ladder_witness(n, r, p + "^2"); });
      }
    }
    for (auto [n, r] : grid)
      if ((n == 3 && r == 1) || (n == 4 && r == 2) || c.n)
        jobs.push_back([=] { return verify_twisted_leibniz(n, r, 100, c.seed); });
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
}

}  // namespace

RunOutcome run(const std::string& command, const CheckConfig& config) {
  if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
  std::vector<Job> jobs;
  if (command == "all") {
    for (const auto& name : command_names())
      if (name != "all") add_jobs(name, config, jobs);
  } else {
    add_jobs(command, config, jobs);
  }
  RunOutcome out;
  out.checks.resize(jobs.size());
  parallel_for(jobs.size(), config.jobs, [&](std::size_t i) { out.checks[i] = jobs[i](); });
  bool all = true;
  for (const auto& c : out.checks) all = all && c.pass;
  out.exit_code = all ? 0 : 1;
  out.report = make_report(command, config_json(config), out.checks);
  return out;
}

}  // namespace qgrass
