#include "qgrass/twisted.hpp"

#include "qgrass/calculus.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qgrass {

ZElement ZElement::one() {
  ZElement z;
  z.t_.push_back({RatFunc(1), {}});
  return z;
}

ZElement ZElement::gen(const IndexSet& I, const RatFunc& c) {
  ZElement z;
  z.add({c, {I}});
  return z;
}

void ZElement::add(const ZTerm& t) {
  if (t.c.is_zero()) return;
  for (auto it = t_.begin(); it != t_.end(); ++it) {
    if (it->factors != t.factors) continue;
    it->c += t.c;
    if (it->c.is_zero()) t_.erase(it);
    return;
  }
  t_.push_back(t);
}

ZElement ZElement::operator+(const ZElement& o) const {
  ZElement z = *this;
  for (const auto& t : o.t_) z.add(t);
  return z;
}

ZElement ZElement::operator*(const ZElement& o) const {
  ZElement z;
  for (const auto& a : t_)
    for (const auto& b : o.t_) {
      ZTerm t{a.c * b.c, a.factors};
      t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
      z.add(t);
    }
  return z;
}

ZElement ZElement::scaled(const RatFunc& c) const {
  ZElement z;
  for (const auto& t : t_) z.add({t.c * c, t.factors});
  return z;
}

ZElement ZElement::power(int a) const {
  ZElement z = one();
  for (int i = 0; i < a; ++i) z = z * *this;
  return z;
}

NCPoly ZElement::eval(int n, int r) const {
  NCPoly out(n);
  for (const auto& t : t_) {
    NCPoly p = NCPoly::scalar(n, t.c);
    for (const auto& I : t.factors) p = mul(p, z_lower(n, r, I));
    out += p;
  }
  return out;
}

RatFunc ZElement::counit(int r) const {
  RatFunc s = 0;
  IndexSet R = block_R(r);
  for (const auto& t : t_) {
    bool all = true;
    for (const auto& I : t.factors) all = all && I == R;
    if (all) s += t.c;
  }
  return s;
}

std::string ZElement::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& t : t_) {
    if (!s.empty()) s += " + ";
    s += t.c.to_string();
    for (const auto& I : t.factors) s += " z" + I.to_string();
  }
  return s;
}

TwistedLadder::TwistedLadder(int n, int r, int j, TwistSide side) : n_(n), r_(r), j_(j), side_(side) {
  if (r < 1 || r >= n || j <= r || j > n) throw std::invalid_argument("TwistedLadder: need 1 <= r < j <= n");
  for (const auto& I : subsets_of(IndexSet::range(jprime(), n), r)) {
    adm_.push_back(I);
    letters_.push_back(z_lower(n, r, I));
    if (is_t_generator(I)) tgens_.push_back(letters_.back());
  }
}

bool TwistedLadder::is_admissible(const IndexSet& I) const {
  return I.size() == r_ && (I.empty() || I.elems().front() >= jprime());
}

bool TwistedLadder::is_t_generator(const IndexSet& I) const {
  for (int x : I.elems())
    if (x >= r_ + 1 && x <= j_ - 1) return true;
  return false;
}

NCPoly TwistedLadder::gen(const IndexSet& I) const {
  if (!is_admissible(I)) throw std::invalid_argument("twisted ladder: inadmissible index set " + I.to_string());
  return z_lower(n_, r_, I);
}

RatFunc TwistedLadder::sigma_factor(const IndexSet& I) const {
  if (!is_admissible(I)) throw std::invalid_argument("twisted ladder: inadmissible index set " + I.to_string());
  return RatFunc::q_pow(int(I.contains(j_)) + int(I.contains(jprime())));
}

ZElement TwistedLadder::sigma(const ZElement& x) const {
  ZElement z;
  for (const auto& t : x.terms()) {
    RatFunc c = t.c;
    for (const auto& I : t.factors) c *= sigma_factor(I);
    z.add({c, t.factors});
  }
  return z;
}

NCPoly TwistedLadder::sigma(const NCPoly& x) const {
  int jp = jprime();
  return x.map_coeffs([&](const Word& w, const RatFunc& c) {
    int e = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
      Gen g = w.gen(n_, t);
      e += int(g.col == j_) + int(g.col == jp);
    }
    return c * RatFunc::q_pow(e);
  });
}

NCPoly TwistedLadder::d_direct(const NCPoly& x) const {
  int jp = jprime();
  if (jp > r_) return NCPoly(n_);  // (j', j) is not an antiholomorphic slot
  return dbar(x, r_).component(jp, j_);
}

ZElement TwistedLadder::d_gen(const IndexSet& I) const {
  auto it = dcache_.find(I);
  if (it != dcache_.end()) return it->second;
  NCPoly v = d_direct(gen(I));
  ZElement out;
  if (!v.is_zero()) {
    auto K = index_surgery(I, j_, jprime());
    if (!K) throw std::logic_error("twisted ladder: nonzero derivative on " + I.to_string() + " without a target minor");
    NCPoly target = z_lower(n_, r_, *K);
    const auto& [w, c] = *target.terms().begin();
    RatFunc ratio = v.coeff(w) / c;
    if (!(v == target * ratio))
      throw std::logic_error("twisted ladder: derivative of " + I.to_string() + " is not a multiple of one minor");
    out = ZElement::gen(*K, ratio);
  }
  dcache_.emplace(I, out);
  return out;
}

ZElement TwistedLadder::twisted_d(const ZElement& x) const {
  ZElement out;
  for (const auto& t : x.terms()) {
    std::size_t m = t.factors.size();
    // twist[s]: sigma factors picked up by the undifferentiated side of factor s
    std::vector<RatFunc> twist(m, RatFunc(1));
    if (side_ == TwistSide::Left)
      for (std::size_t s = 1; s < m; ++s) twist[s] = twist[s - 1] * sigma_factor(t.factors[s - 1]);
    else
      for (std::size_t s = m - 1; s-- > 0;) twist[s] = twist[s + 1] * sigma_factor(t.factors[s + 1]);
    for (std::size_t s = 0; s < m; ++s) {
      ZElement d = d_gen(t.factors[s]);
      for (const auto& dt : d.terms()) {
        ZTerm term{t.c * twist[s] * dt.c, {}};
        term.factors.assign(t.factors.begin(), t.factors.begin() + s);
        term.factors.insert(term.factors.end(), dt.factors.begin(), dt.factors.end());
        term.factors.insert(term.factors.end(), t.factors.begin() + s + 1, t.factors.end());
        out.add(term);
      }
    }
  }
  return out;
}

NCPoly TwistedLadder::leibniz_rhs(const NCPoly& x, const NCPoly& y) const {
  if (side_ == TwistSide::Left) return mul(d_direct(x), y) + mul(sigma(x), d_direct(y));
  return mul(d_direct(x), sigma(y)) + mul(x, d_direct(y));
}

bool TwistedLadder::in_T(const NCPoly& f) const {
  if (f.is_zero()) return true;
  if (tgens_.empty()) return false;
  for (const auto& [deg, part] : f.homogeneous_parts())
    if (!ideal_membership_graded(part, tgens_, deg, letters_)) return false;
  return true;
}

bool TwistedLadder::equal_mod_T(const NCPoly& a, const NCPoly& b) const { return in_T(a - b); }

std::optional<RatFunc> TwistedLadder::ratio_mod_T(const NCPoly& f, const NCPoly& target) const {
  if (f.is_zero()) return RatFunc(0);
  if (!f.is_homogeneous() || !target.is_homogeneous() || f.degree() != target.degree()) return std::nullopt;
  auto s = solve_modulo_ideal(f, tgens_, letters_, {target});
  if (!s) return std::nullopt;
  return (*s)[0];
}

IndexSet ladder_P(int n, int k, int l) {
  std::vector<int> e;
  int pos = 0;
  for (int p = k; p <= n; ++p, ++pos) e.push_back(pos < l ? n - p + 1 : p);
  std::sort(e.begin(), e.end());
  return IndexSet(e);
}

std::vector<IndexSet> parse_p_description(int n, const std::string& desc) {
  std::vector<IndexSet> out;
  std::stringstream ss(desc);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.size() < 2 || tok[0] != 'P') throw std::invalid_argument("p description: expected factors like P3, got '" + tok + "'");
    int power = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      power = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    int k = std::stoi(tok.substr(1));
    if (k < 1 || k > n) throw std::invalid_argument("p description: P index out of range");
    for (int i = 0; i < power; ++i) out.push_back(ladder_P(n, k, 0));
  }
  if (out.empty()) throw std::invalid_argument("p description: p must be a nontrivial product");
  return out;
}

namespace {

void ladder_search(int n, int r, int j, TwistSide side, const ZElement& v, int budget, std::vector<int>& exps,
                   std::vector<LadderWitness>& found) {
  if (j > n) {
    bool any = false;
    for (int a : exps) any = any || a > 0;
    RatFunc e = v.counit(r);
    if (any && !e.is_zero()) found.push_back({exps, e});
    return;
  }
  TwistedLadder lad(n, r, j, side);
  ZElement cur = v;
  for (int a = 0; a <= budget; ++a) {
    if (a > 0) cur = lad.twisted_d(cur);
    if (cur.is_zero() || lad.in_T(cur.eval(n, r))) return;
    exps.push_back(a);
    ladder_search(n, r, j + 1, side, cur, budget - a, exps, found);
    exps.pop_back();
  }
}

std::vector<LadderWitness> all_witnesses(int n, int r, const ZElement& p, int max_total, TwistSide side) {
  std::vector<LadderWitness> found;
  std::vector<int> exps;
  ladder_search(n, r, r + 1, side, p, max_total, exps, found);
  return found;
}

std::string exps_string(const std::vector<int>& e) {
  std::string s;
  for (int a : e) s += (s.empty() ? "" : ",") + std::to_string(a);
  return "(" + s + ")";
}

}  // namespace

std::optional<LadderWitness> find_ladder_witness(int n, int r, const ZElement& p, int max_total, TwistSide side) {
  auto all = all_witnesses(n, r, p, max_total, side);
  if (all.empty()) return std::nullopt;
  auto total = [](const LadderWitness& w) {
    int s = 0;
    for (int a : w.exponents) s += a;
    return s;
  };
  const LadderWitness* best = &all.front();
  for (const auto& w : all)
    if (total(w) < total(*best)) best = &w;
  return *best;
}

namespace {

std::string side_name(TwistSide s) { return s == TwistSide::Left ? "left" : "right"; }

}  // namespace

CheckResult verify_ladder_witness(int n, int r, const std::string& p_description, int max_total, TwistSide side) {
  Stopwatch sw;
  CheckResult res;
  res.check = "ladder-witness";
  res.params = {{"n", n}, {"r", r}, {"p", p_description}, {"max_total", max_total}, {"twist", side_name(side)}};
  res.expected = "nonzero counit after some exponent sequence";
  auto factors = parse_p_description(n, p_description);
  TwistedLadder first(n, r, r + 1);
  ZElement p = ZElement::one();
  for (const auto& I : factors) {
    if (!first.is_admissible(I)) throw std::invalid_argument("p description: " + I.to_string() + " is not a generator of Z_{r+1}");
    p = p * ZElement::gen(I);
  }
  if (first.in_T(p.eval(n, r))) {
    res.got = {{"note", "p is zero in S_{r+1}"}};
    res.millis = sw.millis();
    return res;
  }
  auto all = all_witnesses(n, r, p, max_total, side);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& w : all) list.push_back({{"exponents", exps_string(w.exponents)}, {"value", w.value.to_string()}});
  res.got = {{"witnesses", list}, {"count", all.size()}};
  res.pass = !all.empty();
  res.millis = sw.millis();
  return res;
}

namespace {

ZElement random_product(const TwistedLadder& lad, std::mt19937_64& rng, int factors) {
  std::uniform_int_distribution<std::size_t> pick(0, lad.admissible().size() - 1);
  ZElement z = ZElement::one();
  for (int i = 0; i < factors; ++i) z = z * ZElement::gen(lad.admissible()[pick(rng)]);
  return z;
}

std::string factors_string(const ZElement& z) {
  std::string s;
  for (const auto& I : z.terms().front().factors) s += "z" + I.to_string();
  return s;
}

}  // namespace

CheckResult verify_twisted_leibniz(int n, int r, int pairs, std::uint64_t seed, TwistSide side) {
  Stopwatch sw;
  CheckResult res;
  res.check = "twisted-leibniz";
  TwistSide other = side == TwistSide::Left ? TwistSide::Right : TwistSide::Left;
  res.params = {{"n", n}, {"r", r}, {"pairs", pairs}, {"seed", seed}, {"twist", side_name(side)}};
  res.expected = {{"violations", 0}};
  std::mt19937_64 rng(seed);
  std::vector<TwistedLadder> rungs, mirror;
  for (int j = r + 1; j <= n; ++j) {
    rungs.emplace_back(n, r, j, side);
    mirror.emplace_back(n, r, j, other);
  }
  std::uniform_int_distribution<std::size_t> pick_rung(0, rungs.size() - 1);
  std::uniform_int_distribution<int> pick_len(1, 2);
  int violations = 0, other_violations = 0, trivial = 0;
  nlohmann::json examples = nlohmann::json::array();
  for (int t = 0; t < pairs; ++t) {
    std::size_t k = pick_rung(rng);
    const TwistedLadder& lad = rungs[k];
    ZElement xz = random_product(lad, rng, pick_len(rng));
    ZElement yz = random_product(lad, rng, 1);
    NCPoly x = xz.eval(n, r), y = yz.eval(n, r);
    NCPoly lhs = lad.d_direct(mul(x, y));
    NCPoly rhs = lad.leibniz_rhs(x, y);
    if (lhs.is_zero() && rhs.is_zero()) ++trivial;
    if (!lad.equal_mod_T(lhs, mirror[k].leibniz_rhs(x, y))) ++other_violations;
    if (lad.equal_mod_T(lhs, rhs)) continue;
    ++violations;
    if (examples.size() < 5)
      examples.push_back({{"j", lad.j()}, {"x", factors_string(xz)}, {"y", factors_string(yz)},
                          {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
  }
  res.got = {{"violations", violations},
             {"both_sides_zero", trivial},
             {"examples", examples},
             {side_name(other) + "_twist_violations", other_violations}};
  res.pass = violations == 0;
  res.millis = sw.millis();
  return res;
}

CheckResult verify_sigma_multiplicative(int n, int r, int pairs, std::uint64_t seed) {
  Stopwatch sw;
  CheckResult res;
  res.check = "twisted-sigma-automorphism";
  res.params = {{"n", n}, {"r", r}, {"pairs", pairs}, {"seed", seed}};
  res.expected = {{"violations", 0}};
  std::mt19937_64 rng(seed);
  int violations = 0;
  for (int t = 0; t < pairs; ++t) {
    TwistedLadder lad(n, r, r + 1 + int(rng() % (n - r)));
    ZElement xz = random_product(lad, rng, 1 + int(rng() % 2)), yz = random_product(lad, rng, 1);
    NCPoly x = xz.eval(n, r), y = yz.eval(n, r);
    bool ok = lad.sigma(mul(x, y)) == mul(lad.sigma(x), lad.sigma(y));
    ok = ok && lad.sigma(x) == lad.sigma(xz).eval(n, r);
    if (!ok) ++violations;
  }
  res.got = {{"violations", violations}};
  res.pass = violations == 0;
  res.millis = sw.millis();
  return res;
}

CheckResult verify_ladder_vanishing(int n, int r, TwistSide side) {
  Stopwatch sw;
  CheckResult res;
  res.check = "ladder-vanishing";
  res.params = {{"n", n}, {"r", r}, {"twist", side_name(side)}};
  res.expected = {{"first_violations", 0}, {"square_violations", 0}};
  int first = 0, square = 0, cases = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (int j = r + 1; j <= n; ++j) {
    TwistedLadder lad(n, r, j, side);
    for (const auto& J : lad.admissible()) {
      ++cases;
      ZElement z = ZElement::gen(J);
      NCPoly g = lad.gen(J);
      if (!J.contains(j)) {
        bool ok = lad.twisted_d(z).is_zero() && lad.in_T(lad.d_direct(g));
        if (!ok) {
          ++first;
          bad.push_back({{"j", j}, {"J", J.to_string()}, {"part", "first"}});
        }
      }
      bool ok2 = lad.in_T(lad.twisted_d(lad.twisted_d(z)).eval(n, r)) && lad.in_T(lad.d_direct(lad.d_direct(g)));
      if (!ok2) {
        ++square;
        bad.push_back({{"j", j}, {"J", J.to_string()}, {"part", "square"}});
      }
    }
  }
  res.got = {{"first_violations", first}, {"square_violations", square}, {"cases", cases}, {"failures", bad}};
  res.pass = first == 0 && square == 0;
  res.millis = sw.millis();
  return res;
}

CheckResult verify_ladder_power(int n, int r, int a_max, TwistSide side) {
  Stopwatch sw;
  CheckResult res;
  res.check = "ladder-power";
  res.params = {{"n", n}, {"r", r}, {"a_max", a_max}, {"twist", side_name(side)}};
  res.expected = "C_a nonzero and C_a / C_1^a = a! at q = 1";
  int k = n - r + 1;
  nlohmann::json rows = nlohmann::json::array();
  bool pass = true;
  if (k <= r) {
    res.got = {{"note", "no P_k generator of size r with k in R^c"}};
    res.pass = true;
    res.millis = sw.millis();
    return res;
  }
  for (int l = 0; k + l <= n && l < r; ++l) {
    TwistedLadder lad(n, r, k + l, side);
    IndexSet x = ladder_P(n, k, l), y = ladder_P(n, k, l + 1);
    RatFunc c1;
    mpq_class fact = 1;
    for (int a = 1; a <= a_max; ++a) {
      fact *= a;
      ZElement v = ZElement::gen(x).power(a);
      for (int s = 0; s < a; ++s) v = lad.twisted_d(v);
      NCPoly ya = ZElement::gen(y).power(a).eval(n, r);
      auto c = lad.ratio_mod_T(v.eval(n, r), ya);
      bool ok = c && !c->is_zero() && !lad.in_T(ya);
      std::string norm = "undefined";
      if (ok) {
        if (a == 1) c1 = *c;
        RatFunc ratio = *c;
        for (int s = 0; s < a; ++s) ratio /= c1;
        auto at1 = ratio.eval(1);
        ok = at1 && *at1 == fact;
        norm = ratio.to_string();
      }
      pass = pass && ok;
      rows.push_back({{"j", k + l}, {"from", x.to_string()}, {"to", y.to_string()}, {"a", a},
                      {"C_a", c ? c->to_string() : "none"}, {"C_a_over_C_1_pow_a", norm}, {"ok", ok}});
    }
  }
  res.got = rows;
  res.pass = pass;
  res.millis = sw.millis();
  return res;
}

}  // namespace qgrass
