#include "qgrass/ncpoly.hpp"

#include "qgrass/exact_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace qgrass {

namespace {

struct PairTerm {
  RatFunc c;
  int a, b;  // a <= b
};

const RatFunc& q_minus_qinv() {
  static thread_local const RatFunc v = RatFunc::q() - RatFunc::q_pow(-1);
  return v;
}

// rewrite x*y with x > y as a combination of ordered pairs
std::vector<PairTerm> rewrite_pair(int n, int x, int y) {
  int a = x / n, b = x % n, c = y / n, d = y % n;
  if (a == c || b == d) return {{RatFunc::q_pow(-1), y, x}};
  if (b < d) return {{RatFunc(1), y, x}};
  return {{RatFunc(1), y, x}, {-q_minus_qinv(), c * n + b, a * n + d}};
}

using Cache = std::unordered_map<std::string, NCPoly>;

Cache& product_cache(int n) {
  static thread_local std::vector<Cache> caches(8);
  if (n >= static_cast<int>(caches.size())) caches.resize(n + 1);
  return caches[n];
}

// normal monomial m times generator g
const NCPoly& mono_times_gen(int n, const Word& m, int g) {
  Cache& cache = product_cache(n);
  std::string key = m.str();
  key.push_back(static_cast<char>(g));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  NCPoly out(n);
  if (m.empty() || m.letter(m.size() - 1) <= g) {
    out.add_term(Word(key), 1);
  } else {
    int x = m.letter(m.size() - 1);
    Word pre = m.sub(0, m.size() - 1);
    for (const auto& t : rewrite_pair(n, x, g)) {
      NCPoly left = mono_times_gen(n, pre, t.a);
      for (const auto& [w, c] : left.terms()) {
        const NCPoly& right = mono_times_gen(n, w, t.b);
        RatFunc f = t.c * c;
        for (const auto& [w2, c2] : right.terms()) out.add_term(w2, f * c2);
      }
    }
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

NCPoly times_gen(const NCPoly& p, int g) {
  NCPoly out(p.n());
  for (const auto& [w, c] : p.terms()) {
    const NCPoly& r = mono_times_gen(p.n(), w, g);
    for (const auto& [w2, c2] : r.terms()) out.add_term(w2, c * c2);
  }
  return out;
}

int inversions(const std::vector<int>& p) {
  int r = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++r;
  return r;
}

RatFunc minus_q_pow(int k) {
  RatFunc r = RatFunc::q_pow(k);
  return (k % 2 != 0) ? -r : r;
}

// signed sum over permutations of the column list, rows fixed increasing
NCPoly ordered_minor(int n, const std::vector<int>& rows, std::vector<int> cols) {
  NCPoly out(n);
  std::sort(cols.begin(), cols.end());
  do {
    Word w;
    for (std::size_t t = 0; t < rows.size(); ++t) w.push(letter_of(n, rows[t], cols[t]));
    out.add_term(w, minus_q_pow(inversions(cols)));
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && s.substr(i, sep.size()) == sep) {
      out.push_back(s.substr(start, i - start));
      i += sep.size() - 1;
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

Word Word::of(int n, const std::vector<Gen>& gens) {
  Word w;
  for (const auto& g : gens) {
    if (g.row < 1 || g.row > n || g.col < 1 || g.col > n) throw std::out_of_range("Word::of: generator index");
    w.push(letter_of(n, g.row, g.col));
  }
  return w;
}

bool Word::is_normal() const {
  for (std::size_t k = 1; k < s_.size(); ++k)
    if (letter(k - 1) > letter(k)) return false;
  return true;
}

NCPoly NCPoly::scalar(int n, const RatFunc& c) {
  NCPoly p(n);
  p.add_term(Word(), c);
  return p;
}

NCPoly NCPoly::gen(int n, int row, int col) {
  if (row < 1 || row > n || col < 1 || col > n) throw std::out_of_range("NCPoly::gen: index");
  return from_normal_word(n, Word::of(n, {{row, col}}));
}

NCPoly NCPoly::from_normal_word(int n, const Word& w, const RatFunc& c) {
  NCPoly p(n);
  p.add_term(w, c);
  return p;
}

RatFunc NCPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? RatFunc() : it->second;
}

bool NCPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  std::size_t d = t_.begin()->first.size();
  for (const auto& [w, c] : t_)
    if (w.size() != d) return false;
  return true;
}

int NCPoly::degree() const {
  if (t_.empty()) return -1;
  if (!is_homogeneous()) throw std::invalid_argument("NCPoly::degree: not homogeneous");
  return static_cast<int>(t_.begin()->first.size());
}

std::map<int, NCPoly> NCPoly::homogeneous_parts() const {
  std::map<int, NCPoly> parts;
  for (const auto& [w, c] : t_) {
    auto it = parts.try_emplace(static_cast<int>(w.size()), n_).first;
    it->second.t_.emplace(w, c);
  }
  return parts;
}

void NCPoly::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

void NCPoly::check(const NCPoly& o) const {
  if (o.n_ != n_) throw std::invalid_argument("NCPoly: ambient size mismatch");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, x] : t_) x *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& [w, x] : p.t_) x = -x;
  return p;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) { return mul(a, b); }

NCPoly NCPoly::map_coeffs(const std::function<RatFunc(const Word&, const RatFunc&)>& f) const {
  NCPoly p(n_);
  for (const auto& [w, c] : t_) p.add_term(w, f(w, c));
  return p;
}

std::string format_gen(const Gen& g) { return "u[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]"; }

std::string NCPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : t_) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    if (!w.empty()) s += " *";
    for (std::size_t k = 0; k < w.size(); ++k) s += " " + format_gen(w.gen(n_, k));
  }
  return s;
}

NCPoly NCPoly::parse(int n, std::string_view s) {
  s = trim(s);
  NCPoly out(n);
  if (s == "0" || s.empty()) return out;
  for (auto term : split_top(s, " + ")) {
    term = trim(term);
    auto parts = split_top(term, "*");
    RatFunc c = 1;
    std::string_view gens;
    if (parts.size() == 1) {
      if (!term.empty() && term.front() == 'u')
        gens = term;
      else
        c = RatFunc::parse(term);
    } else if (parts.size() == 2) {
      c = RatFunc::parse(parts[0]);
      gens = parts[1];
    } else {
      throw std::invalid_argument("NCPoly::parse: bad term " + std::string(term));
    }
    Word w;
    gens = trim(gens);
    while (!gens.empty()) {
      if (gens.substr(0, 2) != "u[") throw std::invalid_argument("NCPoly::parse: bad generator in " + std::string(term));
      auto close = gens.find(']');
      auto comma = gens.find(',');
      if (close == std::string_view::npos || comma == std::string_view::npos || comma > close)
        throw std::invalid_argument("NCPoly::parse: bad generator in " + std::string(term));
      int i = std::stoi(std::string(gens.substr(2, comma - 2)));
      int j = std::stoi(std::string(gens.substr(comma + 1, close - comma - 1)));
      if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("NCPoly::parse: generator index");
      w.push(letter_of(n, i, j));
      gens = trim(gens.substr(close + 1));
    }
    out += normal_form(n, w, c);
  }
  return out;
}

NCPoly normal_form(int n, const Word& w, const RatFunc& coeff) {
  NCPoly p = NCPoly::scalar(n, coeff);
  if (coeff.is_zero()) return p;
  for (std::size_t k = 0; k < w.size(); ++k) p = times_gen(p, w.letter(k));
  return p;
}

NCPoly mul(const NCPoly& a, const NCPoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mul: ambient size mismatch");
  NCPoly out(a.n());
  for (const auto& [wb, cb] : b.terms()) {
    NCPoly p = a;
    p *= cb;
    for (std::size_t k = 0; k < wb.size(); ++k) p = times_gen(p, wb.letter(k));
    out += p;
  }
  return out;
}

NCPoly power(const NCPoly& a, int k) {
  NCPoly r = NCPoly::scalar(a.n(), 1);
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

NCPoly normal_form_by_rewriting(int n, const Word& w, RewriteSite site, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<Word, RatFunc> work;
  work.emplace(w, RatFunc(1));
  NCPoly done(n);
  while (!work.empty()) {
    auto it = work.begin();
    if (site == RewriteSite::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
      std::advance(it, pick(rng));
    }
    Word cur = it->first;
    RatFunc c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    std::vector<std::size_t> sites;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k)
      if (cur.letter(k) > cur.letter(k + 1)) sites.push_back(k);
    if (sites.empty()) {
      done.add_term(cur, c);
      continue;
    }
    std::size_t k = sites.front();
    if (site == RewriteSite::Rightmost) k = sites.back();
    if (site == RewriteSite::Random) k = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    for (const auto& t : rewrite_pair(n, cur.letter(k), cur.letter(k + 1))) {
      std::string s = cur.str();
      s[k] = static_cast<char>(t.a);
      s[k + 1] = static_cast<char>(t.b);
      auto [jt, fresh] = work.try_emplace(Word(s), t.c * c);
      if (!fresh) jt->second += t.c * c;
    }
  }
  return done;
}

void TensorPoly::add(const Word& a, const Word& b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace({a, b}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

void TensorPoly::add_product(const NCPoly& a, const NCPoly& b, const RatFunc& c) {
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) add(wa, wb, c * ca * cb);
}

std::vector<std::pair<NCPoly, NCPoly>> TensorPoly::pairs() const {
  std::vector<std::pair<NCPoly, NCPoly>> out;
  for (const auto& [k, c] : t_) {
    if (out.empty() || !(out.back().first == NCPoly::from_normal_word(n_, k.first))) {
      out.emplace_back(NCPoly::from_normal_word(n_, k.first), NCPoly(n_));
    }
    out.back().second.add_term(k.second, c);
  }
  return out;
}

TensorPoly coproduct(const NCPoly& f) {
  int n = f.n();
  TensorPoly out(n);
  for (const auto& [w, c] : f.terms()) {
    std::size_t d = w.size();
    std::vector<int> k(d, 1);
    while (true) {
      Word left, right;
      for (std::size_t t = 0; t < d; ++t) {
        Gen g = w.gen(n, t);
        left.push(letter_of(n, g.row, k[t]));
        right.push(letter_of(n, k[t], g.col));
      }
      out.add_product(normal_form(n, left), normal_form(n, right), c);
      std::size_t t = 0;
      while (t < d && k[t] == n) k[t++] = 1;
      if (t == d) break;
      ++k[t];
    }
  }
  return out;
}

RatFunc counit(const NCPoly& f) {
  RatFunc s;
  for (const auto& [w, c] : f.terms()) {
    bool diag = true;
    for (std::size_t t = 0; t < w.size() && diag; ++t) {
      Gen g = w.gen(f.n(), t);
      diag = g.row == g.col;
    }
    if (diag) s += c;
  }
  return s;
}

NCPoly qdet(int n) {
  if (n < 1) throw std::invalid_argument("qdet: n must be >= 1");
  static thread_local std::map<int, NCPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i + 1;
  NCPoly d = ordered_minor(n, rows, rows);
  cache.emplace(n, d);
  return d;
}

AntipodeValue antipode_gen(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("antipode_gen: index");
  std::vector<int> rows, cols;
  for (int k = 1; k <= n; ++k) {
    if (k != j) rows.push_back(k);
    if (k != i) cols.push_back(k);
  }
  NCPoly p = ordered_minor(n, rows, cols);
  p *= minus_q_pow(i - j);
  return {p, 1};
}

NCPoly antipode_mod_det(const NCPoly& f) {
  int n = f.n();
  NCPoly out(n);
  for (const auto& [w, c] : f.terms()) {
    NCPoly p = NCPoly::scalar(n, c);
    for (std::size_t t = w.size(); t-- > 0;) {
      Gen g = w.gen(n, t);
      p = mul(p, antipode_gen(n, g.row, g.col).p);
    }
    out += p;
  }
  return out;
}

bool eq_mod_det1(const NCPoly& f, const NCPoly& g) {
  int n = f.n();
  NCPoly h = f - g;
  if (h.is_zero()) return true;
  std::map<int, std::vector<std::pair<int, NCPoly>>> classes;
  for (auto& [d, part] : h.homogeneous_parts()) classes[d % n].emplace_back(d, part);
  NCPoly det = qdet(n);
  for (auto& [res, parts] : classes) {
    int top = parts.back().first;
    NCPoly sum(n);
    for (auto& [d, part] : parts) sum += mul(part, power(det, (top - d) / n));
    if (!sum.is_zero()) return false;
  }
  return true;
}

namespace {

using Biweight = std::vector<int>;  // row counts then column counts

std::optional<Biweight> biweight_of(const NCPoly& p) {
  int n = p.n();
  std::optional<Biweight> bw;
  for (const auto& [w, c] : p.terms()) {
    Biweight b(2 * n, 0);
    for (std::size_t t = 0; t < w.size(); ++t) {
      Gen g = w.gen(n, t);
      ++b[g.row - 1];
      ++b[n + g.col - 1];
    }
    if (!bw)
      bw = b;
    else if (*bw != b)
      return std::nullopt;
  }
  return bw;
}

bool fits(const Biweight& partial, const std::vector<Biweight>& targets) {
  for (const auto& t : targets) {
    bool ok = true;
    for (std::size_t i = 0; i < t.size() && ok; ++i) ok = partial[i] <= t[i];
    if (ok) return true;
  }
  return false;
}

struct IdealSpan {
  int n;
  std::unordered_map<Word, int, WordHash> index;
  Echelon echelon;

  SparseVec vec(const NCPoly& p) {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) {
      auto it = index.try_emplace(w, static_cast<int>(index.size())).first;
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
};

// products a*g*b of total degree D, letters combined in every order
void build_ideal_span(IdealSpan& span, int D, const std::vector<NCPoly>& gens, const std::vector<NCPoly>& letters,
                      bool normal_monomials_only, const std::vector<Biweight>& targets) {
  int n = span.n;
  std::vector<std::optional<Biweight>> lw;
  bool graded = !targets.empty();
  for (const auto& l : letters) {
    lw.push_back(biweight_of(l));
    graded = graded && lw.back().has_value();
  }
  std::vector<int> ldeg;
  for (const auto& l : letters) ldeg.push_back(l.degree());

  // all letter sequences of exact degree d, with product and biweight
  struct Seq {
    NCPoly p;
    Biweight bw;
  };
  std::map<int, std::vector<Seq>> seqs;
  auto sequences = [&](int d) -> const std::vector<Seq>& {
    auto it = seqs.find(d);
    if (it != seqs.end()) return it->second;
    std::vector<Seq> out;
    std::function<void(int, int, const NCPoly&, const Biweight&)> rec = [&](int left, int minl, const NCPoly& acc,
                                                                          const Biweight& bw) {
      if (left == 0) {
        out.push_back({acc, bw});
        return;
      }
      for (std::size_t i = normal_monomials_only ? minl : 0; i < letters.size(); ++i) {
        if (ldeg[i] > left || ldeg[i] <= 0) continue;
        Biweight nb = bw;
        if (graded)
          for (std::size_t x = 0; x < nb.size(); ++x) nb[x] += (*lw[i])[x];
        if (graded && !fits(nb, targets)) continue;
        rec(left - ldeg[i], static_cast<int>(i), mul(acc, letters[i]), nb);
      }
    };
    rec(d, 0, NCPoly::scalar(n, 1), Biweight(2 * n, 0));
    return seqs.emplace(d, std::move(out)).first->second;
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = g.degree();
    if (dg > D) continue;
    auto gbw = biweight_of(g);
    bool use_bw = graded && gbw.has_value();
    for (int da = 0; da <= D - dg; ++da) {
      int db = D - dg - da;
      for (const auto& a : sequences(da)) {
        NCPoly ag = mul(a.p, g);
        for (const auto& b : sequences(db)) {
          if (use_bw) {
            Biweight t = a.bw;
            for (std::size_t x = 0; x < t.size(); ++x) t[x] += (*gbw)[x] + b.bw[x];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) continue;
          }
          span.echelon.insert(span.vec(mul(ag, b.p)));
        }
      }
    }
  }
}

std::vector<NCPoly> all_generators(int n) {
  std::vector<NCPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(NCPoly::gen(n, i, j));
  return out;
}

std::vector<Biweight> target_weights(const std::vector<const NCPoly*>& ps) {
  std::vector<Biweight> out;
  for (const NCPoly* p : ps) {
    int n = p->n();
    for (const auto& [w, c] : p->terms()) {
      Biweight b(2 * n, 0);
      for (std::size_t t = 0; t < w.size(); ++t) {
        Gen g = w.gen(n, t);
        ++b[g.row - 1];
        ++b[n + g.col - 1];
      }
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
  }
  return out;
}

std::optional<std::vector<RatFunc>> solve_impl(const NCPoly& f, const std::vector<NCPoly>& gens,
                                               const std::vector<NCPoly>& letters, bool normal_monomials_only,
                                               const std::vector<NCPoly>& targets) {
  int n = f.n();
  if (!f.is_homogeneous()) throw std::invalid_argument("ideal membership: element is not homogeneous");
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal membership: generator is not homogeneous");
  for (const auto& t : targets)
    if (!t.is_homogeneous()) throw std::invalid_argument("ideal membership: target is not homogeneous");
  std::vector<RatFunc> coeffs(targets.size());
  if (f.is_zero()) return coeffs;
  int D = f.degree();
  std::vector<const NCPoly*> all{&f};
  for (const auto& t : targets) all.push_back(&t);
  IdealSpan span{n, {}, {}};
  build_ideal_span(span, D, gens, letters, normal_monomials_only, target_weights(all));
  SparseVec rf = span.echelon.reduce(span.vec(f));
  if (rf.empty()) return coeffs;
  if (targets.empty()) return std::nullopt;
  // second stage: targets reduced modulo the ideal, tagged by extra coordinates
  const int tag = 1 << 28;
  Echelon te;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    SparseVec v = span.echelon.reduce(span.vec(targets[t]));
    v.emplace_back(tag + static_cast<int>(t), RatFunc(1));
    te.insert(v);
  }
  SparseVec r = te.reduce(rf);
  for (const auto& [c, x] : r) {
    if (c < tag) return std::nullopt;
    coeffs[c - tag] = -x;
  }
  return coeffs;
}

}  // namespace

bool ideal_membership_graded(const NCPoly& f, const std::vector<NCPoly>& gens, int max_deg) {
  if (!f.is_homogeneous()) throw std::invalid_argument("ideal_membership_graded: element is not homogeneous");
  if (f.degree() > max_deg) throw std::invalid_argument("ideal_membership_graded: degree above max_deg");
  return solve_impl(f, gens, all_generators(f.n()), true, {}).has_value();
}

bool ideal_membership_graded(const NCPoly& f, const std::vector<NCPoly>& gens, int max_deg,
                             const std::vector<NCPoly>& letters) {
  if (!f.is_homogeneous()) throw std::invalid_argument("ideal_membership_graded: element is not homogeneous");
  if (f.degree() > max_deg) throw std::invalid_argument("ideal_membership_graded: degree above max_deg");
  return solve_impl(f, gens, letters, false, {}).has_value();
}

std::optional<std::vector<RatFunc>> solve_modulo_ideal(const NCPoly& f, const std::vector<NCPoly>& gens,
                                                       const std::vector<NCPoly>& letters,
                                                       const std::vector<NCPoly>& targets) {
  return solve_impl(f, gens, letters, false, targets);
}

}  // namespace qgrass
