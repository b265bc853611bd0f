#include <doctest.h>

#include "qgrass/commands.hpp"
#include "qgrass/rform.hpp"

using namespace qgrass;

namespace {

RatFunc q() { return RatFunc::q(); }
RatFunc nu() { return q() - RatFunc::q_pow(-1); }

// r on generators straight from its defining formula, theta(0) = 0
RatFunc r_formula(int i, int j, int k, int l) {
  RatFunc v = 0;
  if (i == j && k == l) v += RatFunc::q_pow(i == k ? 1 : 0);
  if (i > k && i == l && k == j) v += nu();
  return v;
}

}  // namespace

TEST_SUITE("rform") {
  TEST_CASE("generator table") {
    CHECK(r_gen(2, 1, 1, 1, 1) == q());
    CHECK(r_gen(2, 2, 1, 1, 2) == nu());
    CHECK(r_gen(2, 1, 2, 2, 1).is_zero());
    for (int n : {2, 3, 4})
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) CHECK(r_gen(n, i, j, k, l) == r_formula(i, j, k, l));
  }

  TEST_CASE("transfer matrices") {
    const RTable& t = unscaled_table(2);
    CHECK(l_plus(t, Word()) == ExactMatrix::identity(2));
    ExactMatrix m = l_plus(t, Word::of(2, {{1, 1}}));
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= 2; ++a) CHECK(m.at(i - 1, a - 1) == r_gen(2, i, a, 1, 1));
    Word w = Word::of(2, {{1, 1}, {2, 2}});
    CHECK(l_plus(t, w) == l_plus(t, Word::of(2, {{2, 2}})) * l_plus(t, Word::of(2, {{1, 1}})));
    // entrywise agreement with the axiom expansion
    for (int n : {2, 3}) {
      const RTable& tn = unscaled_table(n);
      Word v = Word::of(n, {{1, 2}, {2, 1}, {n, n}});
      NCPoly g = NCPoly::from_normal_word(n, v);
      ExactMatrix lp = l_plus(tn, v), lm = l_minus(tn, v);
      for (int i = 1; i <= n; ++i)
        for (int a = 1; a <= n; ++a) {
          CHECK(lp.at(i - 1, a - 1) == r_eval(tn, NCPoly::gen(n, i, a), g));
          CHECK(lm.at(a - 1, i - 1) == r_eval(tn, g, NCPoly::gen(n, a, i)));
        }
    }
  }

  TEST_CASE("coquasi-triangular axioms on generator triples") {
    for (int n : {2, 3}) CHECK(check_r_axioms(n).pass);
  }

  TEST_CASE("Killing form of the unit and of generators") {
    for (int n : {2, 3, 4}) CHECK(killing_Q(NCPoly::scalar(n, 1)) == ExactMatrix::identity(n));
    for (int n : {2, 3}) CHECK(check_goodearl(n).pass);
  }

  TEST_CASE("brute-force and transfer evaluation agree") {
    for (int n : {2, 3, 4}) CHECK(check_q_modes(n).pass);
  }

  TEST_CASE("support predicates") {
    CHECK_FALSE(goodearl_support_r(1, 2, IndexSet{1}, IndexSet{2}));
    CHECK(r_eval(unscaled_table(2), NCPoly::gen(2, 1, 2), NCPoly::gen(2, 1, 2)).is_zero());
    CHECK(goodearl_support_r(2, 1, IndexSet{1}, IndexSet{2}));
    CHECK_FALSE(r_eval(unscaled_table(2), NCPoly::gen(2, 2, 1), NCPoly::gen(2, 1, 2)).is_zero());
  }

  TEST_CASE("diagonal constants on the distinguished minors") {
    // measured values with the unscaled table
    for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
      KillingMatrix Qz = killing_Q(z_plus(n, r, block_R(r)));
      KillingMatrix Qzb = killing_Q(z_bar(n, r, block_Rc(n, r)));
      for (int i = 1; i <= n; ++i) {
        if (i <= r) CHECK(Qz.at(i - 1, i - 1) == RatFunc::q_pow(2));
        CHECK(Qzb.at(i - 1, i - 1) == RatFunc::q_pow(i <= r ? 0 : 2));
      }
    }
  }

  TEST_CASE("grassmann generator with full blocks acts like the unit") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}})
      CHECK(check_killing_constants(n, r).got["Q_zRRc_is_q2_identity"] == true);
  }
}
