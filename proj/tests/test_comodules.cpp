#include <doctest.h>

#include "oracles.hpp"
#include "qgrass/borelweil.hpp"
#include "qgrass/comodules.hpp"

using namespace qgrass;

TEST_SUITE("comodules") {
  TEST_CASE("tableau enumeration agrees with brute force") {
    for (int n = 2; n <= 4; ++n)
      for (int r = 1; r < n && r <= 2; ++r)
        for (int k = 0; k <= 3; ++k) {
          auto T = enumerate_ssyt(r, k, n);
          CHECK(static_cast<long long>(T.size()) == oracle::count_ssyt(r, k, n));
          CHECK(static_cast<long long>(T.size()) == dim_formula(r, k, n));
          auto ref = oracle::semistandard_fillings(r, k, n);
          for (std::size_t a = 0; a < T.size(); ++a) {
            CHECK(T[a].is_semistandard());
            CHECK(std::find(ref.begin(), ref.end(), T[a].entries()) != ref.end());
          }
        }
  }

  TEST_CASE("dimension formula") {
    CHECK(dim_formula(1, 3, 2) == 4);
    CHECK(dim_formula(1, 2, 3) == 6);
    CHECK(dim_formula(2, 1, 4) == 6);
    CHECK(dim_formula(2, 2, 4) == 20);
    CHECK(dim_formula(1, 0, 5) == 1);
    CHECK_THROWS(dim_formula(3, 1, 3));
    CHECK_THROWS(dim_formula(1, -1, 3));
  }

  TEST_CASE("semistandardness") {
    CHECK(Tableau(2, 2, {1, 1, 2, 2}).is_semistandard());
    CHECK_FALSE(Tableau(2, 2, {1, 2, 1, 3}).is_semistandard());
    CHECK_FALSE(Tableau(1, 2, {2, 1}).is_semistandard());
    CHECK(Tableau(2, 2, {1, 2, 3, 4}).column(1) == IndexSet{2, 4});
    CHECK_THROWS(standard_monomial(3, Tableau(1, 2, {3, 1})));
  }

  TEST_CASE("standard monomials are independent") {
    for (auto [n, r, k] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 1, 2}, {3, 2, 2}, {4, 2, 1}, {4, 2, 2}}) {
      std::vector<NCPoly> v;
      for (const auto& T : enumerate_ssyt(r, k, n)) v.push_back(standard_monomial(n, T));
      CHECK(span_rank(v) == dim_formula(r, k, n));
    }
  }

  TEST_CASE("weights") {
    CHECK(k_weight(2, Word::of(2, {{1, 1}})) == std::vector<int>{-1});
    CHECK(k_weight(2, Word::of(2, {{2, 1}})) == std::vector<int>{1});
    CHECK(k_weight(2, Word::of(2, {{2, 1}}), WeightSide::Column) == std::vector<int>{-1});
    CHECK(k_weight(qdet(3)) == std::vector<int>{0, 0});
    CHECK_THROWS(k_weight(NCPoly::gen(2, 1, 1) + NCPoly::gen(2, 2, 1)));
    // a standard monomial has the weight of its filling
    Tableau T(1, 2, {1, 3});
    CHECK(k_weight(standard_monomial(3, T)) == std::vector<int>{-1, 1});
  }
}
