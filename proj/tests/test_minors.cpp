#include <doctest.h>

#include "qgrass/commands.hpp"
#include "qgrass/minors.hpp"

#include <algorithm>
#include <numeric>

using namespace qgrass;

namespace {

// classical sub-determinant as a map from sorted monomials to integer coefficients
std::map<Word, mpq_class> classical_minor(int n, const IndexSet& I, const IndexSet& J) {
  std::vector<int> p(I.size());
  std::iota(p.begin(), p.end(), 0);
  std::map<Word, mpq_class> out;
  do {
    std::vector<int> letters;
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a) {
      letters.push_back(letter_of(n, I.elems()[p[a]], J.elems()[a]));
      for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
    }
    std::sort(letters.begin(), letters.end());
    Word w;
    for (int l : letters) w.push(l);
    out[w] += inv % 2 ? -1 : 1;
  } while (std::next_permutation(p.begin(), p.end()));
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_SUITE("minors") {
  TEST_CASE("inversion counts") {
    CHECK(inversion_count(IndexSet{1}, IndexSet{2}) == 0);
    CHECK(inversion_count(IndexSet{2}, IndexSet{1}) == 1);
    CHECK(inversion_count(IndexSet{2, 4}, IndexSet{1, 3}) == 3);
  }

  TEST_CASE("index surgery") {
    CHECK(index_surgery(IndexSet{1, 2}, 2, 3) == IndexSet{1, 3});
    CHECK(index_surgery(IndexSet{1, 2}, 1, 1) == IndexSet{1, 2});
    CHECK_FALSE(index_surgery(IndexSet{1, 2}, 3, 4).has_value());
    CHECK(minor(3, index_surgery(IndexSet{1, 2}, 3, 4), IndexSet{1, 2}).is_zero());
    CHECK_THROWS(IndexSet({2, 1}));
  }

  TEST_CASE("small minors") {
    CHECK(minor(2, IndexSet{1}, IndexSet{1}) == NCPoly::gen(2, 1, 1));
    CHECK(minor(2, IndexSet{1, 2}, IndexSet{1, 2}) == qdet(2));
    CHECK(minor(4, IndexSet::range(1, 4), IndexSet::range(1, 4)) == qdet(4));
    CHECK_THROWS(minor(3, IndexSet{1}, IndexSet{1, 2}));
    CHECK(z_plus(2, 1, IndexSet{1}) == NCPoly::gen(2, 1, 1));
    CHECK(z_bar(2, 1, IndexSet{2}) == NCPoly::gen(2, 2, 2));
    CHECK(z_gr(3, 1, IndexSet{2}, IndexSet{1, 3}) == mul(z_plus(3, 1, IndexSet{2}), z_bar(3, 1, IndexSet{1, 3})));
    CHECK_THROWS(z_plus(3, 1, IndexSet{1, 2}));
  }

  TEST_CASE("row and column expansions agree") {
    for (int n : {2, 3, 4})
      for (int s = 1; s <= n; ++s)
        for (const auto& I : subsets(n, s))
          for (const auto& J : subsets(n, s)) CHECK(minor(n, I, J) == minor_row_form(n, I, J));
  }

  TEST_CASE("minors specialize to classical determinants at q = 1") {
    for (int n : {2, 3})
      for (int s = 1; s <= n; ++s)
        for (const auto& I : subsets(n, s))
          for (const auto& J : subsets(n, s)) {
            std::map<Word, mpq_class> at1;
            NCPoly m = minor(n, I, J);
            for (const auto& [w, c] : m.terms())
              if (auto v = c.eval(1); v && *v != 0) at1[w] = *v;
            CHECK(at1 == classical_minor(n, I, J));
          }
  }

  TEST_CASE("Laplace expansions") {
    CHECK(laplace_check(2, IndexSet{1, 2}, IndexSet{1, 2}, IndexSet{1}));
    CHECK(laplace_check(3, IndexSet{1, 3}, IndexSet{2, 3}, IndexSet{2, 3}));
    CHECK_THROWS(laplace_check(3, IndexSet{1, 3}, IndexSet{2, 3}, IndexSet{1}));
    for (int n : {2, 3}) CHECK(check_laplace(n).pass);
  }

  TEST_CASE("antipode of minors") {
    CHECK(eq_mod_det1(antipode_mod_det(NCPoly::gen(2, 1, 1)), NCPoly::gen(2, 2, 2)));
    CHECK(eq_mod_det1(antipode_mod_det(minor(2, IndexSet{2}, IndexSet{1})), NCPoly::gen(2, 2, 1) * -RatFunc::q()));
    CHECK(star_minor_check(2, IndexSet{1}, IndexSet{2}));
    for (int n : {2, 3}) CHECK(check_star(n).pass);
  }
}
