#include <doctest.h>

#include "qgrass/borelweil.hpp"
#include "qgrass/comodules.hpp"

using namespace qgrass;

TEST_SUITE("borelweil") {
  TEST_CASE("spanning sets") {
    BundleSpan a = bundle_span(2, 1, 1);
    CHECK(a.basis.size() == 2);
    CHECK(a.basis_labels.size() == a.basis.size());
    BundleSpan b = bundle_span(3, 1, 2);
    CHECK(b.raw_span.size() == 9);
    CHECK(b.basis.size() == 6);
    BundleSpan c = bundle_span(3, 1, -1);
    CHECK(c.basis.size() == 3);
    for (const auto& p : b.basis) CHECK(p.is_homogeneous());
    BundleSpan z = bundle_span(2, 1, 0, 1);
    CHECK_FALSE(z.basis.empty());
  }

  TEST_CASE("holomorphic sections of the positive bundles") {
    for (auto [n, r, kmax] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 1, 2}, {3, 2, 2}, {4, 2, 1}}) {
      int prev = 0;
      for (int k = 1; k <= kmax; ++k) {
        int d = h0(bundle_span(n, r, k)).dim;
        CHECK(d == dim_formula(r, k, n));
        CHECK(d > prev);
        prev = d;
      }
    }
  }

  TEST_CASE("no holomorphic sections in negative degree") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}})
      for (int k = -2; k <= -1; ++k) CHECK(h0(bundle_span(n, r, k)).dim == 0);
  }

  TEST_CASE("prescreen and jobs do not change the answer") {
    KernelOptions o;
    o.jobs = 2;
    o.prescreen = true;
    o.seed = 7;
    KernelResult a = h0(bundle_span(3, 1, -1), Holo::Dbar, o), b = h0(bundle_span(3, 1, -1));
    CHECK(a.dim == b.dim);
    CHECK(a.prescreen_rank >= 0);
  }

  TEST_CASE("verdicts") {
    CHECK(verify_borel_weil(2, 1, 2).pass);
    CHECK(verify_borel_weil(3, 1, 0).pass);
    CHECK(verify_opposite(2, 1, 2).pass);
    CHECK(verify_opposite(3, 1, 1).pass);
    CHECK(verify_connectedness(2, 1, 1).pass);
    CHECK(verify_connectedness(3, 1, 2).pass);
    CHECK(verify_coordinate_ring(2, 1, 2).pass);
    CHECK(verify_coordinate_ring(3, 1, 2).pass);
    CHECK(verify_ell(2, 1, 2).pass);
    CHECK(verify_ell(3, 2, 1).pass);
  }

  TEST_CASE("rank of families") {
    NCPoly a = NCPoly::gen(2, 1, 1), b = NCPoly::gen(2, 1, 2);
    CHECK(span_rank({a, b, a + b}) == 2);
    CHECK(span_rank({}) == 0);
    CHECK(span_rank({NCPoly(2)}) == 0);
  }
}
