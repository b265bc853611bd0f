#pragma once

#include "qgrass/calculus.hpp"
#include "qgrass/ncpoly.hpp"
#include "qgrass/report.hpp"
#include "qgrass/rform.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qgrass {

// Independent spanning set of the degree-k line bundle E_k inside C_q[M_n].
// k > 0: k-fold products of z^I; k < 0: of zbar^J. `extra` further z^{IJ} factors are
// allowed, padded with powers of det so that the set stays homogeneous.
struct BundleSpan {
  int n = 0, r = 0, k = 0, extra = 0;
  std::vector<NCPoly> basis;
  std::vector<std::string> raw_span;      // every product that was tried
  std::vector<std::string> basis_labels;  // the independent ones, in order
};

BundleSpan bundle_span(int n, int r, int k, int extra = 0);

enum class Holo { Dbar, Del };

struct KernelOptions {
  const RTable* table = nullptr;  // defaults to the unscaled table
  int jobs = 1;
  bool prescreen = false;  // numeric rank at random points before the exact pass
  std::uint64_t seed = 0;
};

struct KernelResult {
  int dim = 0;
  std::vector<NCPoly> basis;
  int prescreen_rank = -1;
};

// exact kernel of the stacked operators on span(s.basis)
KernelResult joint_kernel(const BundleSpan& s, const std::vector<Holo>& ops, const KernelOptions& opt = {});
KernelResult h0(const BundleSpan& s, Holo op = Holo::Dbar, const KernelOptions& opt = {});

// rank of a family of elements of C_q[M_n]
int span_rank(const std::vector<NCPoly>& elems);

CheckResult verify_borel_weil(int n, int r, int k, const KernelOptions& opt = {});
CheckResult verify_coordinate_ring(int n, int r, int k_max, const KernelOptions& opt = {});
CheckResult verify_opposite(int n, int r, int k, const KernelOptions& opt = {});
CheckResult verify_connectedness(int n, int r, int max_deg, const KernelOptions& opt = {});
CheckResult verify_ell(int n, int r, int k_max);

}  // namespace qgrass
