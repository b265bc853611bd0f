#pragma once

#include "qgrass/ncpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgrass {

// Strictly increasing subset of {1, 2, ...}.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> elems);
  IndexSet(std::initializer_list<int> elems) : IndexSet(std::vector<int>(elems)) {}
  static IndexSet range(int a, int b);  // {a..b}, empty when a > b

  const std::vector<int>& elems() const { return e_; }
  int size() const { return static_cast<int>(e_.size()); }
  bool empty() const { return e_.empty(); }
  bool contains(int x) const;
  int max() const { return e_.empty() ? 0 : e_.back(); }
  IndexSet complement(int n) const;
  IndexSet complement_in(const IndexSet& universe) const;
  bool subset_of(const IndexSet& o) const;
  IndexSet with(int x) const;
  IndexSet without(int x) const;

  std::string to_string() const;
  static IndexSet parse(const std::string& s);
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> e_;
};

std::vector<IndexSet> subsets(int n, int size);
std::vector<IndexSet> subsets_of(const IndexSet& universe, int size);

int inversion_count(const IndexSet& s, const IndexSet& t);
// (I \ {i}) u {j}; I itself when i == j; nullopt (zero minor) when i is not in I
// or when j already lies in I.
std::optional<IndexSet> index_surgery(const IndexSet& I, int i, int j);

// z^I_J, column-permuting expansion (rows already ordered)
NCPoly minor(int n, const IndexSet& I, const IndexSet& J);
NCPoly minor(int n, const std::optional<IndexSet>& I, const std::optional<IndexSet>& J);
// row-permuting expansion, normal-formed
NCPoly minor_row_form(int n, const IndexSet& I, const IndexSet& J);

bool laplace_check(int n, const IndexSet& I, const IndexSet& J, const IndexSet& J1);

IndexSet block_R(int r);
IndexSet block_Rc(int n, int r);
NCPoly z_plus(int n, int r, const IndexSet& I);
NCPoly z_bar(int n, int r, const IndexSet& J);
NCPoly z_gr(int n, int r, const IndexSet& I, const IndexSet& J);
// z^R_I, the lower-indexed generators of the twisted ladder
NCPoly z_lower(int n, int r, const IndexSet& I);

bool star_minor_check(int n, const IndexSet& I, const IndexSet& J);

RatFunc minus_q_power(int k);

}  // namespace qgrass
