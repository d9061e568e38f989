#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "helly/exact/relint.hpp"

namespace helly::torus {

using exact::Int;
using exact::IntVec;

// A point in a product of linear torus representations, recorded by the
// multiset of characters at which each component is nonzero. An empty factor
// is a zero component.
struct WeightSystem {
  std::size_t rank = 0;                     // torus rank n
  std::vector<std::vector<IntVec>> factors; // weight vectors of length rank

  void validate() const;
  std::vector<IntVec> all_weights() const;
  WeightSystem project(const std::vector<std::size_t>& indices) const;
};

struct ClosednessResult {
  bool closed = false;
  std::optional<exact::StrictCombination> certificate;  // over all_weights()
};

// Closed orbit test: 0 in the relative interior of the weight support.
ClosednessResult orbit_closed(const WeightSystem& w);

// Dimension of the orbit: rational rank of the stacked weight vectors.
std::size_t orbit_dimension(const WeightSystem& w);

struct SteinitzCertificate {
  std::vector<std::size_t> selected;  // indices into the flattened multiset
  exact::StrictCombination combination;
};

// A subset of at most 2*rank(span) weights that keeps 0 in the relative
// interior of its hull and spans the same rational subspace. Greedy removal
// followed by an exhaustive increasing-size search over the reduced pool.
SteinitzCertificate steinitz_subset(const std::vector<IntVec>& weights);

struct SelectionReport {
  std::vector<std::size_t> indices;  // chosen factors, ascending
  bool closed = false;
  std::size_t dim_full = 0;
  std::size_t dim_selected = 0;
  SteinitzCertificate steinitz;  // over the flattened weight list
};

// Factor subset of size <= 2*rank covering a Steinitz weight selection;
// the projected orbit stays closed with unchanged dimension.
SelectionReport select_factors(const WeightSystem& w);

// 2n factors with weights e_i and -e_i: the closed orbit whose every proper
// factor subset loses closedness or dimension.
WeightSystem hard_instance(std::size_t n);

}  // namespace helly::torus
