#pragma once
#include <cstddef>
#include <vector>

#include "helly/actions/table_group.hpp"

namespace helly::actions {

// Diagonal action of a table group on a product of left coset spaces G/H_i.
// Points of factor i are the left cosets of H_i, indexed in order of their
// minimal element.
class CosetSpaceAction {
 public:
  CosetSpaceAction(FiniteGroupTable group,
                   std::vector<std::vector<std::size_t>> point_stabilizers);

  const FiniteGroupTable& group() const { return group_; }
  std::size_t factor_count() const { return stabilizers_.size(); }
  std::size_t cosets_in_factor(std::size_t i) const {
    return coset_reps_[i].size();
  }
  // coset index of g * (coset c) in factor i
  std::size_t act(std::size_t g, std::size_t i, std::size_t c) const;
  // coset index of the coset containing element a in factor i
  std::size_t coset_of(std::size_t i, std::size_t a) const {
    return coset_index_[i][a];
  }

 private:
  FiniteGroupTable group_;
  std::vector<std::vector<std::size_t>> stabilizers_;
  std::vector<std::vector<std::size_t>> coset_reps_;
  std::vector<std::vector<std::size_t>> coset_index_;  // element -> coset id
};

// One coset index per factor.
struct ProductPoint {
  std::vector<std::size_t> coords;
};

bool same_orbit(const CosetSpaceAction& action, const ProductPoint& x,
                const ProductPoint& y);

// Minimum-size index subset I with x_I and y_I in different orbits.
std::vector<std::size_t> min_separating_projection(
    const CosetSpaceAction& action, const ProductPoint& x,
    const ProductPoint& y);

// From a critical coset system (empty total intersection, all proper
// subsystems nonempty) build the product action on G/H_i with the two points
// whose minimum separating projection is the full index set.
struct OrbitWitness {
  CosetSpaceAction action;
  ProductPoint x, y;
};
OrbitWitness helly_to_orbit_witness(
    const FiniteGroupTable& group,
    const std::vector<std::vector<std::size_t>>& subgroups,
    const std::vector<std::size_t>& representatives);

}  // namespace helly::actions
