#pragma once
#include <optional>
#include <vector>

#include "helly/rank2/sl2.hpp"

namespace helly::rank2 {

// Irreducible rational module Pol_d tensor det^e with a chosen point in it;
// the trivial module (d = 0, e = 0) is rejected.
struct Gl2Component {
  FactoredForm form;
  long det_twist = 0;

  static Gl2Component make(FactoredForm form, long det_twist);
  long weight() const {
    return 2 * det_twist - static_cast<long>(form.degree());
  }
};

struct Gl2Classification {
  std::vector<std::size_t> plus, zero, minus;  // by sign of 2e - d
};

Gl2Classification gl2_classify(const std::vector<Gl2Component>& comps);

// (d - 2 m_L) / (2e - d); defined off the weight-zero class.
Rat mu_slope(const Gl2Component& c, const ProjectiveRoot& l);

// Slopes r/n of one-parameter subgroups with positive eigenvector L whose
// limit on the tuple exists; absent sides are unbounded.
struct SlopeInterval {
  std::optional<Rat> lo, hi;
};
std::optional<SlopeInterval> gl2_feasible_slopes(
    const std::vector<Gl2Component>& comps, const ProjectiveRoot& l);

// Subset J rules out eigenline L: no slope works for v_J along L.
bool gl2_rules_out(const std::vector<Gl2Component>& comps,
                   const std::vector<std::size_t>& j, const ProjectiveRoot& l);

bool gl2_orbit_closed(const std::vector<Gl2Component>& comps);

std::size_t gl2_stabilizer_dimension(const std::vector<Gl2Component>& comps);
std::size_t gl2_orbit_dimension(const std::vector<Gl2Component>& comps);

// Smallest (then lexicographically first) subset of at most 5 components
// with closed orbit of full dimension.
SelectionReport gl2_select(const std::vector<Gl2Component>& comps);

}  // namespace helly::rank2
