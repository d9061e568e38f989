#pragma once
#include <vector>

#include "helly/rank2/forms.hpp"

namespace helly::rank2 {

struct SelectionReport {
  std::vector<std::size_t> indices;  // ascending
  bool closed = false;
  std::size_t dim_full = 0;
  std::size_t dim_selected = 0;
};

// Tuples of nonzero binary forms of positive degree (zero components and
// trivial modules are stripped by the caller).

// Closed iff the tuple has no common root of high multiplicity, or every
// component is c_i (L1 L2)^{e_i} for one fixed pair of distinct lines.
bool sl2_orbit_closed(const std::vector<FactoredForm>& forms);

// 0, 1 or 3 by the root configuration.
std::size_t sl2_stabilizer_dimension(const std::vector<FactoredForm>& forms);
std::size_t sl2_orbit_dimension(const std::vector<FactoredForm>& forms);

// Smallest (then lexicographically first) subset of at most 3 components
// with closed orbit of full dimension.
SelectionReport sl2_select(const std::vector<FactoredForm>& forms);

}  // namespace helly::rank2
